#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace prand {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative exact value mantissa * 2^exponent.
///
/// Canonical form: the mantissa is odd, or zero with exponent 0. Equality is
/// therefore structural. Every measure value in the workbench is a Dyadic;
/// there is no floating point on any decision path.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent);

  static Dyadic zero() { return {}; }
  static Dyadic one() { return pow2(0); }
  static Dyadic pow2(std::int64_t e);
  static Dyadic from_int(std::uint64_t n) { return Dyadic(BigInt(n), 0); }

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return mantissa_.is_zero(); }
  bool is_power_of_two() const noexcept { return mantissa_ == 1; }

  /// Position of the highest set bit of the value: floor(log2(value)). Undefined for zero.
  std::int64_t floor_log2() const;
  /// ceil(log2(value)). Undefined for zero.
  std::int64_t ceil_log2() const;

  /// Multiply by 2^k.
  Dyadic scaled(std::int64_t k) const;

  Dyadic& operator+=(const Dyadic& other);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

  /// Canonical "a*2^e" text (a odd or 0).
  std::string str() const;
  /// Parses "a*2^e", "a" or "a/2^k". Throws FormatError.
  static Dyadic parse(const std::string& text);

 private:
  void normalize();

  BigInt mantissa_{0};
  std::int64_t exponent_ = 0;
};

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace prand
