#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace prand {

/// An integer extended with -inf and +inf.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::finite), value_(v) {}  // NOLINT implicit

  static constexpr ExtInt infinity() { return ExtInt(Kind::pos_inf); }
  static constexpr ExtInt neg_infinity() { return ExtInt(Kind::neg_inf); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  constexpr Kind kind() const { return kind_; }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      default: return std::to_string(value_);
    }
  }

 private:
  explicit constexpr ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  std::int64_t value_ = 0;
};

}  // namespace prand
