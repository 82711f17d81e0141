#include "prand/dyadic.hpp"

#include <algorithm>

#include "prand/errors.hpp"

namespace prand {

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ < 0) throw Error("Dyadic: negative mantissa");
  normalize();
}

Dyadic Dyadic::pow2(std::int64_t e) {
  Dyadic d;
  d.mantissa_ = 1;
  d.exponent_ = e;
  return d;
}

void Dyadic::normalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  auto tz = static_cast<std::int64_t>(boost::multiprecision::lsb(mantissa_));
  if (tz > 0) {
    mantissa_ >>= tz;
    exponent_ += tz;
  }
}

std::int64_t Dyadic::floor_log2() const {
  return exponent_ + static_cast<std::int64_t>(boost::multiprecision::msb(mantissa_));
}

std::int64_t Dyadic::ceil_log2() const {
  // Canonical mantissa is odd, so the value is a power of two iff mantissa == 1.
  return is_power_of_two() ? exponent_ : floor_log2() + 1;
}

Dyadic Dyadic::scaled(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic d = *this;
  d.exponent_ += k;
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (exponent_ == other.exponent_) {
    mantissa_ += other.mantissa_;
  } else if (exponent_ < other.exponent_) {
    mantissa_ += BigInt(other.mantissa_) << static_cast<unsigned>(other.exponent_ - exponent_);
  } else {
    mantissa_ <<= static_cast<unsigned>(exponent_ - other.exponent_);
    mantissa_ += other.mantissa_;
    exponent_ = other.exponent_;
  }
  normalize();
  return *this;
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic{};
  Dyadic d;
  d.mantissa_ = a.mantissa_ * b.mantissa_;  // product of odd numbers stays odd
  d.exponent_ = a.exponent_ + b.exponent_;
  return d;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) {
    return (a.is_zero() ? 0 : 1) <=> (b.is_zero() ? 0 : 1);
  }
  const std::int64_t ta = a.floor_log2();
  const std::int64_t tb = b.floor_log2();
  if (ta != tb) return ta <=> tb;
  if (a.exponent_ == b.exponent_) return a.mantissa_.compare(b.mantissa_) <=> 0;
  if (a.exponent_ < b.exponent_) {
    BigInt rhs = BigInt(b.mantissa_) << static_cast<unsigned>(b.exponent_ - a.exponent_);
    return a.mantissa_.compare(rhs) <=> 0;
  }
  BigInt lhs = BigInt(a.mantissa_) << static_cast<unsigned>(a.exponent_ - b.exponent_);
  return lhs.compare(b.mantissa_) <=> 0;
}

std::string Dyadic::str() const { return mantissa_.str() + "*2^" + std::to_string(exponent_); }

Dyadic Dyadic::parse(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw FormatError("bad integer");
      return v;
    } catch (const std::exception&) {
      throw FormatError("bad dyadic literal: '" + text + "'");
    }
  };
  auto parse_big = [&](const std::string& s) -> BigInt {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw FormatError("bad dyadic literal: '" + text + "'");
    }
    return BigInt(s);
  };
  if (auto star = text.find("*2^"); star != std::string::npos) {
    return Dyadic(parse_big(text.substr(0, star)), parse_int(text.substr(star + 3)));
  }
  if (auto slash = text.find("/2^"); slash != std::string::npos) {
    return Dyadic(parse_big(text.substr(0, slash)), -parse_int(text.substr(slash + 3)));
  }
  return Dyadic(parse_big(text), 0);
}

}  // namespace prand
