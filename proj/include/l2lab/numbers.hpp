#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace l2lab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on caller mistakes (mixed groups, malformed index sets, bad config).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a pattern window is too small to answer a query.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a configured resource cap (ball radius, enumeration size) is hit.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Signals a broken internal invariant (e.g. a reduction that stops decreasing).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// mantissa * 2^exponent with mantissa odd or zero. All cylinder measures and
/// counts in this library are of this shape, so additions stay exact and cheap.
class Dyadic {
 public:
  Dyadic() : mantissa_(0), exponent_(0) {}
  Dyadic(Integer mantissa, std::int64_t exponent)
      : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
  }
  explicit Dyadic(long v) : mantissa_(v), exponent_(0) { normalize(); }

  static Dyadic power_of_two(std::int64_t e) { return Dyadic(Integer(1), e); }

  const Integer& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }

  Rational to_rational() const {
    Rational r(mantissa_);
    if (exponent_ >= 0) {
      r *= Rational(Integer(1) << static_cast<unsigned>(exponent_));
    } else {
      r /= Rational(Integer(1) << static_cast<unsigned>(-exponent_));
    }
    return r;
  }

  Dyadic operator+(const Dyadic& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::int64_t e = std::min(exponent_, o.exponent_);
    Integer a = mantissa_ << static_cast<unsigned>(exponent_ - e);
    Integer b = o.mantissa_ << static_cast<unsigned>(o.exponent_ - e);
    return Dyadic(a + b, e);
  }
  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const {
    return Dyadic(mantissa_ * o.mantissa_, exponent_ + o.exponent_);
  }

  bool operator==(const Dyadic& o) const {
    return mantissa_ == o.mantissa_ && exponent_ == o.exponent_;
  }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const {
    return (*this - o).mantissa_ < 0;
  }
  bool operator<=(const Dyadic& o) const { return !(o < *this); }

  std::string str() const {
    return mantissa_.str() + "*2^" + std::to_string(exponent_);
  }

 private:
  void normalize() {
    if (mantissa_ == 0) {
      exponent_ = 0;
      return;
    }
    while ((mantissa_ & 1) == 0) {
      mantissa_ >>= 1;
      ++exponent_;
    }
  }

  Integer mantissa_;
  std::int64_t exponent_;
};

/// 2^e as an exact rational.
inline Rational rational_pow2(std::int64_t e) {
  return Dyadic::power_of_two(e).to_rational();
}

}  // namespace l2lab
