// cota/rational.hpp -- exact rational scalar for all machine weights and network parameters
//
// Every probability, transition weight, and network parameter in this library is an
// exact rational number.  The arithmetic is backed by boost::multiprecision's
// cpp_rational (arbitrary precision, canonical reduced form, positive denominator),
// wrapped in a small value type with controlled constructors so it can serve as an
// Eigen scalar.  Using the backend directly as an Eigen scalar trips a trait
// explosion in the boost 1.7x / g++ 11 combination, so the wrapper also carries its
// own Eigen::NumTraits specialization.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cota {

class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long long n, long long d);
  explicit Rational(Backend v) : v_(std::move(v)) {}

  // Parses "p/q" or "p" (q == 1).  Throws cota::Error on malformed input or q == 0.
  static Rational parse(const std::string& text);

  // Canonical serialization: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  const Backend& backend() const { return v_; }

  // Numerator and denominator in canonical form (reduced, denominator > 0).
  Backend::value_type num() const { return boost::multiprecision::numerator(v_); }
  Backend::value_type den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(Backend(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Number of bits needed to write a rational down: ceil(log2 |p|) + ceil(log2 q),
// with ceil(log2 0) = ceil(log2 1) = 0 and the sign ignored.  This is the size
// measure used for the constant-precision claims about compiled networks.
int precision_of(const Rational& r);

}  // namespace cota

namespace Eigen {

template <>
struct NumTraits<cota::Rational> {
  using Real = cota::Rational;
  using NonInteger = cota::Rational;
  using Literal = cota::Rational;
  using Nested = cota::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return cota::Rational(0); }
  static inline Real dummy_precision() { return cota::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
