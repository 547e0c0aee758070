/* This is rational.hpp: exact rational scalar for Eigen dense types.
   int64 numerator/denominator, always reduced, denominator > 0.
   Intermediate products run in 128-bit; anything that cannot be reduced
   back into int64 throws std::overflow_error instead of wrapping. */
#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace equifocal {

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    reduce_assign(nn, dd);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  double to_double() const { return double(num_) / double(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                __int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                __int128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    Rational r;
    r.reduce_assign(n, d);
    return r;
  }

  void reduce_assign(__int128 n, __int128 d) {
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a != 0) { n /= a; d /= a; }
    else { d = 1; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  long long num_;
  long long den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Parses "7", "-3/4"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return Rational(n);
    }
    long long n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    long long d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) throw std::invalid_argument("trailing characters");
    return Rational(n, d);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace equifocal

template <>
struct std::hash<equifocal::Rational> {
  size_t operator()(const equifocal::Rational& r) const noexcept {
    size_t h = std::hash<long long>()(r.num());
    h ^= std::hash<long long>()(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

namespace Eigen {
template <>
struct NumTraits<equifocal::Rational> : GenericNumTraits<equifocal::Rational> {
  typedef equifocal::Rational Real;
  typedef equifocal::Rational NonInteger;
  typedef equifocal::Rational Nested;
  typedef equifocal::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return equifocal::Rational(0); }
  static inline Real dummy_precision() { return equifocal::Rational(0); }
  static inline int digits10() { return 18; }
};
}  // namespace Eigen
