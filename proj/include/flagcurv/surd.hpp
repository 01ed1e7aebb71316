#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flagcurv/rational.hpp"

namespace flagcurv {

/// Raised when two surds live in different quadratic fields.
class IncompatibleFields : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// n = square * core with core squarefree. n must be positive.
struct SquarefreeSplit {
  mpz_class square_root;  // sqrt of the square part
  mpz_class core;
};
SquarefreeSplit squarefree_split(const mpz_class& n);

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// d is squarefree and positive; b == 0 normalises d to 1 so that rationals
/// combine with any field. Arithmetic between two irrational surds with
/// different radicands throws IncompatibleFields.
class Surd {
public:
  Surd() = default;
  Surd(int v) : a_(v) {}
  Surd(const Rational& a) : a_(a) {}
  Surd(const Rational& a, const Rational& b, const mpz_class& d);

  /// sqrt(r) for r >= 0, reduced to b*sqrt(d).
  static Surd sqrt(const Rational& r);
  /// Parses "a", "a/b", "a+b*sqrt(d)", "sqrt(d)", "-b*sqrt(d)" and sums thereof.
  static Surd parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const mpz_class& d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Surd conjugate() const { return Surd(a_, -b_, d_); }
  /// a^2 - d b^2
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }
  int sign() const;
  double to_double() const;
  std::string str() const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

private:
  const mpz_class& common_radicand(const Surd& o) const;

  Rational a_;
  Rational b_;
  mpz_class d_ = 1;
};

}  // namespace flagcurv
