#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagcurv/rational.hpp"

namespace flagcurv {

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
  using Monomial = std::vector<int>;  // exponent per variable

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  /// The coordinate function x_var, var 0-based.
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Evaluates in any commutative ring constructible from Rational.
  template <class R>
  R evaluate(const std::vector<R>& values) const {
    R acc = R(Rational(0));
    for (const auto& [m, c] : terms_) {
      R term = R(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) term = term * values.at(i);
      acc = acc + term;
    }
    return acc;
  }

  /// If this is a scalar multiple c*other, returns c; otherwise zero.
  Rational ratio_to(const Polynomial& other) const;

  /// e.g. "-4*l1^2*l3 - 12*l1*l2*l3 + l2^2*l3" with names prefix+index (1-based).
  std::string str(const std::string& prefix = "l") const;

private:
  void add_term(const Monomial& m, const Rational& c);

  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // constant
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly linear(const Rational& c0, const Rational& c1);  // c0 + c1 t

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; throws on a zero divisor.
  void divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const;
  UniPoly derivative() const;
  /// Divided by its leading coefficient.
  UniPoly monic() const;

  Rational operator()(const Rational& t) const;
  template <class R>
  R evaluate(const R& t) const {
    R acc = R(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + R(*it);
    return acc;
  }

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace flagcurv
