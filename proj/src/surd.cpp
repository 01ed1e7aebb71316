#include "flagcurv/surd.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace flagcurv {

SquarefreeSplit squarefree_split(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  mpz_class rest = n;
  mpz_class root = 1;
  mpz_class core = 1;
  // Trial division bound; rest below bound^3 with no factor <= bound is p, pq or p^2.
  const unsigned long bound = 1000000;
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    const mpz_class pp = mpz_class(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        root *= p;
      } else {
        core *= p;
      }
    }
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      root *= r;
    } else {
      const mpz_class limit = mpz_class(bound) * bound * bound;
      if (rest >= limit)
        throw std::domain_error("squarefree_split: cofactor too large to certify squarefree");
      core *= rest;
    }
  }
  return {root, core};
}

Surd::Surd(const Rational& a, const Rational& b, const mpz_class& d) : a_(a), b_(b), d_(d) {
  if (d_ <= 0) throw std::domain_error("Surd: radicand must be positive");
  if (b_.is_zero()) {
    d_ = 1;
    return;
  }
  const auto split = squarefree_split(d_);
  if (split.square_root != 1) {
    b_ *= Rational(split.square_root);
    d_ = split.core;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
  }
}

Surd Surd::sqrt(const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("Surd::sqrt of a negative rational");
  if (r.is_zero()) return Surd();
  // sqrt(p/q) = sqrt(p*q)/q
  const mpz_class pq = r.num() * r.den();
  const auto split = squarefree_split(pq);
  return Surd(Rational(0), Rational(split.square_root, r.den()), split.core);
}

const mpz_class& Surd::common_radicand(const Surd& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero() || d_ == o.d_) return d_;
  throw IncompatibleFields("surds from Q(sqrt(" + d_.get_str() + ")) and Q(sqrt(" +
                           o.d_.get_str() + ")) cannot be combined");
}

Surd& Surd::operator+=(const Surd& o) {
  const mpz_class d = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = b_.is_zero() ? mpz_class(1) : d;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  const mpz_class d = common_radicand(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_.is_zero() ? mpz_class(1) : d;
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw std::domain_error("Surd: division by zero");
  common_radicand(o);
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

int Surd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string Surd::str() const {
  if (b_.is_zero()) return a_.str();
  std::ostringstream os;
  const Rational mag = abs(b_);
  const std::string coeff = mag == Rational(1) ? std::string() : mag.str() + "*";
  if (!a_.is_zero()) {
    os << a_.str() << (b_.sign() < 0 ? "-" : "+");
  } else if (b_.sign() < 0) {
    os << "-";
  }
  os << coeff << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

namespace {

class SurdParser {
public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  Surd run() {
    skip_ws();
    if (pos_ == text_.size()) fail();
    Surd total = term(true);
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+' && text_[pos_] != '-') fail();
      total += term(true);
    }
    return total;
  }

private:
  [[noreturn]] void fail() const {
    throw std::invalid_argument("malformed surd literal: '" + std::string(text_) + "'");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek_sqrt() const { return text_.substr(pos_, 4) == "sqrt"; }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail();
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational rational() {
    const mpz_class num = digits();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const mpz_class den = digits();
      if (den == 0) fail();
      return Rational(num, den);
    }
    return Rational(num);
  }

  Surd radical() {
    pos_ += 4;
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail();
    ++pos_;
    skip_ws();
    const Rational r = rational();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail();
    ++pos_;
    return Surd::sqrt(r);
  }

  Surd term(bool allow_sign) {
    skip_ws();
    int sign = 1;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size()) fail();
    Surd value;
    if (peek_sqrt()) {
      value = radical();
    } else {
      value = Surd(rational());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (!peek_sqrt()) fail();
        value *= radical();
      }
    }
    return sign < 0 ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Surd Surd::parse(std::string_view text) { return SurdParser(text).run(); }

}  // namespace flagcurv
