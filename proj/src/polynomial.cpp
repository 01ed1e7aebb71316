#include "flagcurv/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagcurv {

namespace {

int degree_of(const Polynomial::Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Appends " + c*body" / " - c*body" with unit coefficients elided.
void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
  const Rational mag = abs(c);
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    os << mag;
  } else if (mag == Rational(1)) {
    os << body;
  } else {
    os << mag << "*" << body;
  }
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(var)] = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

bool Polynomial::is_homogeneous() const {
  const int d = total_degree();
  for (const auto& [m, c] : terms_)
    if (degree_of(m) != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial out(std::max(nvars_, o.nvars_));
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  return *this = std::move(out);
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  return p *= Rational(-1);
}

Rational Polynomial::ratio_to(const Polynomial& other) const {
  if (is_zero() || other.is_zero() || terms_.size() != other.terms_.size()) return Rational(0);
  const auto& [m0, c0] = *terms_.begin();
  const Rational base = other.coefficient(m0);
  if (base.is_zero()) return Rational(0);
  const Rational r = c0 / base;
  for (const auto& [m, c] : terms_)
    if (other.coefficient(m) * r != c) return Rational(0);
  return r;
}

std::string Polynomial::str(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent of the first variable first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string body;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const int e = it->first[i];
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += prefix + std::to_string(i + 1);
      if (e > 1) body += "^" + std::to_string(e);
    }
    append_term(os, first, it->second, body);
    first = false;
  }
  return os.str();
}

UniPoly::UniPoly(const Rational& c) : c_{c} { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::linear(const Rational& c0, const Rational& c1) { return UniPoly({c0, c1}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<std::size_t>(i)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p(*this);
  for (Rational& v : p.c_) v = -v;
  return p;
}

void UniPoly::divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const {
  if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  r = *this;
  std::vector<Rational> qc(static_cast<std::size_t>(std::max(0, degree() - d.degree() + 1)));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rational f = r.leading() / d.leading();
    qc[static_cast<std::size_t>(shift)] = f;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const Rational& v : d.c_) sub.push_back(v * f);
    r -= UniPoly(std::move(sub));
  }
  q = UniPoly(std::move(qc));
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly p(*this);
  const Rational lead = leading();
  for (Rational& v : p.c_) v /= lead;
  return p;
}

Rational UniPoly::operator()(const Rational& t) const { return evaluate<Rational>(t); }

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const std::string body = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    append_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

}  // namespace flagcurv
