#include "flagcurv/klsc_solver.hpp"

#include <algorithm>
#include <cmath>

namespace flagcurv {

namespace {

void require_supported(const WeightedFlag& wf) {
  const int n = wf.flag.summand_count();
  if (n != 2 && n != 3)
    throw UnsupportedSummandCount("flag " + wf.flag.spec().name + " has " + std::to_string(n) +
                                  " isotropy summands; only 2 and 3 are supported");
}

struct TripleData {
  std::array<int, 3> var;  // 0-based
  std::array<int, 3> eps;
  int s3;
};

TripleData triple_data(const AlmostComplexStructure& J, const TripleWeight& w) {
  const auto e = triple_signs(J, w.triple);
  return {{w.triple.summands[0] - 1, w.triple.summands[1] - 1, w.triple.summands[2] - 1},
          e,
          e[0] * e[1] * e[2] + e[0] + e[1] + e[2]};
}

// Reduced row echelon form of [A | b], pivots searched from the last variable down.
// Returns the pivot variable of each nonzero row, or nullopt if inconsistent.
std::optional<std::vector<int>> rref(Matrix& m, int nvars) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (int col = nvars - 1; col >= 0 && row < m.rows(); --col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.row(row).swap(m.row(sel));
    const Rational p = m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) /= p;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  for (Eigen::Index r = row; r < m.rows(); ++r)
    if (!m(r, nvars).is_zero()) return std::nullopt;
  return pivots;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const UniPoly& p : seq) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void isolate(const std::vector<UniPoly>& sturm, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<std::pair<Rational, Rational>>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  const int vmid = sign_variations(sturm, mid);
  isolate(sturm, lo, mid, vlo, vmid, out);
  isolate(sturm, mid, hi, vmid, vhi, out);
}

}  // namespace

GapPolynomial gap_polynomial(const WeightedFlag& wf, const AlmostComplexStructure& J) {
  require_supported(wf);
  const int n = wf.flag.summand_count();
  if (J.size() != n)
    throw std::invalid_argument("almost complex structure has " + std::to_string(J.size()) +
                                " signs, flag has " + std::to_string(n) + " summands");

  GapPolynomial gp;
  gp.n_vars = n;
  gp.denominator.assign(static_cast<std::size_t>(n), 0);
  for (const TripleWeight& w : wf.weights) {
    Polynomial::Monomial e(static_cast<std::size_t>(n), 0);
    for (int s : w.triple.summands) ++e[static_cast<std::size_t>(s - 1)];
    for (int i = 0; i < n; ++i)
      gp.denominator[static_cast<std::size_t>(i)] =
          std::max(gp.denominator[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
  }

  gp.poly = Polynomial(n);
  for (const TripleWeight& w : wf.weights) {
    const TripleData t = triple_data(J, w);
    const Polynomial la = Polynomial::variable(n, t.var[0]);
    const Polynomial lb = Polynomial::variable(n, t.var[1]);
    const Polynomial lc = Polynomial::variable(n, t.var[2]);
    const Polynomial sum = la + lb + lc;
    const Polynomial lin = Rational(4) * (Rational(t.eps[0]) * la + Rational(t.eps[1]) * lb + Rational(t.eps[2]) * lc) -
                           Rational(t.s3) * sum;

    Polynomial num = Rational(1, 2) * Rational(1, 96) * lin * lin;
    if (t.s3 != 0) {
      const Rational s3sq(t.s3 * t.s3);
      const Polynomial u = Rational(-2) * la + lb + lc;
      const Polynomial v = Rational(-2) * lc + la + lb;
      const Polynomial x = Rational(-2) * lb + la + lc;
      num += Rational(-5, 6) * s3sq * Rational(1, 96) * sum * sum;
      num += Rational(1, 8) * s3sq * Rational(1, 54) * (u * u + v * v + x * x);
    }

    Polynomial::Monomial rest(gp.denominator);
    for (int v : t.var) --rest[static_cast<std::size_t>(v)];
    gp.poly += Rational(12) * Rational(2) * w.m_squared * num * Polynomial::monomial(rest);
  }
  return gp;
}

std::optional<std::vector<std::vector<Rational>>> class_conditions(const WeightedFlag& wf,
                                                                   const AlmostComplexStructure& J,
                                                                   const GrayHervellaClass& cls) {
  const int n = wf.flag.summand_count();
  std::vector<std::vector<Rational>> rows;
  auto push = [&](std::vector<Rational> row) {
    if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); }))
      rows.push_back(std::move(row));
  };
  for (const TripleWeight& w : wf.weights) {
    const TripleData t = triple_data(J, w);
    if (t.s3 != 0) {
      if (!cls.w1) return std::nullopt;
      if (!cls.w2) {
        for (int k = 0; k < 2; ++k) {
          std::vector<Rational> row(static_cast<std::size_t>(n));
          row[static_cast<std::size_t>(t.var[k])] += Rational(1);
          row[static_cast<std::size_t>(t.var[k + 1])] -= Rational(1);
          push(std::move(row));
        }
      }
    }
    if (!cls.w3) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (int k = 0; k < 3; ++k) row[static_cast<std::size_t>(t.var[k])] += Rational(4 * t.eps[k] - t.s3);
      push(std::move(row));
    }
  }
  return rows;
}

std::vector<Surd> SolutionFamily::metric_at(const Surd& t) const {
  std::vector<Surd> out;
  for (const AffineRelation& r : relations) out.push_back(Surd(r.offset) + Surd(r.slope) * t);
  return out;
}

std::vector<Surd> real_roots(const UniPoly& p, bool& exact, int bits) {
  exact = true;
  std::vector<Surd> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    out.emplace_back(-p.coeff(0) / p.coeff(1));
    return out;
  }
  if (p.degree() == 2) {
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) return out;
    const Surd centre(-b / (Rational(2) * a));
    if (disc.is_zero()) {
      out.push_back(centre);
      return out;
    }
    const Surd half = Surd::sqrt(disc) / Surd(Rational(2) * a);
    out = {centre - half, centre + half};
    std::sort(out.begin(), out.end());
    return out;
  }

  exact = false;
  // Square-free part, then a Sturm chain.
  UniPoly g = p, h = p.derivative(), q, r;
  while (!h.is_zero()) {
    g.divmod(h, q, r);
    g = h;
    h = r;
  }
  UniPoly sq;
  p.divmod(g.monic(), sq, r);
  std::vector<UniPoly> sturm{sq, sq.derivative()};
  while (true) {
    sturm[sturm.size() - 2].divmod(sturm.back(), q, r);
    if (r.is_zero()) break;
    sturm.push_back(-r);
  }

  Rational bound(1);
  for (int i = 0; i < sq.degree(); ++i) bound = std::max(bound, Rational(1) + abs(sq.coeff(i) / sq.leading()));
  const Rational lo = -bound, hi = bound;
  std::vector<std::pair<Rational, Rational>> intervals;
  isolate(sturm, lo, hi, sign_variations(sturm, lo), sign_variations(sturm, hi), intervals);

  const Rational width = Rational(mpz_class(1), mpz_class(1) << bits);
  for (auto [a, b] : intervals) {
    // Root lies in (a, b]; bisect on sign.
    if (sq(b).is_zero()) {
      out.emplace_back(b);
      continue;
    }
    while (b - a > width) {
      const Rational mid = (a + b) / Rational(2);
      const int sm = sq(mid).sign();
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sq(b).sign()) b = mid;
      else a = mid;
    }
    out.emplace_back((a + b) / Rational(2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolutionFamily solve(const WeightedFlag& wf, const AlmostComplexStructure& J, const std::map<int, Rational>& fixed,
                     const std::optional<GrayHervellaClass>& constraint) {
  require_supported(wf);
  const int n = wf.flag.summand_count();
  const GapPolynomial gp = gap_polynomial(wf, J);

  SolutionFamily sf;
  sf.flag = wf.flag.spec().slug;
  sf.J = J.str();
  sf.constraint = constraint;
  sf.fixed = fixed;
  for (const auto& [var, value] : fixed) {
    if (var < 1 || var > n) throw std::invalid_argument("fixed variable l" + std::to_string(var) + " out of range");
    if (value.sign() <= 0) throw std::invalid_argument("fixed values must be positive");
  }

  std::vector<std::vector<Rational>> class_rows;
  if (constraint) {
    auto rows = class_conditions(wf, J, *constraint);
    if (!rows) {
      sf.inconsistent = true;
      sf.note = "(0,3)-triples force W1 for every metric, so " + constraint->label() + " is impossible";
      return sf;
    }
    class_rows = std::move(*rows);
  }

  std::vector<int> pivots;
  Matrix m;
  for (int attempt = 0; attempt < 2; ++attempt) {
    m = Matrix::Zero(static_cast<Eigen::Index>(class_rows.size() + sf.fixed.size()), n + 1);
    Eigen::Index r = 0;
    for (const auto& row : class_rows) {
      for (int i = 0; i < n; ++i) m(r, i) = row[static_cast<std::size_t>(i)];
      ++r;
    }
    for (const auto& [var, value] : sf.fixed) {
      m(r, var - 1) = Rational(1);
      m(r, n) = value;
      ++r;
    }
    const auto piv = rref(m, n);
    if (!piv) {
      sf.inconsistent = true;
      sf.note = "the fixed values contradict the metric conditions of the class";
      return sf;
    }
    pivots = *piv;
    const int free_count = n - static_cast<int>(pivots.size());
    if (free_count == 2 && sf.fixed.empty()) {
      for (int i = 0; i < n; ++i)
        if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) {
          sf.fixed[i + 1] = Rational(1);
          break;
        }
      sf.normalized = true;
      continue;
    }
    if (free_count > 1)
      throw std::invalid_argument(std::to_string(free_count) + " metric entries remain free; fix more values");
    break;
  }

  int free_var = -1;
  for (int i = n - 1; i >= 0; --i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) free_var = i;

  sf.relations.assign(static_cast<std::size_t>(n), AffineRelation{Rational(0), Rational(0)});
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    const auto r = static_cast<Eigen::Index>(row);
    AffineRelation& rel = sf.relations[static_cast<std::size_t>(pivots[row])];
    rel.offset = m(r, n);
    if (free_var >= 0) rel.slope = -m(r, free_var);
  }

  const auto accept = [&](const Surd& t) {
    const std::vector<Surd> metric = sf.metric_at(t);
    for (const Surd& l : metric)
      if (l.sign() <= 0) return false;
    const NormBundle<Surd> nb = curvature_norms(wf, J, SurdMetric{metric});
    if (constraint && gray_hervella_class(nb) != *constraint) return false;
    return sf.mode == SolveMode::Numeric || scalar_gap(nb).is_zero();
  };

  if (free_var < 0) {
    // Fully determined metric: the family is that point if it solves.
    sf.solved_var = n;
    const Surd value(sf.relations.back().offset);
    std::vector<Rational> point;
    for (const auto& rel : sf.relations) point.push_back(rel.offset);
    sf.residual = UniPoly(gp.poly.evaluate(point));
    if (sf.residual.is_zero()) {
      sf.roots.push_back(value);
      if (accept(value)) sf.positivity_filtered.push_back(value);
    }
    return sf;
  }

  sf.solved_var = free_var + 1;
  sf.relations[static_cast<std::size_t>(free_var)] = {Rational(0), Rational(1)};

  std::vector<UniPoly> subs;
  for (const AffineRelation& rel : sf.relations) subs.push_back(UniPoly::linear(rel.offset, rel.slope));
  UniPoly p = gp.poly.evaluate(subs);
  for (const UniPoly& f : subs) {
    if (f.degree() != 1) continue;
    UniPoly q, r;
    while (!p.is_zero()) {
      p.divmod(f, q, r);
      if (!r.is_zero()) break;
      p = q;
    }
  }
  sf.residual = p;

  if (p.is_zero()) {
    sf.identically = true;
    sf.note = "2s1 - s vanishes identically on this family";
    return sf;
  }

  bool exact = true;
  sf.roots = real_roots(p, exact);
  if (!exact) {
    sf.mode = SolveMode::Numeric;
    sf.certified = false;
    for (const Surd& t : sf.roots) sf.residual_bound = std::max(sf.residual_bound, std::fabs(p(t.a()).to_double()));
  }
  for (const Surd& t : sf.roots)
    if (accept(t)) sf.positivity_filtered.push_back(t);
  if (sf.positivity_filtered.empty()) sf.note = "no positive solution";
  return sf;
}

bool verify(const WeightedFlag& wf, const AlmostComplexStructure& J, const SurdMetric& g) {
  g.validate(wf.flag.summand_count());
  return scalar_gap(wf, J, g).is_zero();
}

}  // namespace flagcurv
