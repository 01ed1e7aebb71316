#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flagcurv/structure_constants.hpp"
#include "flagcurv/surd.hpp"

namespace flagcurv {

/// Invariant metric (lambda_1, ..., lambda_n), one eigenvalue per summand.
template <class Scalar>
struct InvariantMetric {
  std::vector<Scalar> lambdas;

  const Scalar& operator()(int summand) const { return lambdas.at(static_cast<std::size_t>(summand - 1)); }
  int size() const { return static_cast<int>(lambdas.size()); }

  void validate(int summands) const {
    if (size() != summands)
      throw std::invalid_argument("metric has " + std::to_string(size()) + " entries, flag has " +
                                  std::to_string(summands) + " summands");
    for (const Scalar& l : lambdas)
      if (l.sign() <= 0) throw std::invalid_argument("metric entries must be positive");
  }

  InvariantMetric scaled(const Scalar& c) const {
    InvariantMetric out{lambdas};
    for (Scalar& l : out.lambdas) l = l * c;
    return out;
  }
};

/// Squared norms of the components of the covariant derivative of the Kaehler form.
template <class Scalar>
struct NormBundle {
  Scalar dF_minus_sq;  // (0,3)+(3,0) part of dF
  Scalar N0_sq;        // N - bN
  Scalar dF_plus_sq;   // (1,2)+(2,1) part of dF
  Scalar DF_sq;

  friend bool operator==(const NormBundle&, const NormBundle&) = default;
};

/// Gray-Hervella class. The Lee form vanishes on every flag manifold, so only
/// W1, W2 and W3 can occur.
struct GrayHervellaClass {
  bool w1 = false;
  bool w2 = false;
  bool w3 = false;

  bool kaehler() const { return !w1 && !w2 && !w3; }
  std::string label() const;  // "Kähler", "W1⊕W3", ...
  /// Accepts the labels above, plus ASCII forms "Kahler", "W1+W3".
  static GrayHervellaClass parse(std::string_view text);

  friend bool operator==(const GrayHervellaClass&, const GrayHervellaClass&) = default;
};

namespace detail {

inline void check_shapes(const WeightedFlag& wf, const AlmostComplexStructure& J, int metric_size) {
  const int n = wf.flag.summand_count();
  if (J.size() != n)
    throw std::invalid_argument("almost complex structure has " + std::to_string(J.size()) +
                                " signs, flag has " + std::to_string(n) + " summands");
  if (metric_size != n)
    throw std::invalid_argument("metric has " + std::to_string(metric_size) + " entries, flag has " +
                                std::to_string(n) + " summands");
}

}  // namespace detail

/// The four squared norms, exact in the scalar type.
///
/// (dF)^-, N^0 and (dF)^+ are sums over signed zero-sum triples, i.e. twice
/// the sum over canonical ones. ||DF||^2 is evaluated from its own closed
/// form, once per canonical triple, and must agree with
/// (dF)^+ + N^0/4 + (dF)^-/3.
template <class Scalar>
NormBundle<Scalar> curvature_norms(const WeightedFlag& wf, const AlmostComplexStructure& J,
                                   const InvariantMetric<Scalar>& g) {
  detail::check_shapes(wf, J, g.size());
  NormBundle<Scalar> nb{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  for (const TripleWeight& w : wf.weights) {
    const Triple& t = w.triple;
    const auto e = triple_signs(J, t);
    const Scalar& la = g(t.summands[0]);
    const Scalar& lb = g(t.summands[1]);
    const Scalar& lc = g(t.summands[2]);
    const Scalar prod = la * lb * lc;
    const Scalar sum = la + lb + lc;
    const int s3 = e[0] * e[1] * e[2] + e[0] + e[1] + e[2];
    const Scalar signed_m2 = Scalar(Rational(2) * w.m_squared);

    if (s3 != 0) {
      const Rational s3sq(s3 * s3);
      nb.dF_minus_sq += signed_m2 * Scalar(s3sq) * sum * sum / (Scalar(96) * prod);
      const Scalar u = Scalar(-2) * la + lb + lc;
      const Scalar v = Scalar(-2) * lc + la + lb;
      const Scalar x = Scalar(-2) * lb + la + lc;
      nb.N0_sq += signed_m2 * Scalar(s3sq) * (u * u + v * v + x * x) / (Scalar(54) * prod);
    }
    const Scalar lin = Scalar(4) * (Scalar(e[0]) * la + Scalar(e[1]) * lb + Scalar(e[2]) * lc) - Scalar(s3) * sum;
    if (!lin.is_zero()) nb.dF_plus_sq += signed_m2 * lin * lin / (Scalar(96) * prod);

    const Scalar pa = Scalar(-1) * la + lb + lc;
    const Scalar pb = la - lb + lc;
    const Scalar pc = la + lb - lc;
    const int ca = (e[1] + e[2]) * (e[1] + e[2]);
    const int cb = (e[0] + e[2]) * (e[0] + e[2]);
    const int cc = (e[0] + e[1]) * (e[0] + e[1]);
    const Scalar bracket = Scalar(Rational(ca, 4)) * pa * pa + Scalar(Rational(cb, 4)) * pb * pb +
                           Scalar(Rational(cc, 4)) * pc * pc;
    nb.DF_sq += Scalar(w.m_squared) * bracket / (Scalar(3) * prod);
  }
  return nb;
}

/// 2 s_1 - s = -(5/6)|(dF)^-|^2 + (1/8)|N^0|^2 + (1/2)|(dF)^+|^2.
template <class Scalar>
Scalar scalar_gap(const NormBundle<Scalar>& nb) {
  return Scalar(Rational(-5, 6)) * nb.dF_minus_sq + Scalar(Rational(1, 8)) * nb.N0_sq +
         Scalar(Rational(1, 2)) * nb.dF_plus_sq;
}

template <class Scalar>
Scalar scalar_gap(const WeightedFlag& wf, const AlmostComplexStructure& J, const InvariantMetric<Scalar>& g) {
  return scalar_gap(curvature_norms(wf, J, g));
}

/// 2 s_2(t) - s = -(1/6)|(dF)^-|^2 + (1/16)|N^0|^2 - ((t^2 - 2t)/2)|(dF)^+|^2.
template <class Scalar>
Scalar scalar_gap_s2(const NormBundle<Scalar>& nb, const Rational& t) {
  const Rational c = (t * t - Rational(2) * t) / Rational(2);
  return Scalar(Rational(-1, 6)) * nb.dF_minus_sq + Scalar(Rational(1, 16)) * nb.N0_sq - Scalar(c) * nb.dF_plus_sq;
}

template <class Scalar>
Scalar scalar_gap_s2(const WeightedFlag& wf, const AlmostComplexStructure& J, const InvariantMetric<Scalar>& g,
                     const Rational& t) {
  return scalar_gap_s2(curvature_norms(wf, J, g), t);
}

template <class Scalar>
GrayHervellaClass gray_hervella_class(const NormBundle<Scalar>& nb) {
  return GrayHervellaClass{!nb.dF_minus_sq.is_zero(), !nb.N0_sq.is_zero(), !nb.dF_plus_sq.is_zero()};
}

template <class Scalar>
GrayHervellaClass gray_hervella_class(const WeightedFlag& wf, const AlmostComplexStructure& J,
                                      const InvariantMetric<Scalar>& g) {
  return gray_hervella_class(curvature_norms(wf, J, g));
}

using RationalMetric = InvariantMetric<Rational>;
using SurdMetric = InvariantMetric<Surd>;

}  // namespace flagcurv
