#include "flagcurv/structure_constants.hpp"

#include <stdexcept>

namespace flagcurv {

Rational m_squared(const RootSystem& rs, const Root& alpha, const Root& beta) {
  if (beta == alpha || beta == -alpha) throw std::invalid_argument("m_squared: beta = +-alpha");
  if (!rs.is_root(alpha + beta)) return Rational(0);
  const auto [p, q] = root_string(rs, alpha, beta);
  return Rational(q * (1 + p), 2) * rs.inner(alpha, alpha);
}

WeightedFlag weigh(const FlagDecomposition& d, const Rational& scale) {
  if (scale.sign() <= 0) throw std::invalid_argument("weigh: scale must be positive");
  WeightedFlag wf{d, {}};
  for (Triple& t : enumerate_triples(d)) {
    Rational m2 = m_squared(d.root_system(), t.a, t.b) * scale;
    wf.weights.push_back({std::move(t), std::move(m2)});
  }
  return wf;
}

KLConstants kl_constants(const WeightedFlag& wf, const AlmostComplexStructure& J) {
  if (J.size() != wf.flag.summand_count())
    throw std::invalid_argument("almost complex structure has " + std::to_string(J.size()) +
                                " signs, flag has " + std::to_string(wf.flag.summand_count()) + " summands");
  KLConstants kl;
  for (const TripleWeight& w : wf.weights) {
    (triple_type(J, w.triple) == TripleType::ZeroThree ? kl.K : kl.L) += w.m_squared;
    kl.per_pattern[w.triple.pattern] += w.m_squared;
  }
  return kl;
}

}  // namespace flagcurv
