#pragma once

#include <array>
#include <map>
#include <vector>

#include "flagcurv/almost_complex.hpp"

namespace flagcurv {

/// Squared Weyl-basis structure constant of [X_a, X_b] = m_{a,b} X_{a+b}.
///
/// With <X_a, X_{-a}> = 1 and the Killing-dual form, m^2 = q(1+p)/2 <a,a>,
/// (p, q) the a-string through b. Zero when a + b is not a root.
/// Throws std::invalid_argument when b = +-a.
Rational m_squared(const RootSystem& rs, const Root& alpha, const Root& beta);

struct TripleWeight {
  Triple triple;
  Rational m_squared;
};

/// A decomposition together with its canonical triples and their m^2.
struct WeightedFlag {
  FlagDecomposition flag;
  std::vector<TripleWeight> weights;
};

/// `scale` multiplies every m^2; 1 gives the Killing-dual normalisation.
WeightedFlag weigh(const FlagDecomposition& d, const Rational& scale = Rational(1));

struct KLConstants {
  Rational K;  // sum of m^2 over (0,3)-triples
  Rational L;  // sum of m^2 over (1,2)-triples
  std::map<std::array<int, 3>, Rational> per_pattern;
};

KLConstants kl_constants(const WeightedFlag& wf, const AlmostComplexStructure& J);

}  // namespace flagcurv
