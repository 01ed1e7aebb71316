#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcurv/hermitian_geometry.hpp"
#include "flagcurv/polynomial.hpp"

namespace flagcurv {

/// Thrown for flags outside the 2- and 3-summand scope of the solver.
class UnsupportedSummandCount : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// (2 s_1 - s) * 12 * l1^a l2^b l3^c, a homogeneous polynomial in the lambdas.
struct GapPolynomial {
  Polynomial poly;
  Polynomial::Monomial denominator;  // (a, b, c)
  int n_vars = 0;
  int degree() const { return poly.total_degree(); }
};

GapPolynomial gap_polynomial(const WeightedFlag& wf, const AlmostComplexStructure& J);

/// Linear metric conditions equivalent to the absence of each missing
/// component of `cls`. Rows are coefficient vectors (sum_i row[i] l_i = 0).
/// Returns nullopt when some missing component cannot vanish for any metric.
std::optional<std::vector<std::vector<Rational>>> class_conditions(const WeightedFlag& wf,
                                                                   const AlmostComplexStructure& J,
                                                                   const GrayHervellaClass& cls);

/// l_var = offset + slope * t along the family, t the solved variable.
struct AffineRelation {
  Rational offset;
  Rational slope;
};

enum class SolveMode { Exact, Numeric };

struct SolutionFamily {
  std::string flag;
  std::string J;
  std::optional<GrayHervellaClass> constraint;
  std::map<int, Rational> fixed;  // 1-based variable -> value, as given or added by normalisation
  bool normalized = false;        // a value was fixed by scale invariance
  int solved_var = 0;             // 1-based
  std::vector<AffineRelation> relations;  // one per variable
  UniPoly residual;                        // in the solved variable, spurious l_i = 0 factors removed
  bool inconsistent = false;               // the linear conditions admit no metric
  bool identically = false;                // residual vanishes identically
  SolveMode mode = SolveMode::Exact;
  std::vector<Surd> roots;                 // real roots of the residual, ascending
  std::vector<Surd> positivity_filtered;   // roots giving a positive metric of the requested class
  bool certified = true;
  double residual_bound = 0.0;             // numeric mode only
  std::string note;

  /// Full metric at a value of the solved variable.
  std::vector<Surd> metric_at(const Surd& t) const;
  bool empty() const { return !identically && positivity_filtered.empty(); }
};

/// Solves 2 s_1 - s = 0 for the metrics with the given fixed entries and,
/// optionally, in a given Gray-Hervella class.
///
/// When two variables stay free and nothing is fixed, the lowest free one is
/// set to 1. Throws std::invalid_argument when more freedom remains.
SolutionFamily solve(const WeightedFlag& wf, const AlmostComplexStructure& J,
                     const std::map<int, Rational>& fixed,
                     const std::optional<GrayHervellaClass>& constraint = std::nullopt);

/// Exact test of 2 s_1 - s = 0. Throws on non-positive entries and on
/// entries from different quadratic fields.
bool verify(const WeightedFlag& wf, const AlmostComplexStructure& J, const SurdMetric& g);

/// Real roots of p. Exact when deg <= 2; otherwise isolated by Sturm
/// sequences and bisected to width 2^-bits (returned as rationals).
std::vector<Surd> real_roots(const UniPoly& p, bool& exact, int bits = 64);

}  // namespace flagcurv
