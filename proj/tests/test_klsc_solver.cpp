#include "doctest.h"

#include <cmath>

#include "flagcurv/klsc_solver.hpp"
#include "properties.hpp"

using namespace flagcurv;

namespace {

using Q = Rational;

WeightedFlag flag(const std::string& slug, const Q& scale = Q(1)) { return weigh(decompose(resolve_flag(slug)), scale); }
AlmostComplexStructure J(const char* s) { return AlmostComplexStructure::parse(s); }
Surd S(const char* s) { return Surd::parse(s); }

SurdMetric metric(std::vector<Surd> v) { return SurdMetric{std::move(v)}; }

bool contains(const std::vector<Surd>& v, const Surd& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<const CatalogEntry*> entries(const std::string& table) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog())
    if (e.table == table) out.push_back(&e);
  return out;
}

// Numerators of 2s1 - s over 12 l1^2 l2 l3 for type I, as printed with K and L.
// The printed forms count signed triples, so callers pass twice the canonical sums.
Q type_one_j2(const Q& K, const Q& L, const Q& a, const Q& b, const Q& c) {
  return K * (Q(-4) * a * a - Q(12) * a * b + b * b) * c + L * a * (a - b + c) * (a - b + c);
}
Q type_one_j3(const Q& K, const Q& L, const Q& a, const Q& b, const Q& c) {
  return K * (Q(-4) * a * a - Q(12) * a * b + b * b) * c + L * a * (-a + b + c) * (-a + b + c);
}
Q type_one_j4(const Q& K, const Q& L, const Q& a, const Q& b, const Q& c) {
  return K * a * (a * a - Q(6) * a * (b + c) + b * b - Q(6) * b * c + c * c) + L * c * (b - Q(2) * a) * (b - Q(2) * a);
}

}  // namespace

TEST_CASE("two-summand gap against the printed forms") {
  props::Sampler s(7);
  for (const CatalogEntry* e : entries("Table 1")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    const Q K = Q(2) * kl_constants(wf, J("+,-")).K;
    const Q L = Q(2) * kl_constants(wf, J("+,+")).L;
    CHECK(K.sign() > 0);
    CHECK(L == K);
    for (int k = 0; k < 10; ++k) {
      const Q a = s.metric_entry(), b = s.metric_entry();
      const RationalMetric g{{a, b}};
      CHECK(scalar_gap(wf, J("+,+"), g) == L * (Q(2) * a - b) * (Q(2) * a - b) / (Q(12) * a * a * b));
      CHECK(scalar_gap(wf, J("+,-"), g) == K * (Q(-4) * a * a - Q(12) * a * b + b * b) / (Q(12) * a * a * b));
    }
    const GapPolynomial gp = gap_polynomial(wf, J("+,-"));
    const Polynomial l1 = Polynomial::variable(2, 0), l2 = Polynomial::variable(2, 1);
    CHECK(gp.poly.ratio_to(Q(-4) * l1 * l1 - Q(12) * l1 * l2 + l2 * l2).sign() > 0);
    CHECK(gp.degree() == 2);
  }
}

TEST_CASE("three-summand gap numerators in K and L") {
  props::Sampler s(8);
  for (const CatalogEntry* e : entries("Table 3")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    CAPTURE(e->spec.slug);
    for (int k = 0; k < 10; ++k) {
      const Q a = s.metric_entry(), b = s.metric_entry(), c = s.metric_entry();
      const RationalMetric g{{a, b, c}};
      const Q den = Q(12) * a * a * b * c;
      const auto k2 = kl_constants(wf, J("-,+,+"));
      CHECK(scalar_gap(wf, J("-,+,+"), g) == type_one_j2(Q(2) * k2.K, Q(2) * k2.L, a, b, c) / den);
      const auto k3 = kl_constants(wf, J("+,-,+"));
      CHECK(scalar_gap(wf, J("+,-,+"), g) == type_one_j3(Q(2) * k3.K, Q(2) * k3.L, a, b, c) / den);
      const auto k4 = kl_constants(wf, J("+,+,-"));
      CHECK(scalar_gap(wf, J("+,+,-"), g) == type_one_j4(Q(2) * k4.K, Q(2) * k4.L, a, b, c) / den);
      // J1: two (1,2) patterns, each a square.
      const auto k1 = kl_constants(wf, J("+,+,+"));
      const Q L1 = Q(2) * k1.per_pattern.at({1, 1, 2}), L2 = Q(2) * k1.per_pattern.at({1, 2, 3});
      CHECK(scalar_gap(wf, J("+,+,+"), g) == L1 * (Q(2) * a - b) * (Q(2) * a - b) / (Q(12) * a * a * b) +
                                                  L2 * (a + b - c) * (a + b - c) / (Q(12) * a * b * c));
    }
  }
  for (const CatalogEntry* e : entries("Table 4")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    CAPTURE(e->spec.slug);
    const Q L = Q(2) * kl_constants(wf, J("+,+,+")).L;
    const Q K = Q(2) * kl_constants(wf, J("+,+,-")).K;
    for (int k = 0; k < 10; ++k) {
      const Q a = s.metric_entry(), b = s.metric_entry(), c = s.metric_entry();
      const RationalMetric g{{a, b, c}};
      const Q p = a * b * c;
      CHECK(scalar_gap(wf, J("+,+,+"), g) == L * (a + b - c) * (a + b - c) / (Q(12) * p));
      CHECK(scalar_gap(wf, J("-,+,+"), g) == L * (a - b + c) * (a - b + c) / (Q(12) * p));
      CHECK(scalar_gap(wf, J("+,-,+"), g) == L * (-a + b + c) * (-a + b + c) / (Q(12) * p));
      CHECK(scalar_gap(wf, J("+,+,-"), g) ==
            K * (a * a - Q(6) * a * (b + c) + b * b - Q(6) * b * c + c * c) / (Q(12) * p));
    }
  }
}

TEST_CASE("gap polynomial shape") {
  const GapPolynomial gp = gap_polynomial(flag("G2/U2"), J("-,+,+"));
  CHECK(gp.n_vars == 3);
  CHECK(gp.poly.is_homogeneous());
  const Polynomial a = Polynomial::variable(3, 0), b = Polynomial::variable(3, 1), c = Polynomial::variable(3, 2);
  const Polynomial form = Q(1, 6) * (Q(-4) * a * a - Q(12) * a * b + b * b) * c + Q(1, 4) * a * (a - b + c) * (a - b + c);
  CHECK(gp.poly.ratio_to(form).sign() > 0);

  const GapPolynomial t2 = gap_polynomial(flag("SU(n+2):n=2"), J("+,+,+"));
  const Polynomial sq = (a + b - c) * (a + b - c);
  CHECK(t2.poly.ratio_to(sq).sign() > 0);
}

TEST_CASE("unsupported summand counts") {
  const WeightedFlag wf = weigh(decompose(resolve_flag("A3:1,2,3")));
  CHECK(wf.flag.summand_count() > 3);
  const AlmostComplexStructure j(std::vector<int>(static_cast<std::size_t>(wf.flag.summand_count()), 1));
  CHECK_THROWS_AS(gap_polynomial(wf, j), UnsupportedSummandCount);
  CHECK_THROWS_AS(solve(wf, j, {{1, Q(1)}}), UnsupportedSummandCount);
}

TEST_CASE("two-summand solutions on every Table 1 family") {
  const Surd plus_ratio = S("6+2*sqrt(10)");
  for (const CatalogEntry* e : entries("Table 1")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    CAPTURE(e->spec.slug);
    const SolutionFamily k = solve(wf, J("+,+"), {});
    CHECK(k.normalized);
    CHECK(k.positivity_filtered == std::vector<Surd>{Surd(2)});
    const SolutionFamily n = solve(wf, J("+,-"), {});
    CHECK(n.positivity_filtered == std::vector<Surd>{plus_ratio});
    CHECK(n.roots == std::vector<Surd>{S("6-2*sqrt(10)"), plus_ratio});
    const SolutionFamily w = solve(wf, J("+,-"), {{1, Q(3)}});
    CHECK(w.positivity_filtered == std::vector<Surd>{Surd(3) * plus_ratio});
    CHECK(solve(wf, J("+,-"), {}, GrayHervellaClass::parse("W1")).empty());
  }
}

TEST_CASE("G2 solutions") {
  const WeightedFlag wf = flag("G2/U2");
  const SolutionFamily j2 = solve(wf, J("-,+,+"), {{1, Q(1)}, {2, Q(2)}});
  CHECK(j2.solved_var == 3);
  CHECK(j2.mode == SolveMode::Exact);
  CHECK(j2.roots == std::vector<Surd>{S("9-4*sqrt(5)"), S("9+4*sqrt(5)")});
  CHECK(j2.positivity_filtered == j2.roots);

  const SolutionFamily w13 = solve(wf, J("-,+,+"), {{1, Q(1)}}, GrayHervellaClass::parse("W1+W3"));
  CHECK(w13.positivity_filtered == std::vector<Surd>{Surd(10)});
  const SolutionFamily w12 = solve(wf, J("-,+,+"), {{1, Q(1)}}, GrayHervellaClass::parse("W1+W2"));
  CHECK(w12.positivity_filtered == std::vector<Surd>{S("6+2*sqrt(10)")});

  const SolutionFamily j3 = solve(wf, J("+,-,+"), {{1, Q(1)}, {2, Q(2)}});
  CHECK(contains(j3.positivity_filtered, S("7+4*sqrt(3)")));
  CHECK(contains(j3.positivity_filtered, S("7-4*sqrt(3)")));

  const SolutionFamily j4 = solve(wf, J("+,+,-"), {{1, Q(1)}, {2, Q(1)}});
  CHECK(contains(j4.positivity_filtered, S("17/3+5/3*sqrt(13)")));
  const SolutionFamily j4b = solve(wf, J("+,+,-"), {{1, Q(1)}}, GrayHervellaClass::parse("W1+W2"));
  CHECK(j4b.positivity_filtered == std::vector<Surd>{S("9+2*sqrt(22)")});
  CHECK(j4b.relations[1].offset == Q(2));

  const SolutionFamily kahler = solve(wf, J("+,+,+"), {{1, Q(1)}}, GrayHervellaClass{});
  CHECK(kahler.metric_at(Surd(0)) == std::vector<Surd>{Surd(1), Surd(2), Surd(3)});
  CHECK(kahler.positivity_filtered.size() == 1);
}

TEST_CASE("emptiness") {
  for (const char* slug : {"G2/U2", "F4/SU3xSU2xU1"}) {
    const WeightedFlag wf = flag(slug);
    CAPTURE(slug);
    const SolutionFamily a = solve(wf, J("+,-,+"), {}, GrayHervellaClass::parse("W1+W2"));
    CHECK(a.empty());
    CHECK_FALSE(a.inconsistent);
    CHECK(a.roots.size() == 2);
    const SolutionFamily b = solve(wf, J("+,+,-"), {}, GrayHervellaClass::parse("W1+W3"));
    CHECK(b.empty());
    CHECK(b.residual.degree() == 0);
    const auto kl4 = kl_constants(wf, J("+,+,-"));
    CHECK(kl4.L != Q(15) * kl4.K);
  }
  // Kaehler and W2-only are impossible when (0,3)-triples exist.
  const WeightedFlag g2 = flag("G2/U2");
  CHECK(solve(g2, J("-,+,+"), {}, GrayHervellaClass{}).inconsistent);
  CHECK_FALSE(class_conditions(g2, J("-,+,+"), GrayHervellaClass::parse("W2")).has_value());
  // The fixed values contradict the class.
  CHECK(solve(g2, J("-,+,+"), {{1, Q(1)}, {2, Q(2)}}, GrayHervellaClass::parse("W1+W3")).inconsistent);
}

TEST_CASE("F4 solutions") {
  const WeightedFlag wf = flag("F4/SU3xSU2xU1");
  const SolutionFamily j2 = solve(wf, J("-,+,+"), {{1, Q(1)}, {2, Q(2)}});
  CHECK(j2.roots == std::vector<Surd>{S("19-6*sqrt(10)"), S("19+6*sqrt(10)")});
  CHECK(contains(j2.positivity_filtered, S("19+6*sqrt(10)")));

  const SolutionFamily w13 = solve(wf, J("-,+,+"), {{1, Q(2)}}, GrayHervellaClass::parse("W1+W3"));
  CHECK(w13.positivity_filtered == std::vector<Surd>{Surd(45)});

  CHECK(verify(wf, J("+,-,+"), metric({Surd(1), Surd(10), Surd(9)})));
  CHECK(verify(wf, J("-,+,+"), metric({Surd(1), S("6+2*sqrt(10)"), S("5+2*sqrt(10)")})));
  CHECK(verify(wf, J("+,+,-"), metric({Surd(1), Surd(1), S("21/4+1/4*sqrt(505)")})));
  CHECK(verify(wf, J("+,+,-"), metric({Surd(1), Surd(2), S("9+2*sqrt(22)")})));
  CHECK(verify(wf, J("-,+,+"), metric({Surd(1), Surd(Q(1, 2)), S("109/16+3/16*sqrt(1313)")})));
}

TEST_CASE("printed F4 solution families") {
  const WeightedFlag wf = flag("F4/SU3xSU2xU1");
  props::Sampler s(9);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    const Q x = s.metric_entry(), y = s.metric_entry();
    if (y < x) {
      // (-,+,+), 0 < y < x.
      const Q r = Q(16) * x * x * x * x + Q(224) * x * x * x * y + Q(512) * x * x * y * y - Q(80) * x * y * y * y +
                  Q(3) * y * y * y * y;
      const Surd z = (Surd(Q(8) * x * x + Q(40) * x * y - Q(3) * y * y) + Surd::sqrt(Q(3) * r)) / Surd(Q(4) * x);
      CHECK(verify(wf, J("-,+,+"), metric({Surd(x), Surd(y), z})));
      // (+,-,+), 0 < y < x.
      const Q r2 = Q(80) * x * x * x * x + Q(352) * x * x * x * y + Q(304) * x * x * y * y - Q(64) * x * y * y * y +
                   Q(3) * y * y * y * y;
      const Surd z2 = (Surd(Q(16) * x * x + Q(32) * x * y - Q(3) * y * y) + Surd::sqrt(Q(3) * r2)) / Surd(Q(4) * x);
      CHECK(verify(wf, J("+,-,+"), metric({Surd(x), Surd(y), z2})));
      ++checked;
    }
    // (+,+,-) inside the stated band around y = 3x.
    const Q r3 = Q(-16) * x * x * x * x + Q(96) * x * x * x * y + Q(560) * x * x * y * y - Q(144) * x * y * y * y +
                 Q(9) * y * y * y * y;
    if (r3.sign() >= 0) {
      const Surd z3 = (Surd(Q(24) * x * y - Q(3) * y * y) + Surd::sqrt(r3)) / Surd(Q(4) * x);
      if (z3.sign() > 0) CHECK(verify(wf, J("+,+,-"), metric({Surd(x), Surd(y), z3})));
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("type I closed forms in K and L") {
  for (const CatalogEntry* e : entries("Table 3")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    CAPTURE(e->spec.slug);
    {
      // (-,+,+) at (1,2).
      const auto c = kl_constants(wf, J("-,+,+"));
      const Q K = c.K, L = c.L;
      const Surd z = (Surd(2) * Surd::sqrt(Q(6) * K * (Q(24) * K + Q(4) * L)) + Surd(Q(24) * K + Q(2) * L)) /
                     Surd(Q(2) * L);
      CHECK(verify(wf, J("-,+,+"), metric({Surd(1), Surd(2), z})));
      const SolutionFamily sf = solve(wf, J("-,+,+"), {{1, Q(1)}, {2, Q(2)}});
      CHECK(contains(sf.positivity_filtered, z));
      // W1+W3: l1 = l2 = L l3 / (15 K).
      CHECK(verify(wf, J("-,+,+"), metric({Surd(L), Surd(L), Surd(Q(15) * K)})));
    }
    {
      // (+,-,+).
      const auto c = kl_constants(wf, J("+,-,+"));
      const Q K = c.K, L = c.L;
      const Surd root = Surd(Q(2) / K) * Surd::sqrt(Q(10) * K * K - Q(5) * K * L + L * L);
      const Surd l2 = Surd(Q(6) - Q(2) * L / K) + root;
      const Surd l3 = Surd(Q(5) - Q(2) * L / K) + root;
      CHECK(verify(wf, J("+,-,+"), metric({Surd(1), l2, l3})));
      CHECK(verify(wf, J("+,-,+"), metric({Surd(L), Surd(L), Surd(Q(15) * K)})));
      // 0 < l2 < l1 family at l1 = 1, l2 = 1/2.
      const Q l1(1), b(1, 2);
      const Q A = Q(4) * l1 * l1 + Q(12) * l1 * b - b * b;
      const Surd z = Surd(Q(1, 2)) * (Surd::sqrt(K * A * (K * A + Q(4) * L * l1 * (l1 - b))) / Surd(L * l1) +
                                      Surd(Q(2) * l1 - Q(2) * b)) +
                     Surd(K * A / (Q(2) * L * l1));
      CHECK(verify(wf, J("+,-,+"), metric({Surd(l1), Surd(b), z})));
    }
    {
      // (+,+,-) at (1,1) and the W1+W2 family.
      const auto c = kl_constants(wf, J("+,+,-"));
      const Q K = c.K, L = c.L;
      const Surd z = Surd(Q(1, 2)) * Surd::sqrt((Q(160) * K * K - Q(24) * K * L + L * L) / (K * K)) +
                     Surd((Q(12) * K - L) / (Q(2) * K));
      CHECK(verify(wf, J("+,+,-"), metric({Surd(1), Surd(1), z})));
      CHECK(verify(wf, J("+,+,-"), metric({Surd(3), Surd(6), S("27+6*sqrt(22)")})));
      const SolutionFamily w13 = solve(wf, J("+,+,-"), {}, GrayHervellaClass::parse("W1+W3"));
      CHECK(w13.empty() == (L != Q(15) * K));
    }
  }
}

TEST_CASE("type II solutions") {
  for (const CatalogEntry* e : entries("Table 4")) {
    const WeightedFlag wf = weigh(decompose(e->spec));
    CAPTURE(e->spec.slug);
    for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}}) {
      const Q a(x), b(y);
      const Surd z = Surd(Q(3) * (a + b)) + Surd(2) * Surd::sqrt(Q(2) * (a * a + Q(3) * a * b + b * b));
      CHECK(verify(wf, J("+,+,-"), metric({Surd(a), Surd(b), z})));
      CHECK(gray_hervella_class(wf, J("+,+,-"), metric({Surd(a), Surd(b), z})).label() == "W1⊕W2");
      const SolutionFamily sf = solve(wf, J("+,+,-"), {{1, a}, {2, b}});
      CHECK(contains(sf.positivity_filtered, z));
    }
    CHECK(verify(wf, J("+,+,-"), metric({Surd(1), Surd(1), S("6+2*sqrt(10)")})));
    CHECK(verify(wf, J("+,+,-"), metric({Surd(1), Surd(2), S("9+2*sqrt(22)")})));
    CHECK(verify(wf, J("+,-,+"), metric({Surd(5), Surd(2), Surd(3)})));
    CHECK(verify(wf, J("+,+,+"), metric({Surd(2), Surd(3), Surd(5)})));
    CHECK_FALSE(verify(wf, J("+,-,+"), metric({Surd(2), Surd(3), Surd(5)})));
    const SolutionFamily k = solve(wf, J("+,-,+"), {{2, Q(2)}, {3, Q(3)}});
    CHECK(k.positivity_filtered == std::vector<Surd>{Surd(5)});
    CHECK(solve(wf, J("+,+,-"), {}, GrayHervellaClass::parse("W1")).empty());
  }
}

TEST_CASE("solutions do not depend on the scale of m^2") {
  for (const char* slug : {"G2/U2", "F4/SU3xSU2xU1", "SU(n+2):n=3"}) {
    for (const auto& j : AlmostComplexStructure::enumerate(3)) {
      const SolutionFamily a = solve(flag(slug), j, {{1, Q(1)}, {2, Q(2)}});
      const SolutionFamily b = solve(flag(slug, Q(18)), j, {{1, Q(1)}, {2, Q(2)}});
      CHECK(a.roots == b.roots);
      CHECK(a.positivity_filtered == b.positivity_filtered);
      CHECK(a.identically == b.identically);
    }
  }
}

TEST_CASE("every returned root verifies") {
  int n = 0;
  for (const WeightedFlag& wf : props::catalog_flags()) {
    const int s = wf.flag.summand_count();
    for (const auto& j : AlmostComplexStructure::enumerate(s)) {
      std::map<int, Q> fixed{{1, Q(1)}};
      if (s == 3) fixed[2] = Q(2);
      const SolutionFamily sf = solve(wf, j, fixed);
      for (const Surd& t : sf.positivity_filtered) {
        CHECK(verify(wf, j, SurdMetric{sf.metric_at(t)}));
        ++n;
      }
    }
  }
  CHECK(n > 20);
}

TEST_CASE("solver input errors") {
  const WeightedFlag wf = flag("G2/U2");
  CHECK_THROWS_AS(solve(wf, J("-,+,+"), {{1, Q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(solve(wf, J("-,+,+"), {{4, Q(1)}, {1, Q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(solve(wf, J("-,+,+"), {{1, Q(-1)}, {2, Q(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(verify(wf, J("-,+,+"), metric({Surd(1), Surd(0), Surd(1)})), std::invalid_argument);
  CHECK_THROWS_AS(verify(wf, J("-,+,+"), metric({Surd(1), S("sqrt(2)"), S("sqrt(3)")})), IncompatibleFields);
  CHECK_THROWS_AS(verify(wf, J("-,+"), metric({Surd(1), Surd(1)})), std::invalid_argument);
}

TEST_CASE("numeric fallback for higher degree") {
  bool exact = true;
  const auto roots = real_roots(UniPoly({Q(-2), Q(0), Q(0), Q(1)}), exact);
  CHECK_FALSE(exact);
  REQUIRE(roots.size() == 1);
  CHECK(std::fabs(roots[0].to_double() - std::cbrt(2.0)) < 1e-15);

  const auto three = real_roots(UniPoly({Q(6), Q(-11), Q(6), Q(-1)}) * UniPoly({Q(-1), Q(1)}), exact);
  REQUIRE(three.size() == 3);
  CHECK(std::fabs(three[0].to_double() - 1.0) < 1e-15);
  CHECK(std::fabs(three[1].to_double() - 2.0) < 1e-15);
  CHECK(std::fabs(three[2].to_double() - 3.0) < 1e-15);

  // l1 free with l2, l3 fixed gives a cubic for (-,+,+).
  const WeightedFlag wf = flag("G2/U2");
  const SolutionFamily sf = solve(wf, J("-,+,+"), {{2, Q(2)}, {3, Q(17)}});
  CHECK(sf.solved_var == 1);
  CHECK(sf.mode == SolveMode::Numeric);
  CHECK_FALSE(sf.certified);
  CHECK(sf.residual.degree() == 3);
  CHECK(sf.residual_bound < 1e-12);
  REQUIRE_FALSE(sf.positivity_filtered.empty());
  for (const Surd& t : sf.positivity_filtered) {
    const double x = t.to_double(), y = 2, z = 17;
    const double gap = 3 * x * x * x - 2 * x * x * (3 * y + z) + 3 * x * (y * y - 10 * y * z + z * z) + 2 * y * y * z;
    CHECK(std::fabs(gap) < 1e-9);
  }
}

TEST_CASE("real roots of low degree are exact") {
  bool exact = false;
  CHECK(real_roots(UniPoly({Q(1), Q(-18), Q(1)}), exact) == std::vector<Surd>{S("9-4*sqrt(5)"), S("9+4*sqrt(5)")});
  CHECK(exact);
  CHECK(real_roots(UniPoly({Q(1), Q(0), Q(1)}), exact).empty());
  CHECK(real_roots(UniPoly({Q(4), Q(-4), Q(1)}), exact) == std::vector<Surd>{Surd(2)});
  CHECK(real_roots(UniPoly({Q(3), Q(2)}), exact) == std::vector<Surd>{Surd(Q(-3, 2))});
  CHECK(real_roots(UniPoly(Q(5)), exact).empty());
}
