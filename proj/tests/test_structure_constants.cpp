#include "doctest.h"

#include <set>

#include "flagcurv/structure_constants.hpp"

using namespace flagcurv;

namespace {

Root r(std::vector<int> c) { return Root(std::move(c)); }

WeightedFlag flag(const std::string& slug, const Rational& scale = Rational(1)) {
  return weigh(decompose(resolve_flag(slug)), scale);
}

// Chevalley form: m^2 = (p+1)^2 <a,a><b,b> / (2 <a+b,a+b>), p from a scan.
Rational chevalley_m2(const RootSystem& rs, const Root& a, const Root& b) {
  int p = 0;
  while (rs.is_root(b - (p + 1) * a)) ++p;
  const Root c = a + b;
  const Rational pp(p + 1);
  return pp * pp * rs.inner(a, a) * rs.inner(b, b) / (Rational(2) * rs.inner(c, c));
}

KLConstants kl(const std::string& slug, const std::string& J, const Rational& scale = Rational(1)) {
  return kl_constants(flag(slug, scale), AlmostComplexStructure::parse(J));
}

}  // namespace

TEST_CASE("G2 structure constants") {
  const WeightedFlag wf = flag("G2/U2");
  const RootSystem& rs = wf.flag.root_system();
  CHECK(m_squared(rs, r({0, 1}), r({1, 1})) == Rational(1, 6));
  CHECK(m_squared(rs, r({0, 1}), r({1, 2})) == Rational(1, 8));
  CHECK(m_squared(rs, r({1, 1}), r({1, 2})) == Rational(1, 8));
  CHECK(m_squared(rs, r({1, 0}), r({0, 1})) == Rational(1, 8));
  CHECK(m_squared(rs, r({1, 0}), r({1, 0}) + r({0, 1})) == Rational(0));
  CHECK_THROWS_AS(m_squared(rs, r({0, 1}), r({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(m_squared(rs, r({0, 1}), r({0, -1})), std::invalid_argument);

  std::multiset<Rational> got;
  for (const TripleWeight& w : wf.weights) got.insert(w.m_squared);
  CHECK(got == std::multiset<Rational>{Rational(1, 6), Rational(1, 8), Rational(1, 8)});
}

TEST_CASE("m^2 agrees with the Chevalley form on all of G2, F4 and E6") {
  for (const char* fam : {"G2", "F4", "E6", "B3", "C3"}) {
    const RootSystem rs(RootFamily::parse(fam));
    const auto roots = rs.all_roots();
    int checked = 0;
    for (const Root& a : roots)
      for (const Root& b : roots) {
        if (a == b || a == -b || !rs.is_root(a + b)) continue;
        CHECK(m_squared(rs, a, b) == chevalley_m2(rs, a, b));
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("F4 half-weight triples") {
  const WeightedFlag wf = flag("F4/SU3xSU2xU1");
  REQUIRE(wf.weights.size() == 33);
  const std::set<std::set<Root>> half{
      {r({0, 1, 1, 0}), r({1, 1, 1, 1})}, {r({0, 1, 1, 0}), r({1, 1, 2, 1})}, {r({1, 1, 1, 0}), r({0, 1, 1, 1})},
      {r({1, 1, 1, 0}), r({0, 1, 2, 1})}, {r({0, 1, 1, 1}), r({1, 1, 2, 1})}, {r({1, 1, 1, 1}), r({0, 1, 2, 1})}};
  int halves = 0;
  for (const TripleWeight& w : wf.weights) {
    const bool is_half = half.count({w.triple.a, w.triple.b}) > 0;
    halves += is_half;
    CHECK(w.m_squared == (is_half ? Rational(1, 36) : Rational(1, 18)));
  }
  CHECK(halves == 6);

  const WeightedFlag scaled = flag("F4/SU3xSU2xU1", Rational(18));
  for (std::size_t i = 0; i < wf.weights.size(); ++i)
    CHECK(scaled.weights[i].m_squared == Rational(18) * wf.weights[i].m_squared);
}

TEST_CASE("m^2 symmetries on triples") {
  for (const char* slug : {"G2/U2", "F4/SU3xSU2xU1", "E6/SU3xSU3xSU2xU1", "SU(n+2):n=3", "E7/SU7xU1"}) {
    const WeightedFlag wf = flag(slug);
    const RootSystem& rs = wf.flag.root_system();
    for (const TripleWeight& w : wf.weights) {
      const Triple& t = w.triple;
      CHECK(m_squared(rs, t.a, t.b) == w.m_squared);
      CHECK(m_squared(rs, t.b, t.c) == w.m_squared);
      CHECK(m_squared(rs, t.c, t.a) == w.m_squared);
      CHECK(m_squared(rs, -t.a, -t.b) == w.m_squared);
    }
  }
}

TEST_CASE("K and L for G2") {
  const auto k1 = kl("G2/U2", "+,+,+");
  CHECK(k1.K == Rational(0));
  CHECK(k1.L == Rational(5, 12));
  const auto k2 = kl("G2/U2", "-,+,+");
  CHECK(k2.K == Rational(1, 6));
  CHECK(k2.L == Rational(1, 4));
  const auto k3 = kl("G2/U2", "+,-,+");
  CHECK(k3.K == Rational(1, 6));
  CHECK(k3.L == Rational(1, 4));
  const auto k4 = kl("G2/U2", "+,+,-");
  CHECK(k4.K == Rational(1, 4));
  CHECK(k4.L == Rational(1, 6));
}

TEST_CASE("K and L for F4, Killing and printed normalisations") {
  const std::vector<std::tuple<std::string, Rational, Rational>> rows{
      {"+,+,+", Rational(0), Rational(5, 3)},
      {"-,+,+", Rational(1), Rational(2, 3)},
      {"+,-,+", Rational(1), Rational(2, 3)},
      {"+,+,-", Rational(2, 3), Rational(1)}};
  for (const auto& [J, K, L] : rows) {
    const auto c = kl("F4/SU3xSU2xU1", J);
    CHECK(c.K == K);
    CHECK(c.L == L);
    const auto p = kl("F4/SU3xSU2xU1", J, Rational(18));
    CHECK(p.K == Rational(18) * K);
    CHECK(p.L == Rational(18) * L);
  }
  const auto printed = kl("F4/SU3xSU2xU1", "+,+,-", Rational(18));
  CHECK(printed.K == Rational(12));
  CHECK(printed.L == Rational(18));
}

TEST_CASE("K + L is the total weight and per-pattern sums add up") {
  for (const CatalogEntry& e : catalog()) {
    const WeightedFlag wf = weigh(decompose(e.spec));
    Rational total(0);
    for (const TripleWeight& w : wf.weights) total += w.m_squared;
    for (const auto& J : AlmostComplexStructure::enumerate(wf.flag.summand_count())) {
      const KLConstants c = kl_constants(wf, J);
      CHECK(c.K + c.L == total);
      CHECK(c.K.sign() >= 0);
      CHECK(c.L.sign() >= 0);
      Rational sum(0);
      for (const auto& [pattern, v] : c.per_pattern) sum += v;
      CHECK(sum == total);
      const KLConstants conj = kl_constants(wf, J.conjugate());
      CHECK(conj.K == c.K);
      CHECK(conj.L == c.L);
    }
  }
}

TEST_CASE("Type II SU(3) structure constants") {
  // One triple, every root of A2 with length 1/3.
  const WeightedFlag wf = flag("SU(n+2):n=1");
  REQUIRE(wf.weights.size() == 1);
  CHECK(wf.weights[0].m_squared == Rational(1, 6));
  CHECK(kl_constants(wf, AlmostComplexStructure::parse("+,+,-")).K == Rational(1, 6));
  CHECK(kl_constants(wf, AlmostComplexStructure::parse("+,+,+")).L == Rational(1, 6));
}
