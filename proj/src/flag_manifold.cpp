#include "flagcurv/flag_manifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flagcurv {

void FlagSpec::validate() const {
  root_system.validate();
  if (removed.empty()) throw std::invalid_argument("flag: at least one simple root must be removed");
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (removed[i] < 1 || removed[i] > root_system.rank)
      throw std::invalid_argument("flag: removed index " + std::to_string(removed[i]) +
                                  " out of range for " + root_system.str());
    if (i > 0 && removed[i] <= removed[i - 1])
      throw std::invalid_argument("flag: removed indices must be strictly increasing");
  }
}

std::string to_string(FlagKind kind) {
  switch (kind) {
    case FlagKind::TwoSummand: return "TwoSummand";
    case FlagKind::ThreeTypeI: return "ThreeTypeI";
    case FlagKind::ThreeTypeII: return "ThreeTypeII";
    case FlagKind::Other: return "Other";
  }
  return "Other";
}

FlagKind parse_flag_kind(std::string_view text) {
  for (FlagKind k : {FlagKind::TwoSummand, FlagKind::ThreeTypeI, FlagKind::ThreeTypeII, FlagKind::Other})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown family_kind '" + std::string(text) + "'");
}

FlagDecomposition::FlagDecomposition(FlagSpec spec, RootSystemPtr rs, std::vector<Root> complementary,
                                     std::vector<Summand> summands, FlagKind kind)
    : spec_(std::move(spec)),
      rs_(std::move(rs)),
      complementary_(std::move(complementary)),
      summands_(std::move(summands)),
      kind_(kind) {}

std::vector<int> FlagDecomposition::dimensions() const {
  std::vector<int> dims;
  for (const Summand& s : summands_) dims.push_back(s.real_dimension());
  return dims;
}

int FlagDecomposition::dimension() const {
  int total = 0;
  for (const Summand& s : summands_) total += s.real_dimension();
  return total;
}

std::vector<int> FlagDecomposition::coefficient_tuple(const Root& r) const {
  std::vector<int> t;
  t.reserve(spec_.removed.size());
  for (int idx : spec_.removed) t.push_back(r[idx - 1]);
  return t;
}

int FlagDecomposition::summand_of(const Root& r) const {
  const Root pos = r.is_positive() ? r : -r;
  const auto t = coefficient_tuple(pos);
  for (const Summand& s : summands_)
    if (s.coefficient_tuple == t) return s.index;
  return 0;
}

namespace {

FlagKind classify_kind(const RootSystem& rs, const std::vector<int>& removed) {
  const auto heights = coefficient_heights(rs);
  if (removed.size() == 1) {
    const int h = heights[static_cast<std::size_t>(removed[0] - 1)];
    if (h == 2) return FlagKind::TwoSummand;
    if (h == 3) return FlagKind::ThreeTypeI;
  } else if (removed.size() == 2) {
    if (heights[static_cast<std::size_t>(removed[0] - 1)] == 1 &&
        heights[static_cast<std::size_t>(removed[1] - 1)] == 1)
      return FlagKind::ThreeTypeII;
  }
  return FlagKind::Other;
}

// Type II order (1,0), (0,1), (1,1); otherwise by total coefficient, then lexicographic.
bool tuple_before(const std::vector<int>& x, const std::vector<int>& y) {
  int sx = 0, sy = 0;
  for (int v : x) sx += v;
  for (int v : y) sy += v;
  if (sx != sy) return sx < sy;
  return x > y;
}

}  // namespace

FlagDecomposition decompose(const FlagSpec& spec) {
  spec.validate();
  RootSystemPtr rs = shared_root_system(spec.root_system);

  std::vector<Root> complementary;
  std::map<std::vector<int>, std::vector<Root>> fibers;
  for (const Root& r : rs->positive_roots()) {
    std::vector<int> t;
    bool in_m = false;
    for (int idx : spec.removed) {
      t.push_back(r[idx - 1]);
      in_m = in_m || r[idx - 1] != 0;
    }
    if (!in_m) continue;
    complementary.push_back(r);
    fibers[t].push_back(r);
  }

  std::vector<std::vector<int>> keys;
  for (const auto& [t, roots] : fibers) keys.push_back(t);
  std::sort(keys.begin(), keys.end(), tuple_before);

  std::vector<Summand> summands;
  for (std::size_t i = 0; i < keys.size(); ++i)
    summands.push_back(Summand{static_cast<int>(i) + 1, keys[i], fibers[keys[i]]});

  const FlagKind kind = classify_kind(*rs, spec.removed);
  return FlagDecomposition(spec, std::move(rs), std::move(complementary), std::move(summands), kind);
}

std::vector<Triple> enumerate_triples(const FlagDecomposition& d) {
  const RootSystem& rs = d.root_system();
  const auto& roots = d.complementary_positive();
  std::vector<Triple> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || !(roots[i] < roots[j])) continue;
      const Root sum = roots[i] + roots[j];
      if (!rs.is_root(sum)) continue;
      Triple t{roots[i], roots[j], -sum, {}, {}};
      t.summands = {d.summand_of(t.a), d.summand_of(t.b), d.summand_of(t.c)};
      t.pattern = t.summands;
      std::sort(t.pattern.begin(), t.pattern.end());
      out.push_back(std::move(t));
    }
  std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
    if (x.pattern != y.pattern) return x.pattern < y.pattern;
    if (x.a != y.a) return x.a.height() != y.a.height() ? x.a.height() < y.a.height() : x.a < y.a;
    return x.b.height() != y.b.height() ? x.b.height() < y.b.height() : x.b < y.b;
  });
  return out;
}

namespace {

FlagSpec make(Family f, int rank, std::vector<int> removed, std::string name, std::string slug) {
  FlagSpec s{RootFamily{f, rank}, std::move(removed), std::move(name), std::move(slug)};
  s.validate();
  return s;
}

std::string num(int v) { return std::to_string(v); }

FlagSpec so_odd_two(int l, int m) {
  if (l <= 0 || m < 0 || l - m < 2 || l < 2)
    throw std::invalid_argument("SO(2l+1)/U(l-m)xSO(2m+1) needs l > 0, m >= 0, l-m >= 2");
  return make(Family::B, l, {l - m},
              "SO(" + num(2 * l + 1) + ")/U(" + num(l - m) + ")×SO(" + num(2 * m + 1) + ")",
              "SO(2l+1)/U(l-m)xSO(2m+1):l=" + num(l) + ",m=" + num(m));
}

FlagSpec sp_two(int l, int m) {
  if (m <= 0 || l - m < 1) throw std::invalid_argument("Sp(l)/U(l-m)xSp(m) needs l > m > 0");
  return make(Family::C, l, {l - m}, "Sp(" + num(l) + ")/U(" + num(l - m) + ")×Sp(" + num(m) + ")",
              "Sp(l)/U(l-m)xSp(m):l=" + num(l) + ",m=" + num(m));
}

FlagSpec so_even_two(int l, int m) {
  if (m < 2 || l - m < 2)
    throw std::invalid_argument("SO(2l)/U(l-m)xSO(2m) needs m >= 2 and l-m >= 2 for two summands");
  return make(Family::D, l, {l - m}, "SO(" + num(2 * l) + ")/U(" + num(l - m) + ")×SO(" + num(2 * m) + ")",
              "SO(2l)/U(l-m)xSO(2m):l=" + num(l) + ",m=" + num(m));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const std::string t1 = "Table 1";
  c.push_back({so_odd_two(2, 0), t1, "l=2,m=0"});
  c.push_back({so_odd_two(4, 1), t1, "l=4,m=1"});
  c.push_back({sp_two(2, 1), t1, "l=2,m=1"});
  c.push_back({sp_two(4, 2), t1, "l=4,m=2"});
  c.push_back({so_even_two(4, 2), t1, "l=4,m=2"});
  c.push_back({so_even_two(5, 2), t1, "l=5,m=2"});
  c.push_back({make(Family::G, 2, {1}, "G2/U(2) (short-root U(2))", "G2/U2-short"), t1, ""});
  c.push_back({make(Family::F, 4, {1}, "F4/SO(7)×U(1)", "F4/SO7xU1"), t1, ""});
  c.push_back({make(Family::F, 4, {4}, "F4/Sp(3)×U(1)", "F4/Sp3xU1"), t1, ""});
  c.push_back({make(Family::E, 6, {2}, "E6/SU(6)×U(1)", "E6/SU6xU1"), t1, ""});
  c.push_back({make(Family::E, 6, {3}, "E6/SU(2)×SU(5)×U(1)", "E6/SU2xSU5xU1"), t1, ""});
  c.push_back({make(Family::E, 7, {2}, "E7/SU(7)×U(1)", "E7/SU7xU1"), t1, ""});
  c.push_back({make(Family::E, 7, {6}, "E7/SU(2)×SO(10)×U(1)", "E7/SU2xSO10xU1"), t1, ""});
  c.push_back({make(Family::E, 7, {1}, "E7/SO(12)×U(1)", "E7/SO12xU1"), t1, ""});
  c.push_back({make(Family::E, 8, {8}, "E8/E7×U(1)", "E8/E7xU1"), t1, ""});
  c.push_back({make(Family::E, 8, {1}, "E8/SO(14)×U(1)", "E8/SO14xU1"), t1, ""});

  const std::string t3 = "Table 3";
  c.push_back({make(Family::G, 2, {2}, "G2/U(2)", "G2/U2"), t3, ""});
  c.push_back({make(Family::F, 4, {2}, "F4/SU(3)×SU(2)×U(1)", "F4/SU3xSU2xU1"), t3, ""});
  c.push_back({make(Family::E, 6, {4}, "E6/SU(3)×SU(3)×SU(2)×U(1)", "E6/SU3xSU3xSU2xU1"), t3, ""});
  c.push_back({make(Family::E, 7, {5}, "E7/SU(5)×SU(3)×U(1)", "E7/SU5xSU3xU1"), t3, ""});
  c.push_back({make(Family::E, 7, {3}, "E7/SU(6)×SU(2)×U(1)", "E7/SU6xSU2xU1"), t3, ""});
  c.push_back({make(Family::E, 8, {7}, "E8/E6×SU(2)×U(1)", "E8/E6xSU2xU1"), t3, ""});
  c.push_back({make(Family::E, 8, {2}, "E8/SU(8)×U(1)", "E8/SU8xU1"), t3, ""});

  const std::string t4 = "Table 4";
  c.push_back({su_three_blocks(1, 1, 1), t4, "l=1,m=1,n=1"});
  c.push_back({su_three_blocks(2, 1, 1), t4, "l=2,m=1,n=1"});
  c.push_back({su_three_blocks(1, 2, 3), t4, "l=1,m=2,n=3"});
  c.push_back({so_even_u1_ul1(4), t4, "l=4"});
  c.push_back({so_even_u1_ul1(5), t4, "l=5"});
  c.push_back({make(Family::E, 6, {1, 6}, "E6/SO(8)×U(1)×U(1)", "E6/SO8xU1xU1"), t4, ""});
  return c;
}

std::map<std::string, int> parse_params(std::string_view text, std::string_view whole) {
  std::map<std::string, int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 >= item.size())
      throw std::out_of_range("malformed parameters in flag name '" + std::string(whole) + "'");
    try {
      out[std::string(item.substr(0, eq))] = std::stoi(std::string(item.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw std::out_of_range("malformed parameters in flag name '" + std::string(whole) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

int param(const std::map<std::string, int>& p, const char* key, std::string_view whole) {
  const auto it = p.find(key);
  if (it == p.end())
    throw std::out_of_range("missing parameter '" + std::string(key) + "' in '" + std::string(whole) + "'");
  return it->second;
}

}  // namespace

FlagSpec su_three_blocks(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("SU(l+m+n) blocks must be positive");
  const int size = l + m + n;
  const std::string name = "SU(" + num(size) + ")/S(U(" + num(l) + ")×U(" + num(m) + ")×U(" + num(n) + "))";
  const std::string slug = (m == 1 && n == 1) ? "SU(n+2):n=" + num(l)
                                              : "SU(l+m+n):l=" + num(l) + ",m=" + num(m) + ",n=" + num(n);
  return make(Family::A, size - 1, {l, l + m}, name, slug);
}

FlagSpec so_even_u1_ul1(int l) {
  if (l < 4) throw std::invalid_argument("SO(2l)/U(1)xU(l-1) needs l >= 4");
  return make(Family::D, l, {l - 1, l}, "SO(" + num(2 * l) + ")/U(1)×U(" + num(l - 1) + ")",
              "SO(2l)/U(1)xU(l-1):l=" + num(l));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

FlagSpec resolve_flag(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.spec.slug == name) return e.spec;

  const std::size_t colon = name.find(':');
  if (colon == std::string_view::npos) throw std::out_of_range("unknown flag '" + std::string(name) + "'");
  const std::string_view head = name.substr(0, colon);
  const std::string_view tail = name.substr(colon + 1);

  try {
    if (head == "SU(n+2)") {
      const auto p = parse_params(tail, name);
      return su_three_blocks(param(p, "n", name), 1, 1);
    }
    if (head == "SU(l+m+n)") {
      const auto p = parse_params(tail, name);
      return su_three_blocks(param(p, "l", name), param(p, "m", name), param(p, "n", name));
    }
    if (head == "SO(2l)/U(1)xU(l-1)") return so_even_u1_ul1(param(parse_params(tail, name), "l", name));
    if (head == "SO(2l+1)/U(l-m)xSO(2m+1)") {
      const auto p = parse_params(tail, name);
      return so_odd_two(param(p, "l", name), param(p, "m", name));
    }
    if (head == "Sp(l)/U(l-m)xSp(m)") {
      const auto p = parse_params(tail, name);
      return sp_two(param(p, "l", name), param(p, "m", name));
    }
    if (head == "SO(2l)/U(l-m)xSO(2m)") {
      const auto p = parse_params(tail, name);
      return so_even_two(param(p, "l", name), param(p, "m", name));
    }

    // Raw address "F4:2" or "A3:2,3".
    const RootFamily family = RootFamily::parse(head);
    std::vector<int> removed;
    std::size_t pos = 0;
    while (pos <= tail.size()) {
      const std::size_t comma = std::min(tail.find(',', pos), tail.size());
      removed.push_back(std::stoi(std::string(tail.substr(pos, comma - pos))));
      pos = comma + 1;
    }
    std::sort(removed.begin(), removed.end());
    std::ostringstream display;
    display << family.str() << ":";
    for (std::size_t i = 0; i < removed.size(); ++i) display << (i ? "," : "") << removed[i];
    FlagSpec spec{family, removed, display.str(), display.str()};
    spec.validate();
    return spec;
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    throw std::out_of_range("cannot resolve flag '" + std::string(name) + "': " + e.what());
  }
}

}  // namespace flagcurv
