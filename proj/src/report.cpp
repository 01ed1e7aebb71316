#include "flagcurv/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagcurv {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join_surds(const std::vector<Surd>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "; " : "") + v[i].str();
  return out;
}


std::string removed_of(const FlagSpec& s) { return "{" + join(s.removed) + "}"; }

// Positive solutions l2/l1 of the two-summand equation at l1 = 1.
std::string two_summand_klsc(const WeightedFlag& wf, const char* signs) {
  return join_surds(solve(wf, AlmostComplexStructure::parse(signs), {{1, Rational(1)}}).positivity_filtered);
}

const std::vector<std::string>& standard_structures() {
  static const std::vector<std::string> s{"+,+,+", "-,+,+", "+,-,+", "+,+,-"};
  return s;
}

ReportTable table1() {
  ReportTable t{"table1", "Flag manifolds with two isotropy summands", {"flag", "G", "removed", "d1", "d2", "kind", "l2/l1 J=(+,+)", "l2/l1 J=(+,-)"}, {}, {}};
  for (const CatalogEntry& e : catalog()) {
    if (e.table != "Table 1") continue;
    const WeightedFlag wf = weigh(decompose(e.spec));
    const auto dims = wf.flag.dimensions();
    t.rows.push_back({e.spec.name, e.spec.root_system.str(), removed_of(e.spec), std::to_string(dims.at(0)),
                      std::to_string(dims.at(1)), to_string(wf.flag.kind()), two_summand_klsc(wf, "+,+"),
                      two_summand_klsc(wf, "+,-")});
  }
  t.notes.push_back("Classical families appear at two representative ranks each.");
  return t;
}

ReportTable table3() {
  ReportTable t{"table3", "Dimensions d_i = dim(m_i) for flag manifolds of type I", {"flag", "G", "removed", "d1", "d2", "d3", "printed", "kind"}, {}, {}};
  for (const CatalogEntry& e : catalog()) {
    if (e.table != "Table 3") continue;
    const FlagDecomposition d = decompose(e.spec);
    const auto dims = d.dimensions();
    const auto printed = printed_type_one_dimensions(e.spec.slug);
    std::string quoted = "(" + join(std::vector<int>(printed.begin(), printed.end())) + ")";
    if (!std::equal(printed.begin(), printed.end(), dims.begin())) quoted += " [erratum]";
    t.rows.push_back({e.spec.name, e.spec.root_system.str(), removed_of(e.spec), std::to_string(dims.at(0)),
                      std::to_string(dims.at(1)), std::to_string(dims.at(2)), quoted, to_string(d.kind())});
  }
  t.notes.push_back(
      "Erratum: the published table prints d3 = 8 for E7/SU(5)×SU(3)×U(1). dim E7 - dim K = 133 - 33 = 100 = 60 + 30 + 10, "
      "and ten roots carry coefficient 3 on the removed root, so d3 = 10.");
  return t;
}

ReportTable table4() {
  ReportTable t{"table4", "Flag manifolds with three summands of type II", {"flag", "parameters", "removed", "d1", "d2", "d3", "printed formula", "kind"}, {}, {}};
  for (const CatalogEntry& e : catalog()) {
    if (e.table != "Table 4") continue;
    const FlagDecomposition d = decompose(e.spec);
    const auto dims = d.dimensions();
    std::string formula = "16, 16, 16";
    if (e.spec.root_system.family == Family::A) formula = "2mn, 2mp, 2np [erratum: p = l; recomputed (2lm, 2mn, 2ln)]";
    if (e.spec.root_system.family == Family::D) formula = "2(l-1), 2(l-1), (l-1)(l-2)";
    t.rows.push_back({e.spec.name, e.parameters.empty() ? "-" : e.parameters, removed_of(e.spec),
                      std::to_string(dims.at(0)), std::to_string(dims.at(1)), std::to_string(dims.at(2)), formula,
                      to_string(d.kind())});
  }
  t.notes.push_back(
      "Erratum: the published first row prints 2mn, 2mp, 2np with an undefined p. Dimensions here are counted "
      "from roots; with p read as l they agree up to the order of the summands.");
  return t;
}

ReportTable kl_table(const std::string& id, const std::string& slug, const Rational& printed_scale) {
  const WeightedFlag wf = weigh(decompose(resolve_flag(slug)));
  ReportTable t{id, "Constants K and L for " + wf.flag.spec().name, {"structure", "K", "L"}, {}, {}};
  const bool rescaled = printed_scale != Rational(1);
  if (rescaled) t.columns.insert(t.columns.end(), {"K (printed)", "L (printed)", "K/L"});
  for (const std::string& s : standard_structures()) {
    const auto J = AlmostComplexStructure::parse(s);
    const KLConstants kl = kl_constants(wf, J);
    std::vector<std::string> row{J.str(), kl.K.str(), kl.L.str()};
    if (rescaled) {
      row.push_back((kl.K * printed_scale).str());
      row.push_back((kl.L * printed_scale).str());
      row.push_back(kl.L.is_zero() ? "-" : (kl.K / kl.L).str());
    }
    t.rows.push_back(std::move(row));
  }
  if (rescaled)
    t.notes.push_back("K, L are in the Killing-dual normalisation; the printed values are these times " +
                      printed_scale.str() + ". The zero set of 2s1 - s depends only on K/L.");
  return t;
}

ReportTable f4_triples() {
  const WeightedFlag wf = weigh(decompose(resolve_flag("F4/SU3xSU2xU1")));
  ReportTable t{"triples-f4", "Triples with zero sum for " + wf.flag.spec().name, {"#", "alpha", "beta", "-gamma", "pattern", "m^2", "m^2 (printed)"}, {}, {}};
  int i = 0;
  for (const TripleWeight& w : wf.weights) {
    const auto& p = w.triple.pattern;
    t.rows.push_back({std::to_string(++i), w.triple.a.str(), w.triple.b.str(), (-w.triple.c).str(),
                      "(" + join(std::vector<int>(p.begin(), p.end())) + ")", w.m_squared.str(),
                      (w.m_squared * Rational(18)).str()});
  }
  t.notes.push_back("m^2 in the Killing-dual normalisation; the printed column is 18 times it.");
  return t;
}

struct QuotedSolution {
  const char* slug;
  const char* signs;
  std::vector<const char*> metric;
};

ReportTable solutions(const std::string& id, const std::string& title, const std::vector<QuotedSolution>& quoted) {
  ReportTable t{id, title, {"J", "metric", "class", "2s1-s=0", "note"}, {}, {}};
  for (const QuotedSolution& q : quoted) {
    const WeightedFlag wf = weigh(decompose(resolve_flag(q.slug)));
    const auto J = AlmostComplexStructure::parse(q.signs);
    SurdMetric g;
    std::string shown;
    for (const char* m : q.metric) {
      g.lambdas.push_back(Surd::parse(m));
      shown += (shown.empty() ? "" : ", ") + g.lambdas.back().str();
    }
    const bool ok = verify(wf, J, g);
    std::string note;
    if (!ok) {
      std::map<int, Rational> fixed;
      for (int v = 1; v < g.size(); ++v) fixed[v] = g(v).a();
      const SolutionFamily sf = solve(wf, J, fixed);
      note = "erratum: published value l" + std::to_string(g.size()) + " = " + g(g.size()).str() +
             "; exact roots are " + join_surds(sf.roots);
    }
    t.rows.push_back({J.str(), "(" + shown + ")", gray_hervella_class(wf, J, g).label(), ok ? "yes" : "no", note});
  }
  return t;
}

}  // namespace

std::array<int, 3> printed_type_one_dimensions(const std::string& slug) {
  static const std::map<std::string, std::array<int, 3>> quoted{
      {"G2/U2", {4, 2, 4}},
      {"F4/SU3xSU2xU1", {24, 12, 4}},
      {"E6/SU3xSU3xSU2xU1", {36, 18, 4}},
      {"E7/SU5xSU3xU1", {60, 30, 8}},
      {"E7/SU6xSU2xU1", {60, 30, 4}},
      {"E8/E6xSU2xU1", {108, 54, 4}},
      {"E8/SU8xU1", {112, 56, 16}},
  };
  const auto it = quoted.find(slug);
  if (it == quoted.end()) throw std::out_of_range("no type I row for '" + slug + "'");
  return it->second;
}

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + text + "'");
}

json ReportTable::to_json() const {
  json j;
  j["id"] = id;
  j["title"] = title;
  j["columns"] = columns;
  j["rows"] = rows;
  j["notes"] = notes;
  return j;
}

void render(std::ostream& os, const ReportTable& t, Format f) {
  if (f == Format::Json) {
    os << t.to_json().dump(2) << "\n";
    return;
  }
  if (f == Format::Csv) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = display_width(t.columns[c]);
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], display_width(row[c]));
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(width[c] - display_width(cells[c]), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  };
  if (!t.title.empty()) os << "== " << t.title << " ==\n";
  line(t.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : t.rows) line(row);
  for (const std::string& n : t.notes) os << "note: " << n << "\n";
}

void render(std::ostream& os, const std::vector<ReportTable>& ts, Format f) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const ReportTable& t : ts) arr.push_back(t.to_json());
    os << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) os << "\n";
    if (f == Format::Csv) os << "# " << ts[i].id << "\n";
    render(os, ts[i], f);
  }
}

std::vector<ReportTable> published_tables() {
  std::vector<ReportTable> out;
  out.push_back(table1());
  out.push_back(table3());
  out.push_back(table4());
  out.push_back(kl_table("kl-g2", "G2/U2", Rational(1)));
  out.push_back(kl_table("kl-f4", "F4/SU3xSU2xU1", Rational(18)));
  out.push_back(f4_triples());
  out.push_back(solutions("solutions-g2", "Quoted solutions of 2s1 - s = 0 on G2/U(2)",
                          {{"G2/U2", "+,+,+", {"1", "2", "3"}},
                           {"G2/U2", "-,+,+", {"1", "1", "10"}},
                           {"G2/U2", "-,+,+", {"1", "6+2*sqrt(10)", "5+2*sqrt(10)"}},
                           {"G2/U2", "-,+,+", {"1", "2", "9-sqrt(5)"}},
                           {"G2/U2", "+,-,+", {"1", "2", "7+4*sqrt(3)"}},
                           {"G2/U2", "+,+,-", {"1", "1", "17/3+5/3*sqrt(13)"}}}));
  out.push_back(solutions("solutions-f4", "Quoted solutions of 2s1 - s = 0 on F4/SU(3)×SU(2)×U(1)",
                          {{"F4/SU3xSU2xU1", "+,+,+", {"1", "2", "3"}},
                           {"F4/SU3xSU2xU1", "-,+,+", {"1", "6+2*sqrt(10)", "5+2*sqrt(10)"}},
                           {"F4/SU3xSU2xU1", "-,+,+", {"2", "2", "45"}},
                           {"F4/SU3xSU2xU1", "-,+,+", {"1", "2", "19+6*sqrt(10)"}},
                           {"F4/SU3xSU2xU1", "+,-,+", {"2", "2", "45"}},
                           {"F4/SU3xSU2xU1", "+,-,+", {"1", "10", "9"}},
                           {"F4/SU3xSU2xU1", "+,+,-", {"1", "2", "9+2*sqrt(22)"}},
                           {"F4/SU3xSU2xU1", "+,+,-", {"1", "1", "21/4+1/4*sqrt(505)"}}}));
  return out;
}

}  // namespace flagcurv
