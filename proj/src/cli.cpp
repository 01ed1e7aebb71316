#include "flagcurv/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "flagcurv/report.hpp"

namespace flagcurv {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string flag;
  std::string J;
  std::string metric;
  std::string fix;
  std::string t;
  std::string constraint;
  std::string format = "table";
  std::string input;
  std::string only;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

FlagSpec flag_of(const Options& o) {
  if (o.flag.empty()) throw UsageError("a flag name is required");
  try {
    return resolve_flag(o.flag);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

AlmostComplexStructure structure_of(const Options& o, int summands) {
  if (o.J.empty()) throw UsageError("--J is required");
  AlmostComplexStructure J;
  try {
    J = AlmostComplexStructure::parse(o.J);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (J.size() != summands)
    throw UsageError("sign string '" + o.J + "' has " + std::to_string(J.size()) + " signs, flag has " +
                     std::to_string(summands) + " summands");
  return J;
}

SurdMetric metric_of(const Options& o, int summands) {
  if (o.metric.empty()) throw UsageError("--metric is required");
  SurdMetric g;
  for (const std::string& item : split(o.metric, ',')) g.lambdas.push_back(Surd::parse(item));
  g.validate(summands);
  return g;
}

std::map<int, Rational> fixed_of(const Options& o) {
  std::map<int, Rational> fixed;
  for (const std::string& item : split(o.fix, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || item.size() < 2 || (item[0] != 'l' && item[0] != 'L'))
      throw UsageError("malformed --fix entry '" + item + "', expected l<i>=<rational>");
    fixed[std::stoi(item.substr(1, eq - 1))] = Rational::parse(item.substr(eq + 1));
  }
  return fixed;
}

std::string kl_map(const std::map<std::array<int, 3>, Rational>& m) {
  std::string out;
  for (const auto& [p, v] : m)
    out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
           std::to_string(p[2]) + "):" + v.str();
  return out;
}

std::string vars(int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) out += (i > 1 ? "," : "") + std::string("l") + std::to_string(i);
  return out;
}

void cmd_list(const Options& o, std::ostream& out) {
  ReportTable t{"catalog", "", {"slug", "name", "table", "kind", "dims"}, {}, {}};
  for (const CatalogEntry& e : catalog()) {
    const FlagDecomposition d = decompose(e.spec);
    std::string dims;
    for (int v : d.dimensions()) dims += (dims.empty() ? "" : ",") + std::to_string(v);
    t.rows.push_back({e.spec.slug, e.spec.name, e.table, to_string(d.kind()), "(" + dims + ")"});
  }
  render(out, t, parse_format(o.format));
}

void cmd_describe(const Options& o, std::ostream& out) {
  const Format f = parse_format(o.format);
  FlagDecomposition d = [&] {
    if (o.input.empty()) return decompose(flag_of(o));
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot read " + o.input);
    return decomposition_from_json(json::parse(in));
  }();
  if (f == Format::Json) {
    out << to_json(d).dump(2) << "\n";
    return;
  }
  ReportTable s{"summands", d.spec().name + "  [" + d.spec().root_system.str() + ", removed {" + [&] {
                  std::string r;
                  for (int v : d.spec().removed) r += (r.empty() ? "" : ",") + std::to_string(v);
                  return r;
                }() + "}, " + to_string(d.kind()) + "]",
                {"index", "coeff_tuple", "dim", "roots"}, {}, {}};
  for (const Summand& m : d.summands()) {
    std::string tuple, roots;
    for (int v : m.coefficient_tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(v);
    for (const Root& r : m.roots) roots += (roots.empty() ? "" : " ") + r.str();
    s.rows.push_back({std::to_string(m.index), "(" + tuple + ")", std::to_string(m.real_dimension()), roots});
  }
  ReportTable tr{"triples", "Canonical zero-sum triples", {"a", "b", "c", "pattern"}, {}, {}};
  for (const Triple& t : enumerate_triples(d))
    tr.rows.push_back({t.a.str(), t.b.str(), t.c.str(),
                       "(" + std::to_string(t.pattern[0]) + "," + std::to_string(t.pattern[1]) + "," +
                           std::to_string(t.pattern[2]) + ")"});
  render(out, std::vector<ReportTable>{s, tr}, f);
}

void cmd_constants(const Options& o, std::ostream& out) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const Format f = parse_format(o.format);
  const int n = wf.flag.summand_count();
  if (!o.J.empty()) {
    const KLConstants kl = kl_constants(wf, structure_of(o, n));
    if (f == Format::Json) {
      out << json{{"K", kl.K.str()}, {"L", kl.L.str()}}.dump() << "\n";
      return;
    }
    ReportTable t{"constants", "", {"K", "L", "per pattern"}, {{kl.K.str(), kl.L.str(), kl_map(kl.per_pattern)}}, {}};
    render(out, t, f);
    return;
  }
  ReportTable t{"constants", "Constants K and L for " + wf.flag.spec().name, {"structure", "K", "L"}, {}, {}};
  json arr = json::array();
  for (const auto& J : AlmostComplexStructure::enumerate(n)) {
    const KLConstants kl = kl_constants(wf, J);
    t.rows.push_back({J.str(), kl.K.str(), kl.L.str()});
    arr.push_back({{"J", J.str()}, {"K", kl.K.str()}, {"L", kl.L.str()}});
  }
  if (f == Format::Json) out << arr.dump(2) << "\n";
  else render(out, t, f);
}

void cmd_norms(const Options& o, std::ostream& out) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const int n = wf.flag.summand_count();
  const auto J = structure_of(o, n);
  const SurdMetric g = metric_of(o, n);
  const NormBundle<Surd> nb = curvature_norms(wf, J, g);
  const Format f = parse_format(o.format);
  const std::string cls = gray_hervella_class(nb).label();
  const Surd gap = scalar_gap(nb);
  if (f == Format::Json) {
    out << json{{"dF_minus_sq", nb.dF_minus_sq.str()}, {"N0_sq", nb.N0_sq.str()}, {"dF_plus_sq", nb.dF_plus_sq.str()},
                {"DF_sq", nb.DF_sq.str()}, {"class", cls}, {"gap", gap.str()}}
               .dump(2)
        << "\n";
    return;
  }
  ReportTable t{"norms", "", {"quantity", "value"},
                {{"|(dF)^-|^2", nb.dF_minus_sq.str()},
                 {"|N^0|^2", nb.N0_sq.str()},
                 {"|(dF)^+|^2", nb.dF_plus_sq.str()},
                 {"|DF|^2", nb.DF_sq.str()},
                 {"class", cls},
                 {"2s1 - s", gap.str()}},
                {}};
  render(out, t, f);
}

void cmd_classify(const Options& o, std::ostream& out) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const int n = wf.flag.summand_count();
  const auto J = structure_of(o, n);
  const SurdMetric g = metric_of(o, n);
  const NormBundle<Surd> nb = curvature_norms(wf, J, g);
  const std::string cls = gray_hervella_class(nb).label();
  const bool klsc = scalar_gap(nb).is_zero();
  const Format f = parse_format(o.format);
  if (f == Format::Json) out << json{{"class", cls}, {"klsc", klsc}}.dump() << "\n";
  else if (f == Format::Csv) out << "class,klsc\n" << cls << "," << (klsc ? "yes" : "no") << "\n";
  else out << cls << ", Klsc: " << (klsc ? "yes" : "no") << "\n";
}

void cmd_gap(const Options& o, std::ostream& out) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const int n = wf.flag.summand_count();
  const auto J = structure_of(o, n);
  const Format f = parse_format(o.format);
  if (!o.metric.empty()) {
    const SurdMetric g = metric_of(o, n);
    const NormBundle<Surd> nb = curvature_norms(wf, J, g);
    ReportTable t{"gap", "", {"quantity", "value"}, {{"2s1 - s", scalar_gap(nb).str()}}, {}};
    if (!o.t.empty()) {
      const Rational t_val = Rational::parse(o.t);
      t.rows.push_back({"2s2(t) - s at t=" + t_val.str(), scalar_gap_s2(nb, t_val).str()});
    }
    if (f == Format::Json) {
      json j;
      for (const auto& row : t.rows) j[row[0]] = row[1];
      out << j.dump(2) << "\n";
    } else {
      render(out, t, f);
    }
    return;
  }
  const GapPolynomial gp = gap_polynomial(wf, J);
  std::string denom = "12";
  for (int i = 0; i < n; ++i) {
    const int e = gp.denominator[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    denom += "*l" + std::to_string(i + 1);
    if (e > 1) denom += "^" + std::to_string(e);
  }
  if (f == Format::Json) {
    out << json{{"variables", vars(n)}, {"denominator", denom}, {"degree", gp.degree()}, {"polynomial", gp.poly.str()}}
               .dump(2)
        << "\n";
    return;
  }
  ReportTable t{"gap", "", {"quantity", "value"},
                {{"(2s1 - s) * " + denom, gp.poly.str()}, {"degree", std::to_string(gp.degree())}},
                {}};
  render(out, t, f);
}

std::string solution_summary(const SolutionFamily& sf) {
  std::string rel;
  for (std::size_t i = 0; i < sf.relations.size(); ++i) {
    const auto& r = sf.relations[i];
    const std::string name = "l" + std::to_string(i + 1);
    const std::string t = "l" + std::to_string(sf.solved_var);
    if (static_cast<int>(i) + 1 == sf.solved_var) continue;
    std::string expr;
    if (r.slope.is_zero()) expr = r.offset.str();
    else {
      expr = (r.slope == Rational(1) ? "" : (r.slope == Rational(-1) ? "-" : r.slope.str() + "*")) + t;
      if (!r.offset.is_zero()) expr += (r.offset.sign() > 0 ? " + " : " - ") + abs(r.offset).str();
    }
    rel += (rel.empty() ? "" : ", ") + name + " = " + expr;
  }
  return rel;
}

void cmd_solve(const Options& o, std::ostream& out) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const int n = wf.flag.summand_count();
  const auto J = structure_of(o, n);
  std::optional<GrayHervellaClass> constraint;
  if (!o.constraint.empty()) constraint = GrayHervellaClass::parse(o.constraint);
  const SolutionFamily sf = solve(wf, J, fixed_of(o), constraint);
  const Format f = parse_format(o.format);
  if (f == Format::Json) {
    out << to_json(sf).dump(2) << "\n";
    return;
  }
  auto surds = [](const std::vector<Surd>& v) {
    std::string s;
    for (const Surd& x : v) s += (s.empty() ? "" : "; ") + x.str();
    return s.empty() ? std::string("none") : s;
  };
  const std::string var = "l" + std::to_string(sf.solved_var);
  ReportTable t{"solve", "", {"quantity", "value"}, {}, {}};
  t.rows.push_back({"flag", sf.flag});
  t.rows.push_back({"J", sf.J});
  t.rows.push_back({"constraint", sf.constraint ? sf.constraint->label() : "none"});
  t.rows.push_back({"relations", sf.inconsistent ? "inconsistent" : solution_summary(sf)});
  if (!sf.inconsistent) t.rows.push_back({"equation", sf.residual.str(var) + " = 0"});
  t.rows.push_back({"roots " + var, sf.identically ? "all" : surds(sf.roots)});
  t.rows.push_back({"positive " + var, sf.identically ? "all positive" : surds(sf.positivity_filtered)});
  t.rows.push_back({"mode", sf.mode == SolveMode::Exact ? "exact" : "numeric"});
  t.rows.push_back({"certified", sf.certified ? "yes" : "no"});
  if (sf.normalized) t.notes.push_back("normalised by scale invariance");
  if (!sf.note.empty()) t.notes.push_back(sf.note);
  render(out, t, f);
}

void cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const WeightedFlag wf = weigh(decompose(flag_of(o)));
  const int n = wf.flag.summand_count();
  const auto J = structure_of(o, n);
  const SurdMetric g = metric_of(o, n);
  const bool ok = verify(wf, J, g);
  const Format f = parse_format(o.format);
  json j{{"flag", wf.flag.spec().slug}, {"J", J.str()}, {"verified", ok}};
  std::vector<Surd> recomputed;
  if (!ok) {
    // Recompute the last entry with the others held fixed, when they are rational.
    std::map<int, Rational> fixed;
    bool rational = true;
    for (int v = 1; v < n; ++v) {
      rational = rational && g(v).is_rational();
      fixed[v] = g(v).a();
    }
    if (rational) recomputed = solve(wf, J, fixed).roots;
    json quoted = json::array();
    for (const Surd& s : g.lambdas) quoted.push_back(s.str());
    json roots = json::array();
    for (const Surd& s : recomputed) roots.push_back(s.str());
    j["quoted"] = quoted;
    j["recomputed_l" + std::to_string(n)] = roots;
    err << "warning: 2s1 - s does not vanish at the given metric";
    if (!recomputed.empty()) err << "; exact roots for l" << n << " are " << roots.dump();
    err << "\n";
  }
  if (f == Format::Json) out << j.dump(2) << "\n";
  else if (f == Format::Csv) out << "verified\n" << (ok ? "yes" : "no") << "\n";
  else {
    out << "verified: " << (ok ? "yes" : "no") << "\n";
    if (!ok && !recomputed.empty()) {
      out << "quoted l" << n << ": " << g(n).str() << "\n";
      out << "recomputed l" << n << ":";
      for (const Surd& s : recomputed) out << " " << s.str();
      out << "\n";
    }
  }
}

void cmd_tables(const Options& o, std::ostream& out) {
  std::vector<ReportTable> all = published_tables();
  if (!o.only.empty()) {
    std::vector<ReportTable> sel;
    for (const std::string& id : split(o.only, ','))
      for (const ReportTable& t : all)
        if (t.id == id) sel.push_back(t);
    if (sel.empty()) throw UsageError("no table named '" + o.only + "'");
    all = std::move(sel);
  }
  render(out, all, parse_format(o.format));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kähler-like scalar curvature on generalized flag manifolds", "flagcurv"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    bool flag;
    std::vector<const char*> opts;
  };
  const std::vector<Verb> verbs{
      {"list", "List the built-in catalog", false, {}},
      {"describe", "Isotropy summands and zero-sum triples", true, {"input"}},
      {"constants", "K and L for one or all almost complex structures", true, {"J"}},
      {"norms", "Gray-Hervella norm components", true, {"J", "metric"}},
      {"classify", "Gray-Hervella class and the Klsc test", true, {"J", "metric"}},
      {"gap", "2s1 - s as a polynomial, or its value at a metric", true, {"J", "metric", "t"}},
      {"solve", "Solve 2s1 - s = 0", true, {"J", "fix", "constraint"}},
      {"verify", "Exact check of 2s1 - s = 0 at a metric", true, {"J", "metric"}},
      {"tables", "Reconstructions of the published tables", false, {"only"}},
  };
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    if (v.flag) sub->add_option("flag", o.flag, "Catalog slug, family handle or raw address like F4:2");
    sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    for (const std::string opt : v.opts) {
      if (opt == "J") sub->add_option("--J", o.J, "Signs, e.g. \"+,+,-\"");
      if (opt == "metric") sub->add_option("--metric", o.metric, "Comma-separated entries: a, a/b, a+b*sqrt(d)");
      if (opt == "t") sub->add_option("--t", o.t, "Rational parameter of 2s2(t) - s");
      if (opt == "fix") sub->add_option("--fix", o.fix, "e.g. l1=1,l2=2");
      if (opt == "constraint") sub->add_option("--constraint", o.constraint, "Gray-Hervella class, e.g. W1+W3");
      if (opt == "input") sub->add_option("--input", o.input, "Decomposition JSON written by describe");
      if (opt == "only") sub->add_option("--only", o.only, "Comma-separated table ids");
    }
  }

  std::vector<std::string> argv_store{"flagcurv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "list") cmd_list(o, out);
    else if (verb == "describe") cmd_describe(o, out);
    else if (verb == "constants") cmd_constants(o, out);
    else if (verb == "norms") cmd_norms(o, out);
    else if (verb == "classify") cmd_classify(o, out);
    else if (verb == "gap") cmd_gap(o, out);
    else if (verb == "solve") cmd_solve(o, out);
    else if (verb == "verify") cmd_verify(o, out, err);
    else if (verb == "tables") cmd_tables(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedSummandCount& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedSummands;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kOk;
}

}  // namespace flagcurv
