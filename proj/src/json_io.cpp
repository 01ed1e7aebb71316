#include "flagcurv/json_io.hpp"

#include <stdexcept>

namespace flagcurv {

json to_json(const Root& r) { return json(r.coeffs()); }

json to_json(const Surd& s) {
  json j;
  j["a"] = s.a().str();
  j["b"] = s.b().str();
  j["d"] = s.d().get_si();
  return j;
}

Surd surd_from_json(const json& j) {
  return Surd(Rational::parse(j.at("a").get<std::string>()), Rational::parse(j.at("b").get<std::string>()),
              mpz_class(j.at("d").get<long>()));
}

json to_json(const FlagDecomposition& d) {
  json j;
  j["name"] = d.spec().name;
  j["slug"] = d.spec().slug;
  j["root_system"] = d.spec().root_system.str();
  j["family_kind"] = to_string(d.kind());
  j["removed"] = d.spec().removed;
  json summands = json::array();
  for (const Summand& s : d.summands()) {
    json roots = json::array();
    for (const Root& r : s.roots) roots.push_back(to_json(r));
    summands.push_back({{"index", s.index}, {"coeff_tuple", s.coefficient_tuple}, {"roots", roots},
                        {"dim", s.real_dimension()}});
  }
  j["summands"] = summands;
  json triples = json::array();
  for (const Triple& t : enumerate_triples(d))
    triples.push_back({{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}, {"pattern", t.pattern}});
  j["triples"] = triples;
  return j;
}

FlagDecomposition decomposition_from_json(const json& j) {
  FlagSpec spec{RootFamily::parse(j.at("root_system").get<std::string>()), j.at("removed").get<std::vector<int>>(),
                j.at("name").get<std::string>(), j.value("slug", j.at("name").get<std::string>())};
  spec.validate();
  FlagDecomposition d = decompose(spec);
  const json rebuilt = to_json(d);
  for (const char* key : {"family_kind", "summands", "triples"})
    if (j.contains(key) && j.at(key) != rebuilt.at(key))
      throw std::runtime_error(std::string("decomposition JSON disagrees with the recomputed '") + key + "'");
  return d;
}

json to_json(const SolutionFamily& sf) {
  json j;
  j["flag"] = sf.flag;
  j["J"] = sf.J;
  j["constraint"] = sf.constraint ? json(sf.constraint->label()) : json(nullptr);
  json fixed = json::object();
  for (const auto& [var, value] : sf.fixed) fixed["l" + std::to_string(var)] = value.str();
  j["fixed"] = fixed;
  j["normalized"] = sf.normalized;
  j["solved_var"] = "l" + std::to_string(sf.solved_var);
  json rel = json::object();
  for (std::size_t i = 0; i < sf.relations.size(); ++i)
    rel["l" + std::to_string(i + 1)] = {{"offset", sf.relations[i].offset.str()},
                                        {"slope", sf.relations[i].slope.str()}};
  j["relations"] = rel;
  j["residual"] = sf.residual.str("l" + std::to_string(sf.solved_var));
  j["mode"] = sf.mode == SolveMode::Exact ? "exact" : "numeric";
  j["identically"] = sf.identically;
  j["inconsistent"] = sf.inconsistent;
  json roots = json::array();
  for (const Surd& s : sf.roots) roots.push_back(to_json(s));
  j["roots"] = roots;
  json positive = json::array();
  for (const Surd& s : sf.positivity_filtered) positive.push_back(to_json(s));
  j["positive"] = positive;
  j["certified"] = sf.certified;
  if (sf.mode == SolveMode::Numeric) j["residual_bound"] = sf.residual_bound;
  if (!sf.note.empty()) j["note"] = sf.note;
  return j;
}

}  // namespace flagcurv
