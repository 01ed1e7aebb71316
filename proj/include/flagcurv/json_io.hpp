#pragma once

#include "json.hpp"

#include "flagcurv/klsc_solver.hpp"

namespace flagcurv {

using json = nlohmann::ordered_json;

json to_json(const Root& r);
json to_json(const Surd& s);  // {"a": "17/3", "b": "5/3", "d": 13}
json to_json(const FlagDecomposition& d);
json to_json(const SolutionFamily& sf);

Surd surd_from_json(const json& j);

/// Rebuilds the decomposition named by a `to_json` document and checks that
/// summands and triples agree with the recorded ones.
/// Throws std::runtime_error on any disagreement.
FlagDecomposition decomposition_from_json(const json& j);

}  // namespace flagcurv
