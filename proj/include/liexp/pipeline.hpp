#pragma once

#include "liexp/constructions.hpp"
#include "liexp/io.hpp"
#include "liexp/target.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liexp {

/// A config that does not type-check. The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Where named fixtures live: <root>/algebras/<name>.json and <root>/golden/<name>.txt.
/// Explicit paths in a config are taken relative to the config's own directory.
struct DataPaths {
    std::string root;
    std::string config_dir = ".";

    std::string algebra(const std::string& name) const { return root + "/algebras/" + name + ".json"; }
    std::string golden(const std::string& name) const { return root + "/golden/" + name + ".txt"; }
    std::string resolve(const std::string& path) const;
};

/// "so3" (fixture name) or {"path": "file.json"}.
LieAlgebra load_algebra(const Json& spec, const DataPaths& paths);
/// "Z4", "SE3", "klein", {"cyclic": n}, {"direct_product": [a, b]}, {"path": ...} or a Semigroup JSON object.
Semigroup load_semigroup(const Json& spec, const DataPaths& paths);

enum class Reduction { none, zero, h, sign };

struct PipelineResult {
    LieAlgebra base;       // algebra of the first expansion (or the input when nothing expands)
    LieAlgebra algebra;    // final result
    LieAlgebra lift_layout;  // last algebra before any basis rotation; carries the provenance
    std::optional<Semigroup> semigroup;
    Reduction reduction = Reduction::none;
    int h_n = 0;
    std::optional<Matrix> rotation;  // composite basis change applied after lift_layout
};

/// Steps, in order, from config["steps"]:
///   {"op": "s_expand", "semigroup": ...}
///   {"op": "resonant", "partition": {"J": 0, "P": 1}, "subsets": [[0, 2, 4], [1, 3, 4]]}
///   {"op": "zero_reduce"}
///   {"op": "h_reduce", "n": 2}      on a Z_2n expansion this imposes T_(A,i+n) = -T_(A,i)
///   {"op": "sign_identify", "pairing": [[0, 2], [1, 3]]}
///   {"op": "rename", "rules": [{"base": "J", "tag": 1, "to": "Z"}, ...]}
///   {"op": "rotate_translations"}   P' = (P + Z)/sqrt2, Z' = (P - Z)/sqrt2
///   {"op": "name", "value": "C5"}
PipelineResult run_pipeline(const Json& config, const DataPaths& paths);

/// config["tensor"]: {"source": "epsilon", "alphas": ["alpha0", ...], "scale": "sqrt2"}.
/// The epsilon tensor of the base algebra is lifted through the reduction the pipeline
/// performed and then carried through its rotation.
InvariantTensor build_tensor(const Json& tensor_spec, const PipelineResult& p);

struct ComparisonSpec {
    std::string golden;
    ComparisonOptions options;
};

struct LagrangianResult {
    ScalarForm form;
    InvariantTensor tensor;  // after any "alphas" substitution
    std::vector<std::pair<ComparisonSpec, ComparisonReport>> comparisons;
    std::optional<LovelockDictionary> lovelock;
};

/// config["lagrangian"]:
///   {"dimension": 5, "fields": ["w", "e", "k", "h"], "kappa": "1",
///    "transgression": ["w", "e"],            optional: Q(A, Abar) with Abar built from these fields
///    "compare": [{"golden": "c5_cs", "global_scalar": true, "modulo_exact": true, "zero_fields": ["k", "h"]}],
///    "lovelock": true}
/// `extra_golden` adds one exact comparison unless the config already lists that name.
LagrangianResult run_lagrangian(const Json& config, const PipelineResult& p, const InvariantTensor& t,
                                const DataPaths& paths, const std::optional<std::string>& extra_golden = {});

Json to_json(const LovelockDictionary& d);

}  // namespace liexp
