#pragma once

#include "liexp/forms.hpp"
#include "liexp/invariant_tensor.hpp"
#include "liexp/lie_algebra.hpp"
#include "liexp/semigroup.hpp"
#include "liexp/target.hpp"

#include <json.hpp>

#include <string>

namespace liexp {

/// Ordered keys so that identical inputs serialize byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const ScalarExpr& x);
Json to_json(const Semigroup& s);
Json to_json(const LieAlgebra& l);
Json to_json(const InvariantTensor& t);
Json to_json(const ScalarForm& f);
Json to_json(const ComparisonReport& r);

// The readers throw std::invalid_argument on malformed documents.
ScalarExpr scalar_from_json(const Json& j);
Semigroup semigroup_from_json(const Json& j);
LieAlgebra algebra_from_json(const Json& j);
InvariantTensor tensor_from_json(const Json& j);
ScalarForm form_from_json(const Json& j);

/// Top-level keys one per line, each element of a top-level array on its own line, the
/// rest compact. Always ends with a newline.
std::string format_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Plain-text table, one nonzero bracket [T_a, T_b] (a < b) per line.
std::string commutator_table(const LieAlgebra& l);

// LaTeX output is for reading; JSON is the artifact that tests compare.
std::string algebra_latex(const LieAlgebra& l);
std::string tensor_latex(const LieAlgebra& l, const InvariantTensor& t);
std::string form_latex(const ScalarForm& f);

}  // namespace liexp
