#pragma once

#include "liexp/forms.hpp"
#include "liexp/transgression.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liexp {

/// Grammar errors in a target expression, with 1-based line and column.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// One factor of a term: eps(a,b,..), e(a), h(a), w(a,b), k(a,b), de/dh/dw/dk, R(a,b), T(a), Dk(a,b), Dh(a).
struct TargetFactor {
    std::string name;
    std::vector<std::string> indices;
};

struct TargetTerm {
    ScalarExpr coefficient;
    std::vector<TargetFactor> factors;
    std::string text;  // factor part as written
    int line = 0;
};

/// A Lagrangian written in the curvature basis, one term per line:
///
///     @name c3_cs
///     @dim 3
///     alpha0 + alpha1 | eps(a,b,c) R(a,b) e(c)
///
/// Indices shared with eps are contracted directly; an index repeated between two
/// field factors is contracted with eta = diag(-1, +1, ..).
struct TargetExpression {
    std::string name;
    int dimension = 0;
    std::vector<TargetTerm> terms;
};

TargetExpression parse_target(std::string_view text);
TargetExpression load_target(const std::string& path);

/// Concrete-index expansion of a single term (with its coefficient).
ScalarForm expand_term(const TargetTerm& term, int dimension);
ScalarForm expand_target(const TargetExpression& target);

/// Ratio y / x as a single c * ell^p, when one exists.
std::optional<ScalarExpr> monomial_ratio(const ScalarExpr& y, const ScalarExpr& x);

struct ComparisonOptions {
    bool global_scalar = false;  // allow computed * s = target for one c * ell^p
    bool modulo_exact = false;   // accept a d-exact residual
    std::set<Field> zero_fields;  // sector restriction applied to both sides
};

struct TermReport {
    std::size_t index = 0;
    int line = 0;
    std::string text;
    ScalarExpr printed;
    std::optional<ScalarExpr> computed;  // read off a monomial unique to this term
    bool agrees = false;
};

struct ComparisonReport {
    bool match = false;
    std::optional<ScalarExpr> scalar;
    std::string note;
    std::size_t residual_monomials = 0;  // of d(residual) when comparing modulo exact forms
    std::size_t unexplained_monomials = 0;  // residual outside the support of every term
    std::vector<std::string> unexplained_families;
    std::vector<TermReport> terms;
    ScalarForm residual;

    std::string render() const;
};

ComparisonReport compare_to_target(const ScalarForm& computed, const TargetExpression& target,
                                   const ComparisonOptions& options = {});

}  // namespace liexp
