#pragma once

#include "liexp/invariant_tensor.hpp"
#include "liexp/lie_algebra.hpp"
#include "liexp/scalar_expr.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace liexp {

/// Component 1-form fields. `mc` is a generic Maurer-Cartan form indexed by generator.
enum class Field : std::uint8_t { omega, e, k, h, mc };

std::string field_name(Field f);

/// e^i, h^i, omega^{ij}, k^{ij} (i < j), mc^i, or the exterior derivative of one of them.
struct FormSymbol {
    Field field = Field::e;
    std::uint16_t i = 0;
    std::uint16_t j = 0;
    bool differentiated = false;

    int degree() const { return differentiated ? 2 : 1; }
    bool odd() const { return !differentiated; }
    std::string str() const;
    std::string latex() const;

    friend bool operator==(const FormSymbol&, const FormSymbol&) = default;
    /// Canonical order: 2-forms first, then by field and indices.
    friend bool operator<(const FormSymbol& x, const FormSymbol& y) {
        return std::tuple(!x.differentiated, x.field, x.i, x.j) < std::tuple(!y.differentiated, y.field, y.i, y.j);
    }
};

using Monomial = std::vector<FormSymbol>;  // canonically sorted

int degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

/// Product of two canonical monomials: (sign, canonical product), sign 0 when it vanishes.
std::pair<int, Monomial> wedge_monomials(const Monomial& x, const Monomial& y);

/// Element of the free graded-commutative algebra on the form symbols, with
/// ScalarExpr coefficients.
class ScalarForm {
public:
    ScalarForm() = default;
    static ScalarForm constant(const ScalarExpr& c);
    static ScalarForm symbol(const FormSymbol& s, const ScalarExpr& c = ScalarExpr(1));
    /// omega^{ab} or k^{ab} for any ordered pair: sign flip for a > b, zero for a == b.
    static ScalarForm pair_symbol(Field f, int a, int b, bool differentiated = false);
    /// Sorts (with Koszul sign) an arbitrary symbol sequence.
    static ScalarForm monomial(const std::vector<FormSymbol>& symbols, const ScalarExpr& c = ScalarExpr(1));

    const std::map<Monomial, ScalarExpr>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    ScalarExpr coefficient(const Monomial& m) const;

    void add(const Monomial& m, const ScalarExpr& c);
    ScalarForm& operator+=(const ScalarForm& o);
    ScalarForm& operator-=(const ScalarForm& o);
    friend ScalarForm operator+(ScalarForm x, const ScalarForm& y) { return x += y; }
    friend ScalarForm operator-(ScalarForm x, const ScalarForm& y) { return x -= y; }
    friend ScalarForm operator-(const ScalarForm& x);
    friend ScalarForm operator*(const ScalarExpr& c, const ScalarForm& f);
    friend bool operator==(const ScalarForm&, const ScalarForm&) = default;

    /// Drops every monomial containing a symbol (or its derivative) of the given fields.
    ScalarForm without_fields(const std::set<Field>& fields) const;
    ScalarForm substitute_alphas(std::span<const ScalarExpr> values) const;
    /// Homogeneous part with the given number of symbols.
    ScalarForm weight_part(int weight) const;

    std::string str() const;

private:
    std::map<Monomial, ScalarExpr> terms_;
};

ScalarForm wedge(const ScalarForm& x, const ScalarForm& y);
ScalarForm exterior_d(const ScalarForm& f);
/// Odd derivation with h(x) = 0 and h(dx) = x; dh + hd multiplies a monomial by its length.
ScalarForm homotopy(const ScalarForm& f);

/// Lie-algebra valued form of homogeneous degree: one ScalarForm per generator.
class LieValuedForm {
public:
    LieValuedForm() = default;
    LieValuedForm(int dim, int degree);

    int dim() const { return static_cast<int>(components_.size()); }
    int degree() const { return degree_; }
    const ScalarForm& operator[](int a) const { return components_[static_cast<std::size_t>(a)]; }
    /// Adds to component a; the form must have the declared degree.
    void add(int a, const ScalarForm& f);
    bool is_zero() const;

    LieValuedForm& operator+=(const LieValuedForm& o);
    LieValuedForm& operator-=(const LieValuedForm& o);
    friend LieValuedForm operator+(LieValuedForm x, const LieValuedForm& y) { return x += y; }
    friend LieValuedForm operator-(LieValuedForm x, const LieValuedForm& y) { return x -= y; }
    friend LieValuedForm operator*(const ScalarExpr& c, const LieValuedForm& f);
    friend bool operator==(const LieValuedForm&, const LieValuedForm&) = default;

private:
    std::vector<ScalarForm> components_;
    int degree_ = 0;
};

LieValuedForm wedge(const LieValuedForm& f, const ScalarForm& g);
LieValuedForm exterior_d(const LieValuedForm& f);
/// [f, g]^C = sum C_AB^C f^A ^ g^B.
LieValuedForm lie_bracket_form(const LieValuedForm& f, const LieValuedForm& g, const LieAlgebra& l);
/// F = dA + 1/2 [A, A].
LieValuedForm curvature(const LieValuedForm& a, const LieAlgebra& l);

/// sum T(A1..Ar) f1^A1 ^ ... ^ fr^Ar.
ScalarForm contract(const InvariantTensor& t, std::span<const LieValuedForm> forms);

}  // namespace liexp
