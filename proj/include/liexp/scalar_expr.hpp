#pragma once

#include "liexp/number.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liexp {

/// Monomial key of the coefficient ring: alpha_i^{0 or 1} * ell^p.
struct ScalarKey {
    int alpha = -1;  // -1 means no alpha symbol
    int ell = 0;
    auto operator<=>(const ScalarKey&) const = default;
};

/// Exact coefficient ring: Q(sqrt2)-linear combinations of alpha_i * ell^p.
///
/// The ring is linear in the alpha symbols. A product of two alpha-carrying
/// terms throws std::logic_error.
class ScalarExpr {
public:
    using Term = std::pair<ScalarKey, QSqrt2>;

    ScalarExpr() = default;
    ScalarExpr(QSqrt2 c);  // NOLINT(google-explicit-constructor)
    ScalarExpr(long c) : ScalarExpr(QSqrt2(c)) {}  // NOLINT(google-explicit-constructor)
    ScalarExpr(Rational c) : ScalarExpr(QSqrt2(std::move(c))) {}  // NOLINT(google-explicit-constructor)

    static ScalarExpr alpha(int index, QSqrt2 c = 1);
    static ScalarExpr ell(int power, QSqrt2 c = 1);
    static ScalarExpr term(ScalarKey key, QSqrt2 c);

    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool alpha_free() const;
    /// True when the expression is a single alpha-free term c * ell^p (and so invertible).
    bool is_unit_monomial() const;
    std::optional<QSqrt2> as_constant() const;
    int max_alpha() const;

    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const QSqrt2& c);
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

    friend ScalarExpr operator+(ScalarExpr x, const ScalarExpr& y) { return x += y; }
    friend ScalarExpr operator-(ScalarExpr x, const ScalarExpr& y) { return x -= y; }
    friend ScalarExpr operator-(const ScalarExpr& x);
    friend ScalarExpr operator*(const ScalarExpr& x, const ScalarExpr& y);
    friend bool operator==(const ScalarExpr& x, const ScalarExpr& y) { return x.terms_ == y.terms_; }

    /// Inverse of a unit monomial. Throws std::domain_error otherwise.
    ScalarExpr inverse() const;

    /// Replace alpha_i by values[i]; values must be alpha-free or the result non-linear.
    ScalarExpr substitute_alphas(std::span<const ScalarExpr> values) const;
    /// Coefficient of alpha_i as an ell-Laurent polynomial (index -1 gives the alpha-free part).
    ScalarExpr alpha_component(int index) const;

    std::string str() const;
    std::string latex() const;
    /// Parses the textual grammar used by golden files and configs, e.g.
    /// "3/4 * ell^-1 * (alpha0 + alpha1)" or "-alpha0". Throws std::invalid_argument.
    static ScalarExpr parse(std::string_view text);

private:
    void add_term(const ScalarKey& key, const QSqrt2& c);
    std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

}  // namespace liexp
