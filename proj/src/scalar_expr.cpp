#include "liexp/scalar_expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liexp {

ScalarExpr::ScalarExpr(QSqrt2 c) {
    if (!c.is_zero()) terms_.emplace_back(ScalarKey{}, std::move(c));
}

ScalarExpr ScalarExpr::alpha(int index, QSqrt2 c) { return term(ScalarKey{index, 0}, std::move(c)); }

ScalarExpr ScalarExpr::ell(int power, QSqrt2 c) { return term(ScalarKey{-1, power}, std::move(c)); }

ScalarExpr ScalarExpr::term(ScalarKey key, QSqrt2 c) {
    ScalarExpr out;
    if (!c.is_zero()) out.terms_.emplace_back(key, std::move(c));
    return out;
}

bool ScalarExpr::alpha_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.alpha < 0; });
}

bool ScalarExpr::is_unit_monomial() const { return terms_.size() == 1 && terms_[0].first.alpha < 0; }

std::optional<QSqrt2> ScalarExpr::as_constant() const {
    if (terms_.empty()) return QSqrt2(0);
    if (terms_.size() == 1 && terms_[0].first == ScalarKey{}) return terms_[0].second;
    return std::nullopt;
}

int ScalarExpr::max_alpha() const {
    int m = -1;
    for (const auto& [k, c] : terms_) m = std::max(m, k.alpha);
    return m;
}

void ScalarExpr::add_term(const ScalarKey& key, const QSqrt2& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const ScalarKey& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.emplace(it, key, c);
    }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    if (terms_.empty()) return *this = o;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ScalarExpr& ScalarExpr::operator*=(const QSqrt2& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

ScalarExpr operator-(const ScalarExpr& x) {
    ScalarExpr out = x;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

ScalarExpr operator*(const ScalarExpr& x, const ScalarExpr& y) {
    ScalarExpr out;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            if (kx.alpha >= 0 && ky.alpha >= 0)
                throw std::logic_error("product of two alpha-linear terms is outside the coefficient ring");
            out.add_term(ScalarKey{std::max(kx.alpha, ky.alpha), kx.ell + ky.ell}, cx * cy);
        }
    }
    return out;
}

ScalarExpr ScalarExpr::inverse() const {
    if (!is_unit_monomial()) throw std::domain_error("only c*ell^p monomials are invertible, got " + str());
    return ell(-terms_[0].first.ell, terms_[0].second.inverse());
}

ScalarExpr ScalarExpr::substitute_alphas(std::span<const ScalarExpr> values) const {
    ScalarExpr out;
    for (const auto& [k, c] : terms_) {
        ScalarExpr piece = ell(k.ell, c);
        if (k.alpha >= 0) {
            if (static_cast<std::size_t>(k.alpha) >= values.size())
                throw std::invalid_argument("no value supplied for alpha" + std::to_string(k.alpha));
            piece = piece * values[static_cast<std::size_t>(k.alpha)];
        }
        out += piece;
    }
    return out;
}

ScalarExpr ScalarExpr::alpha_component(int index) const {
    ScalarExpr out;
    for (const auto& [k, c] : terms_)
        if (k.alpha == index) out.add_term(ScalarKey{-1, k.ell}, c);
    return out;
}

namespace {

std::string key_text(const ScalarKey& k, bool latex) {
    std::string out;
    if (k.alpha >= 0) out += latex ? "\\alpha_{" + std::to_string(k.alpha) + "}" : "alpha" + std::to_string(k.alpha);
    if (k.ell != 0) {
        if (!out.empty()) out += latex ? " " : "*";
        out += latex ? "\\ell^{" + std::to_string(k.ell) + "}" : "ell^" + std::to_string(k.ell);
    }
    return out;
}

std::string coeff_latex(const QSqrt2& c) {
    auto frac = [](const Rational& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
    };
    if (c.is_rational()) return frac(c.rational_part());
    std::string out = "(";
    if (sgn(c.rational_part()) != 0) out += frac(c.rational_part()) + "+";
    return out + frac(c.sqrt2_part()) + "\\sqrt{2})";
}

}  // namespace

std::string ScalarExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string cs = c.str();
        const bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        if (negative) cs = (-c).str();
        if (!c.is_rational()) cs = "(" + cs + ")";
        const std::string kt = key_text(k, false);
        if (kt.empty()) out += cs;
        else if (cs == "1") out += kt;
        else out += cs + "*" + kt;
        first = false;
    }
    return out;
}

std::string ScalarExpr::latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
        const QSqrt2 mag = negative ? -c : c;
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const std::string kt = key_text(k, true);
        const std::string cs = coeff_latex(mag);
        if (kt.empty()) out += cs;
        else if (cs == "1") out += kt;
        else out += cs + " " + kt;
        first = false;
    }
    return out;
}

namespace {

// Recursive-descent parser for: expr := term (('+'|'-') term)*
//                               term := unary (('*'|'/') unary)*
//                               unary := '-' unary | atom ('^' int)?
//                               atom := number | alphaN | ell | sqrt2 | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    ScalarExpr run() {
        ScalarExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    ScalarExpr expr() {
        ScalarExpr acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    ScalarExpr term() {
        ScalarExpr acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                const ScalarExpr d = unary();
                if (!d.is_unit_monomial()) fail("division by a non-monomial");
                acc = acc * d.inverse();
            } else {
                return acc;
            }
        }
    }
    ScalarExpr unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        ScalarExpr base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            const int p = std::stoi(std::string(s_.substr(start, pos_ - start)));
            if (!base.is_unit_monomial()) fail("only monomials can be raised to a power");
            ScalarExpr b = p < 0 ? base.inverse() : base;
            ScalarExpr out(1);
            for (int i = 0; i < std::abs(p); ++i) out = out * b;
            return out;
        }
        return base;
    }
    ScalarExpr atom() {
        skip();
        if (eat('(')) {
            ScalarExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ScalarExpr(parse_rational(s_.substr(start, pos_ - start)));
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string word(s_.substr(start, pos_ - start));
        if (word == "ell" || word == "l") return ScalarExpr::ell(1);
        if (word == "sqrt2") return ScalarExpr(QSqrt2::sqrt2());
        if (word.rfind("alpha", 0) == 0 && word.size() > 5 &&
            std::all_of(word.begin() + 5, word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return ScalarExpr::alpha(std::stoi(word.substr(5)));
        pos_ = start;
        fail(word.empty() ? "expected operand" : "unknown symbol '" + word + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr ScalarExpr::parse(std::string_view text) { return ExprParser(text).run(); }

}  // namespace liexp
