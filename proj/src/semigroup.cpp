#include "liexp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liexp {

Semigroup::Semigroup(std::string name, std::vector<std::vector<int>> table, std::optional<int> zero)
    : name_(std::move(name)), order_(static_cast<int>(table.size())), zero_(zero) {
    if (order_ == 0) throw std::invalid_argument("semigroup must have at least one element");
    table_.reserve(static_cast<std::size_t>(order_ * order_));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != order_) throw std::invalid_argument("semigroup table is not square");
        for (int v : row) {
            if (v < 0 || v >= order_) throw std::invalid_argument("semigroup table entry out of range (closure)");
            table_.push_back(v);
        }
    }
    if (zero_ && (*zero_ < 0 || *zero_ >= order_)) throw std::invalid_argument("zero index out of range");
}

int Semigroup::product(std::span<const int> elements) const {
    if (elements.empty()) throw std::invalid_argument("empty product");
    int acc = elements[0];
    for (std::size_t i = 1; i < elements.size(); ++i) acc = product(acc, elements[i]);
    return acc;
}

std::vector<std::vector<int>> Semigroup::table() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b) out[static_cast<std::size_t>(a)].push_back(product(a, b));
    return out;
}

Semigroup::AxiomReport Semigroup::check_axioms() const {
    const auto at = [](int a, int b, int c) {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    };
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (product(a, b) != product(b, a))
                return {false, "commutativity fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (product(product(a, b), c) != product(a, product(b, c)))
                    return {false, "associativity fails at " + at(a, b, c)};
    if (zero_) {
        for (int a = 0; a < order_; ++a)
            if (product(*zero_, a) != *zero_)
                return {false, "element " + std::to_string(*zero_) + " does not absorb " + std::to_string(a)};
    }
    return {};
}

Semigroup make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return Semigroup("Z" + std::to_string(n), std::move(t));
}

Semigroup make_klein() {
    return Semigroup("D4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

Semigroup make_se(int n) {
    if (n < 0) throw std::invalid_argument("S_E order parameter must be non-negative");
    const int size = n + 2;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a + b, n + 1);
    return Semigroup("SE" + std::to_string(n), std::move(t), n + 1);
}

Semigroup direct_product(const Semigroup& s1, const Semigroup& s2) {
    const int n1 = s1.order();
    const int n2 = s2.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n1 * n2), std::vector<int>(static_cast<std::size_t>(n1 * n2)));
    for (int a = 0; a < n1; ++a)
        for (int ap = 0; ap < n2; ++ap)
            for (int b = 0; b < n1; ++b)
                for (int bp = 0; bp < n2; ++bp)
                    t[static_cast<std::size_t>(a * n2 + ap)][static_cast<std::size_t>(b * n2 + bp)] =
                        s1.product(a, b) * n2 + s2.product(ap, bp);
    std::optional<int> zero;
    if (s1.zero() && s2.zero()) zero = *s1.zero() * n2 + *s2.zero();
    return Semigroup(s1.name() + "x" + s2.name(), std::move(t), zero);
}

Semigroup make_named_semigroup(const std::string& name) {
    if (name == "D4" || name == "klein") return make_klein();
    auto number = [&](std::size_t skip) {
        const std::string digits = name.substr(skip);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("unknown semigroup '" + name + "'");
        return std::stoi(digits);
    };
    if (name.rfind("SE", 0) == 0) return make_se(number(2));
    if (name.rfind("Z", 0) == 0) return make_cyclic(number(1));
    throw std::invalid_argument("unknown semigroup '" + name + "'");
}

int selector(const Semigroup& s, const SelectorQuery& q) {
    if (q.lower.size() < 2) throw std::invalid_argument("a selector needs at least two lower indices");
    for (int i : q.lower)
        if (i < 0 || i >= s.order()) throw std::invalid_argument("selector index out of range");
    if (q.upper < 0 || q.upper >= s.order()) throw std::invalid_argument("selector index out of range");
    return s.product(q.lower) == q.upper ? 1 : 0;
}

IdentityReport check_even_cyclic_identities(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const Semigroup z = make_cyclic(2 * n);
    const int m2 = 2 * n;
    auto K = [&](int a, int b, int c) { return selector(z, a % m2, b % m2, c % m2); };
    auto fail = [](const std::string& id, int a, int b, int c) {
        return IdentityReport{false, id + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")"};
    };
    // Identities 1 and 2 are stated for the minor interval k, l, m < n;
    // identities 3 and 4 hold for every tag in Z_2n.
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) {
                if (K(k + n, l, m) != K(k, l, m + n)) return fail("K_{k+n,l}^m = K_{kl}^{m+n}", k, l, m);
                if (K(k + n, l, m + n) != K(k, l, m)) return fail("K_{k+n,l}^{m+n} = K_{kl}^m", k, l, m);
            }
    for (int i = 0; i < m2; ++i)
        for (int j = 0; j < m2; ++j)
            for (int g = 0; g < m2; ++g) {
                if (K(i + n, j + n, g) != K(i, j, g)) return fail("K_{i+n,j+n}^g = K_{ij}^g", i, j, g);
                if (K(i, j + n, g) != K(i + n, j, g)) return fail("K_{i,j+n}^k = K_{i+n,j}^k", i, j, g);
            }
    return {};
}

std::optional<std::vector<int>> find_isomorphism(const Semigroup& s1, const Semigroup& s2) {
    if (s1.order() > 8 || s2.order() > 8) throw std::invalid_argument("find_isomorphism is limited to order <= 8");
    if (s1.order() != s2.order()) return std::nullopt;
    const int n = s1.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                ok = p[static_cast<std::size_t>(s1.product(a, b))] ==
                     s2.product(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
        if (ok) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

}  // namespace liexp
