#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liexp {

/// Finite abelian semigroup given by its Cayley table over dense element indices.
///
/// The constructor checks shape and closure only, so that malformed tables can be
/// built and then diagnosed with check_axioms().
class Semigroup {
public:
    Semigroup(std::string name, std::vector<std::vector<int>> table, std::optional<int> zero = std::nullopt);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    std::optional<int> zero() const { return zero_; }
    int product(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
    /// Product of a chain of elements, left to right.
    int product(std::span<const int> elements) const;
    std::vector<std::vector<int>> table() const;

    struct AxiomReport {
        bool ok = true;
        std::string message;
    };
    /// Exhaustive associativity, commutativity and zero-element check.
    AxiomReport check_axioms() const;

    friend bool operator==(const Semigroup& x, const Semigroup& y) {
        return x.order_ == y.order_ && x.table_ == y.table_ && x.zero_ == y.zero_;
    }

private:
    std::string name_;
    int order_;
    std::vector<int> table_;
    std::optional<int> zero_;
};

Semigroup make_cyclic(int n);
Semigroup make_klein();
Semigroup make_se(int n);
/// Element (a, a') of s1 x s2 is mapped to a * |s2| + a'.
Semigroup direct_product(const Semigroup& s1, const Semigroup& s2);
/// Resolves "Z4", "Z2", "D4"/"klein", "SE3" style names.
Semigroup make_named_semigroup(const std::string& name);

struct SelectorQuery {
    std::vector<int> lower;
    int upper = 0;
};

/// K_{lower}^{upper}: 1 when the chain product of the lower indices is the upper index.
int selector(const Semigroup& s, const SelectorQuery& q);
inline int selector(const Semigroup& s, int a, int b, int c) { return s.product(a, b) == c ? 1 : 0; }

struct IdentityReport {
    bool ok = true;
    std::string failure;  // which identity and the first counterexample
};

/// Exhaustively checks the four index-shift identities of the selectors of Z_{2n}.
IdentityReport check_even_cyclic_identities(int n);

/// Relabeling p with p(s1(a,b)) = s2(p(a),p(b)), or nullopt. Orders above 8 throw.
std::optional<std::vector<int>> find_isomorphism(const Semigroup& s1, const Semigroup& s2);

}  // namespace liexp
