#pragma once

#include "liexp/lie_algebra.hpp"
#include "liexp/semigroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace liexp {

/// Generators (A, alpha) ordered tag-major: index = alpha * dim(g) + A.
LieAlgebra s_expand(const Semigroup& s, const LieAlgebra& g);

/// Drops every generator whose tag is the zero element of s.
LieAlgebra zero_reduce(const LieAlgebra& expanded, const Semigroup& s);

struct ResonanceSpec {
    std::vector<int> partition;         // part index p of each generator of g
    std::vector<std::vector<int>> subsets;  // S_p for each part
};

struct ResonanceViolation {
    int p = 0;
    int q = 0;
    int element = 0;  // a product lambda in S_p . S_q outside the allowed union
};

/// i(p, q): parts hit by [V_p, V_q], read from the structure constants of g.
std::vector<std::vector<std::vector<int>>> subspace_products(const LieAlgebra& g, const ResonanceSpec& spec);
std::optional<ResonanceViolation> find_resonance_violation(const LieAlgebra& g, const Semigroup& s,
                                                           const ResonanceSpec& spec);
/// Keeps (A, alpha) with alpha in S_p(A). Throws std::invalid_argument naming the
/// failing (p, q, element) when the spec is not resonant.
LieAlgebra resonant_subalgebra(const LieAlgebra& expanded, const LieAlgebra& g, const Semigroup& s,
                               const ResonanceSpec& spec);

/// (Z_2n x g)_H with tags 0..n-1 and constants (K_ij^k - K_ij^{k+n}) C_AB^C.
LieAlgebra h_reduce(int n, const LieAlgebra& g);

struct GreaterInterval {
    LieAlgebra algebra;  // generators (A, i+n)
    bool witness_ok = false;  // T' = -T maps it onto h_reduce(n, g)
};
GreaterInterval greater_interval_algebra(int n, const LieAlgebra& g);

/// Quotient by T_(A,pi(alpha)) = -T_(A,alpha). The smaller tag of every pair is the representative.
/// Throws std::invalid_argument for a pairing that is not a fixed-point-free involution or
/// that does not induce a well defined signed product (the message names the product).
LieAlgebra impose_sign_identification(const LieAlgebra& expanded, const Semigroup& s, const std::map<int, int>& pairing);

/// Pairing i <-> i+n on Z_2n.
std::map<int, int> h_pairing(int n);

}  // namespace liexp
