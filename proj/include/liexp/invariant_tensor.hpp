#pragma once

#include "liexp/lie_algebra.hpp"
#include "liexp/scalar_expr.hpp"
#include "liexp/semigroup.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liexp {

/// Symmetric multilinear form on a Lie algebra, stored by ascending generator tuples.
class InvariantTensor {
public:
    InvariantTensor() = default;
    InvariantTensor(int rank, int dim);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    /// Adds to the entry of the (unordered) tuple.
    void add(std::vector<int> indices, const ScalarExpr& value);
    ScalarExpr at(std::vector<int> indices) const;
    const std::map<std::vector<int>, ScalarExpr>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    InvariantTensor scaled(const ScalarExpr& factor) const;
    InvariantTensor substitute_alphas(std::span<const ScalarExpr> values) const;

    friend bool operator==(const InvariantTensor&, const InvariantTensor&) = default;

private:
    int rank_ = 0;
    int dim_ = 0;
    std::map<std::vector<int>, ScalarExpr> entries_;
};

/// alpha_0 .. alpha_{count-1} as formal symbols.
std::vector<ScalarExpr> alpha_symbols(int count);

/// Sign of the permutation `p` of 0..n-1 given as a sequence, 0 if an entry repeats.
int permutation_sign(std::span<const int> p);

/// <J_ab J_cd P_e> = eps_abcde for ads(5), <J_ab P_c> = eps_abc for ads(3),
/// with eps_{01...} = +1 and the 1/8, 1/4 normalizations absorbed.
InvariantTensor epsilon_tensor(const LieAlgebra& ads);

/// <T_(A1,i1) ... T_(Ar,ir)> = alpha_j K_{i1...ir}^j <T_A1 ... T_Ar> over nonzero j, laid out
/// on the generators of `target` (its provenance names (A, i) for every generator).
InvariantTensor lift_0s(const Semigroup& s, const InvariantTensor& t, const LieAlgebra& target,
                        std::span<const ScalarExpr> alphas);

/// Same formula on (Z_2n x g)_H with gamma running over all 2n elements; laid out on h_reduce(n, g).
InvariantTensor lift_h(int n, const InvariantTensor& t, std::span<const ScalarExpr> alphas);

struct InvarianceReport {
    bool ok = true;
    std::string message;
    std::vector<int> tuple;  // A0, A1, ..., Ar of the first failure
};

/// Checks sum_p C_{A0 Ap}^B <A1 .. B .. Ar> = 0 for every tuple, each alpha component separately.
InvarianceReport verify_invariance(const LieAlgebra& l, const InvariantTensor& t);

/// Components in the basis T'_i = sum_j M_ij T_j.
InvariantTensor rotate_tensor(const InvariantTensor& t, const Matrix& m);

/// One line of a tensor table such as <J_ab, Z_cd, P_e> = (alpha1 + alpha2) eps_abcde.
/// Slots are ordered two-index kinds first, then by first appearance in the algebra.
struct TensorRow {
    std::vector<std::string> slots;             // "J_2", "Z_1", ...: base and index count
    std::optional<ScalarExpr> eps_coefficient;  // set when every entry is c * eps(indices in slot order)
    std::size_t entries = 0;

    std::string str() const;
};

/// Groups the entries by slot kinds; kinds whose entries all vanish do not appear.
std::vector<TensorRow> tensor_table(const LieAlgebra& l, const InvariantTensor& t);

}  // namespace liexp
