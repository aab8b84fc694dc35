#pragma once

#include "liexp/expansion.hpp"
#include "liexp/forms.hpp"
#include "liexp/invariant_tensor.hpp"

#include <string>
#include <vector>

namespace liexp {

/// Relabels generators by (base symbol, tag) to plain symbols, dropping the tag.
struct TagRename {
    std::string base;
    int tag = 0;
    std::string renamed;
};
LieAlgebra rename_tagged(const LieAlgebra& l, const std::vector<TagRename>& rules);

/// The C_d algebra (Z_4 x AdS_d)_H and its lifted tensor, in both bases.
struct CAlgebra {
    int d = 0;
    LieAlgebra reduced;        // J_ab, Z_ab, P_a, Z_a with Z_ab = J_(ab,1), Z_a = P_(a,1)
    InvariantTensor lifted;    // lift_h(2, eps) on `reduced`, alpha_0..alpha_{r}
    Matrix rotation;           // P' = (P + Z)/sqrt2, Z' = (P - Z)/sqrt2
    LieAlgebra rotated;        // relabeled P', Z' -> P, Z
    InvariantTensor rotated_tensor;  // rotate_tensor(lifted) * sqrt2
};

CAlgebra make_c_algebra(int d);

/// Matrix of the translation rotation on any algebra with generators P_a and Z_a.
Matrix translation_rotation(const LieAlgebra& l);

/// Lovelock coefficients of eps(R R e), eps(R e e e), eps(e e e e e) in a five-dimensional form.
struct LovelockDictionary {
    ScalarExpr beta0;
    ScalarExpr beta1;
    ScalarExpr beta2;
};

/// Reads the three families off Q(A2, A1) and scales them by 2 ell / 3, which puts
/// the eps(R R e) coefficient at (alpha0 + alpha1) / 2.
LovelockDictionary lovelock_dictionary(const ScalarForm& q_a2a1);

}  // namespace liexp
