#pragma once

#include "liexp/forms.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace liexp {

/// One gauge field of a connection: field^{a} (or ^{ab}, a < b) multiplies the
/// generator with base symbol `generator` and the same indices, times `scale`.
struct ConnectionPiece {
    Field field = Field::e;
    std::string generator;
    int index_count = 1;
    ScalarExpr scale = ScalarExpr(1);
};

/// omega = 1/2 w^{ab} J_ab, k = 1/2 k^{ab} Z_ab, e = (1/ell) e^a P_a, h = (1/ell) h^a Z_a,
/// restricted to the requested fields.
std::vector<ConnectionPiece> gravity_connection(const std::set<Field>& fields);

LieValuedForm build_connection(const LieAlgebra& l, int spacetime_dim, const std::vector<ConnectionPiece>& pieces);

/// Q(A, Abar) = (k+1) int_0^1 dt <theta F_t^k>, theta = A - Abar; k = rank(T) - 1.
ScalarForm transgression(const LieValuedForm& a, const LieValuedForm& abar, const InvariantTensor& t, const LieAlgebra& l);

/// kappa * Q(A, 0).
ScalarForm chern_simons(const LieValuedForm& a, const InvariantTensor& t, const LieAlgebra& l,
                        const ScalarExpr& kappa = ScalarExpr(1));

/// sum_i Q(chain[i], chain[i+1]); the exact boundary term is not produced.
ScalarForm subspace_separation(const std::vector<LieValuedForm>& chain, const InvariantTensor& t, const LieAlgebra& l);

struct ExactnessResult {
    bool exact = false;
    /// B with dB equal to the input when exact.
    ScalarForm primitive;
};

/// In the free graded-commutative algebra on the symbols and their differentials,
/// a form without constant part is exact exactly when it is closed; the primitive
/// is built with the homotopy operator and checked.
ExactnessResult exactness(const ScalarForm& f);

}  // namespace liexp
