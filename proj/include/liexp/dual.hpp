#pragma once

#include "liexp/lie_algebra.hpp"

#include <string>

namespace liexp {

struct DualReport {
    LieAlgebra dual;            // constants read off the reduced Maurer-Cartan system
    bool doubled = false;       // dual constants == 2 * constants of h_reduce(n, g)
    bool witness_ok = false;    // T' = 2T carries h_reduce(n, g) onto the dual algebra
    std::string summary() const;
};

/// Substitutes w^(A,i+n) = -w^(A,i) into dw^(C,k) + 1/2 K C w w = 0 on Z_2n x g and
/// collects the structure constants of the resulting system for k = 0..n-1.
DualReport dual_mc_check(int n, const LieAlgebra& g);

}  // namespace liexp
