#pragma once

#include "liexp/linalg.hpp"
#include "liexp/number.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liexp {

/// Structured generator label: base symbol, Lorentz/vector indices, expansion tags.
/// J with (0,1) and tags (2) prints as "J01:2".
struct Label {
    std::string base;
    std::vector<int> indices;
    std::vector<int> tags;

    std::string str() const;
    std::string latex() const;
    friend bool operator==(const Label&, const Label&) = default;
};

/// Provenance of a generator of an expanded algebra: base generator A of g and semigroup tag.
struct ExpandedLabel {
    int base = 0;
    int tag = 0;
    friend bool operator==(const ExpandedLabel&, const ExpandedLabel&) = default;
};

struct StructureConstant {
    int a = 0;
    int b = 0;
    int c = 0;
    QSqrt2 value;
    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct StructureTerm {
    int target = 0;
    QSqrt2 value;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Entries with a > b are folded into (b, a) with a sign; repeated entries add up.
    /// Entries with a == b are kept so that check_axioms can report them.
    LieAlgebra(std::string name, std::vector<Label> labels, const std::vector<StructureConstant>& constants,
               std::vector<ExpandedLabel> origin = {});

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<ExpandedLabel>& origin() const { return origin_; }
    bool has_origin() const { return !origin_.empty(); }

    /// All C_{ab}^c for fixed (a, b), the b < a half synthesized by sign.
    const std::vector<StructureTerm>& bracket_of(int a, int b) const {
        return full_[static_cast<std::size_t>(a * dim() + b)];
    }
    QSqrt2 constant(int a, int b, int c) const;
    /// Canonical sorted list with a < b (plus any a == b defects).
    const std::vector<StructureConstant>& constants() const { return canonical_; }

    /// Index of the generator with the given base and indices (tags ignored), or -1.
    int find(std::string_view base, const std::vector<int>& indices) const;

    LieAlgebra renamed(std::string name) const;
    LieAlgebra relabeled(std::vector<Label> labels) const;

    /// Equality of dimension and structure constants, ignoring names and labels.
    bool same_constants(const LieAlgebra& other) const { return dim() == other.dim() && canonical_ == other.canonical_; }
    friend bool operator==(const LieAlgebra& x, const LieAlgebra& y) {
        return x.name_ == y.name_ && x.labels_ == y.labels_ && x.origin_ == y.origin_ && x.canonical_ == y.canonical_;
    }

private:
    std::string name_;
    std::vector<Label> labels_;
    std::vector<ExpandedLabel> origin_;
    std::vector<StructureConstant> canonical_;
    std::vector<std::vector<StructureTerm>> full_;
};

/// Sum C_{AB}^C x^A y^B.
Vector bracket(const LieAlgebra& l, const Vector& x, const Vector& y);

struct AxiomReport {
    bool ok = true;
    std::string message;
    /// (A, B, D, E) of the first Jacobi failure, or (A, A, C, -1) for an antisymmetry defect.
    std::optional<std::array<int, 4>> violation;
};

AxiomReport check_axioms(const LieAlgebra& l);

struct KillingProfile {
    Inertia signature;
    int derived_dim = 0;
    int center_dim = 0;
    friend bool operator==(const KillingProfile&, const KillingProfile&) = default;
};

Matrix killing_form(const LieAlgebra& l);
KillingProfile killing_profile(const LieAlgebra& l);

/// New generators T'_i = sum_j M_ij T_j. Throws std::invalid_argument for singular M.
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& m, std::vector<Label> new_labels = {});

/// Lorentz metric diag(-1, +1, ..., +1).
inline int eta(int a) { return a == 0 ? -1 : 1; }

/// so3, so31, so4, ads3, ads5 (also "ads" with d given separately).
LieAlgebra make_named(const std::string& name, int d = 0);
LieAlgebra make_ads(int d);

/// Lie closure of random triangular rational matrices, retried until the
/// requested dimension is reached. Strict triangles give nilpotent algebras,
/// non-strict ones solvable algebras.
LieAlgebra make_random_algebra(int target_dim, bool nilpotent, std::uint32_t seed);

}  // namespace liexp
