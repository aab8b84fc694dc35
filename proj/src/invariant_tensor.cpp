#include "liexp/invariant_tensor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace liexp {

InvariantTensor::InvariantTensor(int rank, int dim) : rank_(rank), dim_(dim) {
    if (rank < 1) throw std::invalid_argument("tensor rank must be positive");
}

void InvariantTensor::add(std::vector<int> indices, const ScalarExpr& value) {
    if (static_cast<int>(indices.size()) != rank_) throw std::invalid_argument("tensor index tuple has the wrong length");
    for (int i : indices)
        if (i < 0 || i >= dim_) throw std::invalid_argument("tensor index out of range");
    if (value.is_zero()) return;
    std::sort(indices.begin(), indices.end());
    auto it = entries_.find(indices);
    if (it == entries_.end()) {
        entries_.emplace(std::move(indices), value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
}

ScalarExpr InvariantTensor::at(std::vector<int> indices) const {
    std::sort(indices.begin(), indices.end());
    const auto it = entries_.find(indices);
    return it == entries_.end() ? ScalarExpr() : it->second;
}

InvariantTensor InvariantTensor::scaled(const ScalarExpr& factor) const {
    InvariantTensor out(rank_, dim_);
    for (const auto& [k, v] : entries_) out.add(k, v * factor);
    return out;
}

InvariantTensor InvariantTensor::substitute_alphas(std::span<const ScalarExpr> values) const {
    InvariantTensor out(rank_, dim_);
    for (const auto& [k, v] : entries_) out.add(k, v.substitute_alphas(values));
    return out;
}

std::vector<ScalarExpr> alpha_symbols(int count) {
    std::vector<ScalarExpr> out;
    for (int i = 0; i < count; ++i) out.push_back(ScalarExpr::alpha(i));
    return out;
}

int permutation_sign(std::span<const int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    return sign;
}

InvariantTensor epsilon_tensor(const LieAlgebra& ads) {
    int d = 0;
    for (const auto& l : ads.labels())
        if (l.base == "P") ++d;
    if (d != 3 && d != 5) throw std::invalid_argument("epsilon_tensor expects ads(3) or ads(5)");
    InvariantTensor t(d == 5 ? 3 : 2, ads.dim());
    std::vector<std::pair<int, std::vector<int>>> js;  // generator, (a, b)
    for (int i = 0; i < ads.dim(); ++i)
        if (ads.label(i).base == "J") js.push_back({i, ads.label(i).indices});
    for (int e = 0; e < d; ++e) {
        const int pe = ads.find("P", {e});
        if (d == 3) {
            for (const auto& [j, ab] : js) {
                const int p[] = {ab[0], ab[1], e};
                if (int s = permutation_sign(p)) t.add({j, pe}, ScalarExpr(s));
            }
            continue;
        }
        for (std::size_t x = 0; x < js.size(); ++x)
            for (std::size_t y = x + 1; y < js.size(); ++y) {
                const int p[] = {js[x].second[0], js[x].second[1], js[y].second[0], js[y].second[1], e};
                if (int s = permutation_sign(p)) t.add({js[x].first, js[y].first, pe}, ScalarExpr(s));
            }
    }
    return t;
}

namespace {

// Enumerates every ordered rearrangement of every stored entry: f(ordered tuple, value).
void for_each_ordered(const InvariantTensor& t, const std::function<void(const std::vector<int>&, const ScalarExpr&)>& f) {
    for (const auto& [key, value] : t.entries()) {
        std::vector<int> p = key;  // ascending, so next_permutation visits each distinct order once
        do f(p, value);
        while (std::next_permutation(p.begin(), p.end()));
    }
}

InvariantTensor lift(const Semigroup& s, const InvariantTensor& t, const std::vector<ExpandedLabel>& origin,
                     int target_dim, std::span<const ScalarExpr> alphas, bool skip_zero) {
    std::map<std::pair<int, int>, int> index_of;
    std::vector<std::vector<int>> tags_of_base(static_cast<std::size_t>(t.dim()));
    for (int i = 0; i < static_cast<int>(origin.size()); ++i) {
        index_of[{origin[static_cast<std::size_t>(i)].base, origin[static_cast<std::size_t>(i)].tag}] = i;
        tags_of_base[static_cast<std::size_t>(origin[static_cast<std::size_t>(i)].base)].push_back(origin[static_cast<std::size_t>(i)].tag);
    }
    InvariantTensor out(t.rank(), target_dim);
    const int r = t.rank();
    std::vector<int> tags(static_cast<std::size_t>(r));
    std::vector<int> target(static_cast<std::size_t>(r));
    for_each_ordered(t, [&](const std::vector<int>& bases, const ScalarExpr& value) {
        std::function<void(int)> rec = [&](int slot) {
            if (slot == r) {
                for (int k = 0; k + 1 < r; ++k)
                    if (target[static_cast<std::size_t>(k)] > target[static_cast<std::size_t>(k + 1)]) return;
                const int gamma = s.product(tags);
                if (skip_zero && s.zero() && gamma == *s.zero()) return;
                if (static_cast<std::size_t>(gamma) >= alphas.size())
                    throw std::invalid_argument("no alpha supplied for semigroup element " + std::to_string(gamma));
                out.add(target, alphas[static_cast<std::size_t>(gamma)] * value);
                return;
            }
            const int base = bases[static_cast<std::size_t>(slot)];
            for (int tag : tags_of_base[static_cast<std::size_t>(base)]) {
                tags[static_cast<std::size_t>(slot)] = tag;
                target[static_cast<std::size_t>(slot)] = index_of.at({base, tag});
                rec(slot + 1);
            }
        };
        rec(0);
    });
    return out;
}

}  // namespace

InvariantTensor lift_0s(const Semigroup& s, const InvariantTensor& t, const LieAlgebra& target,
                        std::span<const ScalarExpr> alphas) {
    if (!s.zero()) throw std::invalid_argument("lift_0s needs a semigroup with a zero element");
    if (!target.has_origin()) throw std::invalid_argument("lift_0s target algebra carries no expansion tags");
    for (const auto& o : target.origin())
        if (o.tag == *s.zero()) throw std::invalid_argument("lift_0s target still contains zero-tagged generators");
    return lift(s, t, target.origin(), target.dim(), alphas, true);
}

InvariantTensor lift_h(int n, const InvariantTensor& t, std::span<const ScalarExpr> alphas) {
    if (n < 1) throw std::invalid_argument("lift_h needs n >= 1");
    std::vector<ExpandedLabel> origin;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < t.dim(); ++a) origin.push_back({a, i});
    return lift(make_cyclic(2 * n), t, origin, n * t.dim(), alphas, false);
}

InvarianceReport verify_invariance(const LieAlgebra& l, const InvariantTensor& t) {
    if (l.dim() != t.dim()) throw std::invalid_argument("tensor and algebra dimensions differ");
    const int n = l.dim();
    const int r = t.rank();
    std::vector<int> tuple(static_cast<std::size_t>(r), 0);
    for (;;) {
        for (int a0 = 0; a0 < n; ++a0) {
            ScalarExpr sum;
            for (int p = 0; p < r; ++p) {
                std::vector<int> moved = tuple;
                for (const auto& term : l.bracket_of(a0, tuple[static_cast<std::size_t>(p)])) {
                    moved[static_cast<std::size_t>(p)] = term.target;
                    const ScalarExpr v = t.at(moved);
                    if (!v.is_zero()) sum += v * ScalarExpr(term.value);
                }
            }
            if (!sum.is_zero()) {
                InvarianceReport rep{false, "", {a0}};
                rep.tuple.insert(rep.tuple.end(), tuple.begin(), tuple.end());
                std::string names = l.label(a0).str() + ";";
                for (int x : tuple) names += " " + l.label(x).str();
                rep.message = "invariance fails at (" + names + "): residual " + sum.str();
                return rep;
            }
        }
        // next ascending tuple
        int k = r - 1;
        while (k >= 0 && tuple[static_cast<std::size_t>(k)] == n - 1) --k;
        if (k < 0) break;
        ++tuple[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < r; ++j) tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(k)];
    }
    return {};
}

InvariantTensor rotate_tensor(const InvariantTensor& t, const Matrix& m) {
    const int n = t.dim();
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("rotate_tensor: matrix size does not match");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("rotate_tensor: matrix is not square");
    // column sparsity: new generators i with M_ia != 0
    std::vector<std::vector<std::pair<int, QSqrt2>>> users(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].is_zero())
                users[static_cast<std::size_t>(a)].push_back({i, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]});
    InvariantTensor out(t.rank(), n);
    const int r = t.rank();
    std::vector<int> target(static_cast<std::size_t>(r));
    for_each_ordered(t, [&](const std::vector<int>& src, const ScalarExpr& value) {
        std::function<void(int, QSqrt2)> rec = [&](int slot, QSqrt2 weight) {
            if (slot == r) {
                out.add(target, value * ScalarExpr(weight));
                return;
            }
            for (const auto& [i, w] : users[static_cast<std::size_t>(src[static_cast<std::size_t>(slot)])]) {
                if (slot > 0 && i < target[static_cast<std::size_t>(slot - 1)]) continue;
                target[static_cast<std::size_t>(slot)] = i;
                rec(slot + 1, weight * w);
            }
        };
        rec(0, QSqrt2(1));
    });
    return out;
}

std::string TensorRow::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? ", " : "") + slots[i];
    out += "> = ";
    if (eps_coefficient) out += "(" + eps_coefficient->str() + ") eps";
    else out += std::to_string(entries) + " entries, not proportional to eps";
    return out;
}

std::vector<TensorRow> tensor_table(const LieAlgebra& l, const InvariantTensor& t) {
    if (t.dim() != l.dim()) throw std::invalid_argument("tensor_table: tensor and algebra dimensions differ");
    // kind of each generator, and the display rank of each kind
    std::vector<std::string> kind(static_cast<std::size_t>(l.dim()));
    std::map<std::string, int> kind_rank;
    std::map<std::string, std::vector<int>> members;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < l.dim(); ++i) {
            const Label& lab = l.label(i);
            const bool pair = lab.indices.size() >= 2;
            if (pass == 0) kind[static_cast<std::size_t>(i)] = lab.base + "_" + std::to_string(lab.indices.size());
            if (pair != (pass == 0)) continue;
            const std::string& k = kind[static_cast<std::size_t>(i)];
            if (!kind_rank.count(k)) kind_rank[k] = static_cast<int>(kind_rank.size());
            members[k].push_back(i);
        }

    auto display_order = [&](std::vector<int> tuple) {
        std::stable_sort(tuple.begin(), tuple.end(), [&](int x, int y) {
            return kind_rank.at(kind[static_cast<std::size_t>(x)]) < kind_rank.at(kind[static_cast<std::size_t>(y)]);
        });
        return tuple;
    };
    auto eps_sign = [&](const std::vector<int>& ordered) {
        std::vector<int> idx;
        for (int g : ordered)
            for (int a : l.label(g).indices) idx.push_back(a);
        for (int a : idx)
            if (a < 0 || a >= static_cast<int>(idx.size())) return 0;
        return permutation_sign(idx);
    };

    struct Group {
        std::vector<std::vector<int>> tuples;
        std::vector<ScalarExpr> values;
    };
    std::map<std::vector<int>, Group> groups;  // keyed by kind ranks in display order
    for (const auto& [tuple, value] : t.entries()) {
        const auto ordered = display_order(tuple);
        std::vector<int> key;
        for (int g : ordered) key.push_back(kind_rank.at(kind[static_cast<std::size_t>(g)]));
        groups[key].tuples.push_back(ordered);
        groups[key].values.push_back(value);
    }

    std::vector<std::string> kind_of_rank(kind_rank.size());
    for (const auto& [k, r] : kind_rank) kind_of_rank[static_cast<std::size_t>(r)] = k;

    std::vector<TensorRow> rows;
    for (const auto& [key, group] : groups) {
        TensorRow row;
        for (int r : key) row.slots.push_back(kind_of_rank[static_cast<std::size_t>(r)]);
        row.entries = group.tuples.size();

        std::optional<ScalarExpr> c;
        bool proportional = true;
        for (std::size_t i = 0; i < group.tuples.size() && proportional; ++i) {
            const int sign = eps_sign(group.tuples[i]);
            if (sign == 0) {
                proportional = false;
                break;
            }
            const ScalarExpr ci = ScalarExpr(sign) * group.values[i];
            if (!c) c = ci;
            else proportional = *c == ci;
        }
        // every eps-nonzero tuple of these kinds must be present
        if (proportional && c) {
            std::size_t expected = 0;
            std::vector<int> pick(key.size());
            std::function<void(std::size_t)> count = [&](std::size_t slot) {
                if (slot == key.size()) {
                    if (eps_sign(pick)) ++expected;
                    return;
                }
                const auto& pool = members.at(kind_of_rank[static_cast<std::size_t>(key[slot])]);
                for (int g : pool) {
                    if (slot > 0 && key[slot] == key[slot - 1] && g < pick[slot - 1]) continue;
                    pick[slot] = g;
                    count(slot + 1);
                }
            };
            count(0);
            if (expected != row.entries) proportional = false;
        }
        if (proportional) row.eps_coefficient = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace liexp
