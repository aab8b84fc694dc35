// Acceptance run: one PASS/FAIL line per criterion, diagnostics indented below it.
// Exits 1 when any criterion fails.

#include "liexp/constructions.hpp"
#include "liexp/dual.hpp"
#include "liexp/expansion.hpp"
#include "liexp/pipeline.hpp"
#include "liexp/transgression.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#ifndef LIEXP_DATA_DIR
#define LIEXP_DATA_DIR "data"
#endif

using namespace liexp;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    }
    void note(const std::string& s) { notes.push_back("      " + s); }
};

int failures = 0;
double total_seconds = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.notes.push_back(std::string("FAIL  exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total_seconds += secs;
    if (secs > limit_seconds) {
        o.pass = false;
        std::ostringstream s;
        s << "FAIL  runtime " << secs << " s over the " << limit_seconds << " s budget";
        o.notes.push_back(s.str());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << title << "  (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "          " << n << "\n";
    std::cout.flush();
}

DataPaths data() {
    DataPaths p;
    p.root = LIEXP_DATA_DIR;
    p.config_dir = p.root + "/configs";
    return p;
}

std::vector<std::pair<std::string, LieAlgebra>> fixture_set() {
    const DataPaths p = data();
    return {{"so3", load_algebra(Json("so3"), p)},
            {"ads3", load_algebra(Json("ads3"), p)},
            {"ads5", load_algebra(Json("ads5"), p)},
            {"random nilpotent 6", make_random_algebra(6, true, 20240611)}};
}

ScalarExpr a(int i) { return ScalarExpr::alpha(i); }
ScalarExpr ell(int p, long n = 1, long d = 1) { return ScalarExpr::ell(p, QSqrt2(ratio(n, d))); }

// expected tensor table: slot kinds and eps coefficient, row by row
using TableRow = std::pair<std::vector<std::string>, ScalarExpr>;

void compare_table(Outcome& o, const std::string& what, const std::vector<TensorRow>& got, const std::vector<TableRow>& want) {
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i)
        same = got[i].slots == want[i].first && got[i].eps_coefficient && *got[i].eps_coefficient == want[i].second;
    o.require(same, what);
    if (!same)
        for (const auto& r : got) o.note("computed " + r.str());
}

ComparisonReport compare_with(const ScalarForm& f, const std::string& golden, bool global, bool exact,
                              std::set<Field> zero = {}) {
    ComparisonOptions opt;
    opt.global_scalar = global;
    opt.modulo_exact = exact;
    opt.zero_fields = std::move(zero);
    return compare_to_target(f, load_target(data().golden(golden)), opt);
}

void add_report(Outcome& o, const ComparisonReport& r) {
    std::istringstream in(r.render());
    for (std::string line; std::getline(in, line);) o.note(line);
}

// Ratio computed / golden over the disagreeing terms that can be read off, when it is one common number.
std::optional<ScalarExpr> common_term_ratio(const ComparisonReport& r) {
    std::optional<ScalarExpr> common;
    for (const auto& t : r.terms) {
        if (!t.computed || t.agrees) continue;
        const auto q = monomial_ratio(*t.computed, t.printed);
        if (!q || (common && !(*common == *q))) return std::nullopt;
        common = q;
    }
    return common;
}

std::vector<ScalarExpr> c5_alpha_choice() { return {a(0), -a(0), -a(0), -a(0)}; }

LieValuedForm conn(const CAlgebra& c, std::set<Field> fields) {
    return build_connection(c.rotated, c.d, gravity_connection(fields));
}

}  // namespace

int main() {
    const auto fixtures = fixture_set();
    const DataPaths paths = data();

    criterion(1, "Lorentz recovery: h_reduce(2, so3) equals the so(3,1) fixture", 1.0, [&] {
        Outcome o;
        const LieAlgebra h = h_reduce(2, load_algebra(Json("so3"), paths));
        const LieAlgebra so31 = load_algebra(Json("so31"), paths);
        // J_(i,0) -> J_i and J_(i,1) -> K_i is the identity on indices in the tag-major layout
        for (int i = 0; i < 3; ++i) {
            const bool aligned = h.label(i).base == "J" && h.label(i).tags == std::vector<int>{0} &&
                                 h.label(i + 3).tags == std::vector<int>{1} && so31.label(i + 3).base == "K" &&
                                 h.label(i).indices == so31.label(i + 3).indices;
            o.require(aligned, "generator " + h.label(i + 3).str() + " sits where " + so31.label(i + 3).str() + " does");
        }
        o.require(h.same_constants(so31), "structure constants identical");
        return o;
    });

    criterion(2, "Trivial case: h_reduce(1, L) = L", 1.0, [&] {
        Outcome o;
        for (const auto& [name, l] : fixtures) o.require(h_reduce(1, l).same_constants(l), name);
        return o;
    });

    criterion(3, "Dimension law dim h_reduce(n, L) = n dim L", 30.0, [&] {
        Outcome o;
        for (const auto& [name, l] : fixtures)
            for (int n = 1; n <= 4; ++n) {
                const int dim = h_reduce(n, l).dim();
                if (dim != n * l.dim()) o.require(false, name + " n=" + std::to_string(n) + " gives " + std::to_string(dim));
            }
        o.require(o.pass, "n = 1..4 over so3, ads3, ads5 and a random algebra");
        return o;
    });

    criterion(4, "Jacobi and antisymmetry of h_reduce(n, L)", 30.0, [&] {
        Outcome o;
        auto all = fixtures;
        all.emplace_back("random solvable 6", make_random_algebra(6, false, 77));
        for (const auto& [name, l] : all) {
            o.require(check_axioms(l).ok, name + " itself");
            for (int n = 1; n <= 4; ++n) {
                const AxiomReport r = check_axioms(h_reduce(n, l));
                if (!r.ok) o.require(false, name + " n=" + std::to_string(n) + ": " + r.message);
            }
        }
        o.require(o.pass, "n = 1..4 over every fixture");
        return o;
    });

    criterion(5, "Klein reduction equals the Z2 expansion", 5.0, [&] {
        Outcome o;
        const Semigroup klein = make_klein();
        const std::map<int, int> pairing = {{0, 2}, {2, 0}, {1, 3}, {3, 1}};
        for (const char* name : {"so3", "ads3"}) {
            const LieAlgebra g = load_algebra(Json(name), paths);
            const LieAlgebra q = impose_sign_identification(s_expand(klein, g), klein, pairing);
            o.require(q.same_constants(s_expand(make_cyclic(2), g)), name);
        }
        return o;
    });

    criterion(6, "Selector identities on Z_2n, n = 1..8", 1.0, [&] {
        Outcome o;
        for (int n = 1; n <= 8; ++n) {
            const IdentityReport r = check_even_cyclic_identities(n);
            if (!r.ok) o.require(false, "n=" + std::to_string(n) + ": " + r.failure);
        }
        o.require(o.pass, "all four identities, exhaustive");
        return o;
    });

    criterion(7, "Invariant-tensor lifting on (Z4 x AdS5)_H", 120.0, [&] {
        Outcome o;
        const CAlgebra c = make_c_algebra(5);
        const std::vector<std::string> jjp = {"J_2", "J_2", "P_1"}, jjz = {"J_2", "J_2", "Z_1"}, jzp = {"J_2", "Z_2", "P_1"},
                                       jzz = {"J_2", "Z_2", "Z_1"}, zzp = {"Z_2", "Z_2", "P_1"}, zzz = {"Z_2", "Z_2", "Z_1"};
        compare_table(o, "lifted table, six rows",
                      tensor_table(c.reduced, c.lifted),
                      {{jjp, a(0)}, {jjz, a(1)}, {jzp, a(1)}, {jzz, a(2)}, {zzp, a(2)}, {zzz, a(3)}});
        compare_table(o, "rotated table",
                      tensor_table(c.rotated, c.rotated_tensor),
                      {{jjp, a(0) + a(1)}, {jjz, a(0) - a(1)}, {jzp, a(1) + a(2)}, {jzz, a(1) - a(2)}, {zzp, a(2) + a(3)},
                       {zzz, a(2) - a(3)}});

        const LieAlgebra h = h_reduce(2, make_ads(5));
        const InvariantTensor free = lift_h(2, epsilon_tensor(make_ads(5)), alpha_symbols(4));
        const InvarianceReport r = verify_invariance(h, free);
        o.require(r.ok, "verify_invariance for independent alpha0..alpha3");
        if (!r.ok) {
            o.note(r.message);
            const std::vector<ScalarExpr> tied = {a(0), a(1), -a(0), -a(1)};
            const bool tied_ok = verify_invariance(h, lift_h(2, epsilon_tensor(make_ads(5)), tied)).ok;
            o.note(std::string("with alpha2 = -alpha0, alpha3 = -alpha1 the lift is ") + (tied_ok ? "invariant" : "still not invariant"));
            // independent cross-check on so3: the so(3,1) invariant forms are J.J - K.K and J.K only
            InvariantTensor delta(2, 3);
            for (int i = 0; i < 3; ++i) delta.add({i, i}, ScalarExpr(1));
            const InvariantTensor q = lift_h(2, delta, alpha_symbols(4));
            o.note("quadratic lift on so(3,1) gives <J1 J1> = " + q.at({0, 0}).str() + ", <K1 K1> = " + q.at({3, 3}).str() +
                   "; an invariant form needs these opposite");
        }
        return o;
    });

    const CAlgebra c5 = make_c_algebra(5);

    criterion(8, "Q(A1, 0) = 0 for A1 = omega", 120.0, [&] {
        Outcome o;
        const ScalarForm q = chern_simons(conn(c5, {Field::omega}), c5.rotated_tensor, c5.rotated);
        o.require(q.is_zero(), "vanishes identically (" + std::to_string(q.size()) + " monomials)");
        return o;
    });

    criterion(9, "Q(A2, A1) against the golden expression", 120.0, [&] {
        Outcome o;
        const TargetExpression target = load_target(paths.golden("c5_q_a2a1"));
        const std::vector<ScalarExpr> printed = {ell(-1, 3, 4) * (a(0) + a(1)), ell(-3, 3, 6) * (a(1) + a(2)),
                                                 ell(-5, 3, 20) * (a(2) + a(3))};
        bool golden_ok = target.terms.size() == 3;
        for (std::size_t i = 0; golden_ok && i < 3; ++i) golden_ok = target.terms[i].coefficient == printed[i];
        o.require(golden_ok, "golden coefficients 3(a0+a1)/4l, 3(a1+a2)/6l^3, 3(a2+a3)/20l^5");
        const ScalarForm q = transgression(conn(c5, {Field::omega, Field::e}), conn(c5, {Field::omega}), c5.rotated_tensor, c5.rotated);
        const ComparisonReport r = compare_to_target(q, target);
        o.require(r.match, "exact match of the monomial maps (" + std::to_string(q.size()) + " monomials)");
        if (!r.match) add_report(o, r);
        return o;
    });

    criterion(10, "Q(A, A2) against the golden expression", 120.0, [&] {
        Outcome o;
        const InvariantTensor t = c5.rotated_tensor.substitute_alphas(c5_alpha_choice());
        const ScalarForm q = transgression(conn(c5, {Field::omega, Field::e, Field::k, Field::h}),
                                           conn(c5, {Field::omega, Field::e}), t, c5.rotated);
        const ComparisonReport r = compare_with(q, "c5_q_a_a2", false, false);
        o.require(r.match, "exact match");
        if (!r.match) {
            add_report(o, r);
            if (const auto k = common_term_ratio(r)) o.note("every readable term is " + k->str() + " times the golden coefficient");
        }
        return o;
    });

    criterion(11, "C5 Chern-Simons sectors with alpha = alpha0 (1,-1,-1,-1)", 120.0, [&] {
        Outcome o;
        const InvariantTensor t = c5.rotated_tensor.substitute_alphas(c5_alpha_choice());
        const auto full = conn(c5, {Field::omega, Field::e, Field::k, Field::h});
        const ScalarForm cs = chern_simons(full, t, c5.rotated);
        struct Sector {
            std::string label, golden;
            std::set<Field> zero;
        };
        const std::vector<Sector> sectors = {{"(a) k = h = 0", "c5_cs_kh0", {Field::k, Field::h}},
                                             {"(b) h = 0", "c5_cs_h0", {Field::h}},
                                             {"(c) k = 0", "c5_cs_k0", {Field::k}}};
        for (const auto& s : sectors) {
            const ComparisonReport r = compare_with(cs, s.golden, true, true, s.zero);
            o.require(r.match, s.label + (r.scalar ? ", global scalar " + r.scalar->str() : std::string()));
            if (!r.match) add_report(o, r);
        }
        const ComparisonReport all = compare_with(cs, "c5_cs", true, true);
        o.note(std::string("full expression: ") + (all.match ? "match" : "mismatch, term by term:"));
        if (!all.match) add_report(o, all);
        if (!o.pass) {
            const InvarianceReport inv = verify_invariance(c5.rotated, t);
            o.note(std::string("this alpha choice is ") + (inv.ok ? "invariant" : "not invariant: " + inv.message));
            const auto mid = conn(c5, {Field::omega, Field::e});
            const auto low = conn(c5, {Field::omega});
            const ScalarForm separated =
                subspace_separation({full, mid, low, LieValuedForm(c5.rotated.dim(), 1)}, t, c5.rotated);
            o.note(std::string("CS minus the subspace-separated sum is ") + (exactness(cs - separated).exact ? "exact" : "not exact"));
            const std::vector<ScalarExpr> tied = {a(0), a(1), -a(0), -a(1)};
            const InvariantTensor ti = c5.rotated_tensor.substitute_alphas(tied);
            const ScalarForm cs_tied = chern_simons(full, ti, c5.rotated);
            const ScalarForm sep_tied = subspace_separation({full, mid, low, LieValuedForm(c5.rotated.dim(), 1)}, ti, c5.rotated);
            o.note(std::string("with alpha2 = -alpha0, alpha3 = -alpha1 the same difference is ") +
                   (exactness(cs_tied - sep_tied).exact ? "exact" : "not exact"));
            for (const auto& s : sectors) {
                const ComparisonReport r = compare_with(separated, s.golden, true, true, s.zero);
                const auto k = common_term_ratio(r);
                o.note("separated sum vs " + s.label + ": " + (r.match ? "match" : "mismatch") +
                       (k && !r.match ? ", every disagreeing readable term is " + k->str() + " x golden" : ""));
            }
        }
        return o;
    });

    criterion(12, "C3 Chern-Simons form against the golden expression", 10.0, [&] {
        Outcome o;
        const CAlgebra c3 = make_c_algebra(3);
        const auto full = conn(c3, {Field::omega, Field::e, Field::k, Field::h});
        const ScalarForm cs = chern_simons(full, c3.rotated_tensor, c3.rotated, ScalarExpr::ell(1));
        const ComparisonReport low = compare_with(cs, "c3_cs_kh0", false, true, {Field::k, Field::h});
        o.require(low.match, "k = h = 0: (a0+a1) eps R e + (a1+a2)/(3 l^2) eps e e e");
        if (!low.match) add_report(o, low);
        const ComparisonReport r = compare_with(cs, "c3_cs", false, true);
        o.require(r.match, "all terms, every alpha component");
        if (!r.match) {
            add_report(o, r);
            const std::vector<ScalarExpr> tied = {a(0), a(1), -a(0), a(3)};
            const ComparisonReport gt = [&] {
                TargetExpression g = load_target(paths.golden("c3_cs"));
                for (auto& term : g.terms) term.coefficient = term.coefficient.substitute_alphas(tied);
                return compare_to_target(cs.substitute_alphas(tied), g, ComparisonOptions{false, true, {}});
            }();
            o.note(std::string("with alpha2 = -alpha0 on both sides: ") + (gt.match ? "match" : "mismatch"));
        }
        return o;
    });

    criterion(13, "Dual Maurer-Cartan constants", 30.0, [&] {
        Outcome o;
        for (const char* name : {"so3", "ads5"}) {
            const DualReport r = dual_mc_check(2, load_algebra(Json(name), paths));
            o.require(r.doubled, std::string(name) + ": dual constants are twice the reduced ones");
            o.require(r.witness_ok, std::string(name) + ": T' = 2T witness");
        }
        return o;
    });

    criterion(14, "Killing profiles separate Z2 expansion and H reduction of so3", 1.0, [&] {
        Outcome o;
        const LieAlgebra so3 = load_algebra(Json("so3"), paths);
        const KillingProfile expanded = killing_profile(s_expand(make_cyclic(2), so3));
        const KillingProfile reduced = killing_profile(h_reduce(2, so3));
        o.require(expanded == killing_profile(load_algebra(Json("so4"), paths)), "s_expand(Z2, so3) has the so(4) profile");
        o.require(reduced == killing_profile(load_algebra(Json("so31"), paths)), "h_reduce(2, so3) has the so(3,1) profile");
        o.require(!(expanded == reduced), "the profiles differ");
        std::ostringstream s;
        s << "signatures (+" << expanded.signature.positive << ", -" << expanded.signature.negative << ") vs (+"
          << reduced.signature.positive << ", -" << reduced.signature.negative << ")";
        o.note(s.str());
        return o;
    });

    criterion(15, "Lovelock dictionary", 120.0, [&] {
        Outcome o;
        const ScalarForm q = transgression(conn(c5, {Field::omega, Field::e}), conn(c5, {Field::omega}), c5.rotated_tensor, c5.rotated);
        const LovelockDictionary d = lovelock_dictionary(q);
        o.require(d.beta0 == ScalarExpr(QSqrt2(ratio(1, 2))) * (a(0) + a(1)), "beta0 = (a0+a1)/2, got " + d.beta0.str());
        o.require(d.beta1 == ell(-2, 1, 3) * (a(1) + a(2)), "beta1 = (a1+a2)/(3 l^2), got " + d.beta1.str());
        o.require(d.beta2 == ell(-4, 1, 10) * (a(2) + a(3)), "beta2 = (a2+a3)/(10 l^4), got " + d.beta2.str());
        return o;
    });

    std::cout << "total " << std::fixed << std::setprecision(2) << total_seconds << " s, " << failures << " of 15 criteria failed\n";
    if (total_seconds > 300) {
        std::cout << "FAIL  total runtime over 5 minutes\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
