// Acceptance run: one pass/fail line per criterion. Exit 0 when all pass.
#include "conewall/commands.hpp"
#include "conewall/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

using namespace cw;

namespace {

// all comparisons are exact; the only tolerances are wall-clock budgets
constexpr double limit_golden_s = 1;
constexpr double limit_reciprocity_s = 60;
constexpr double limit_ord_s = 10;
constexpr double limit_parity_s = 30;
constexpr double limit_bracket_s = 5;
constexpr double limit_recursion_s = 10;
constexpr double limit_primary_s = 30;
constexpr double limit_poles_s = 60;

constexpr int reciprocity_trials = 200;
constexpr int reciprocity_order = 25;
constexpr int parity_trials = 50;
constexpr int pole_trials = 50;

const CohRing& P3() {
    static const CohRing r = projective_space(3);
    return r;
}

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

LaurentSeries expand_problem(const WeightedConeProblem& p, int order) {
    RationalFn z = weighted_qp_series(p);
    return p.specialization ? series_expand(specialize(z, *p.specialization), order)
                            : series_expand(z, order, expansion_grading(p.cone));
}

Check c_golden() {
    Check c;
    RationalFn z = assemble_pt(build_assembly(wcinput_from_json(fixture("p3-lines-ch7"), P3()), P3())).z;
    c.expect(rf_equal(z, golden_p3_closed_form()), "closed form differs");
    LaurentSeries s = series_expand(z, 2);
    c.expect(s.coeff(-2) == CycNum(ratio(-1, 9)), "q^-1 coefficient");
    c.expect(s.coeff(0) == CycNum(ratio(5, 18)), "q^0 coefficient");
    c.expect(s.coeff(2) == CycNum(ratio(11, 9)), "q^1 coefficient");
    return c;
}

Check c_functional_equation() {
    Check c;
    PTSeries pt = assemble_pt(build_assembly(wcinput_from_json(fixture("p3-lines-ch7"), P3()), P3()));
    c.expect(pt.parity == 1, "parity of ch7(1) is not odd");
    c.expect(rf_equal(invert_variables(pt.z), -pt.z), "Z(1/q) != -Z(q)");
    c.expect(check_functional_equation(pt.z, 1), "check_functional_equation");
    return c;
}

Check c_recovery() {
    Check c;
    ExtractResult r = extract_L(golden_p3_closed_form(), 4, -1, 1, 2, 2);
    std::map<Rat, Rat> want = {{-1, ratio(-1, 9)}, {0, 0}, {1, ratio(1, 9)}};
    c.expect(r.L == want, "L table");
    for (int m = -6; m <= 6; ++m) {
        Rat b = ratio(5, 9) * (m % 2 ? -1 : 1) * (1 - 3 * m * m);
        c.expect(qp_eval(r.bracket, Exp{2 * m}) == b, "bracket at m = " + std::to_string(m));
    }
    return c;
}

Check c_reciprocity() {
    Check c;
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < reciprocity_trials && c.ok; ++t) {
        WeightedConeProblem p = random_cone_problem(rng);
        c.expect(check_reciprocity(p).pass, "reciprocity, trial " + std::to_string(t));
        c.expect(expand_problem(p, reciprocity_order) == brute_force_series(p, reciprocity_order),
                 "brute force, trial " + std::to_string(t));
    }
    return c;
}

Check c_ord_duality() {
    Check c;
    for (int k = 1; k <= 7; ++k) {
        FaceWeight w = builtin_weight(WeightKind::ord, k);
        c.expect(dual_weight(w) == scaled(w, k % 2 ? -1 : 1), "dual at k = " + std::to_string(k));
    }
    for (int k = 1; k <= 6; ++k) {
        FaceWeight w = builtin_weight(WeightKind::ord, k);
        for (unsigned s = 0; s < (1u << k); ++s) {
            std::vector<int> I;
            for (int i = 1; i <= k; ++i)
                if (!((s >> (i - 1)) & 1u)) I.push_back(i);
            c.expect(w[s] == omega_ord_oracle(I, k), "oracle at k = " + std::to_string(k));
        }
    }
    return c;
}

Check c_delta_parity() {
    Check c;
    const CohRing& R = P3();
    ThetaClasses theta(R);
    std::mt19937_64 rng(6);
    for (int t = 0; t < parity_trials; ++t) {
        Descendent D = random_descendent(rng, R, 3, 3, 2);
        for (int s = -6; s <= 2; ++s) {
            TensorDescendent lhs = delta_star(delta_s(s, D, theta));
            TensorDescendent rhs = delta_s(s, delta_star(D), theta);
            c.expect(lhs == ((s + 1) % 2 ? rhs.scaled(-1) : rhs), to_string(D, R) + " at s = " + std::to_string(s));
        }
    }
    return c;
}

Check c_bracket_identity() {
    Check c;
    const CohRing& R = P3();
    Functional L00 = point_functional(R);
    Descendent ch7 = Descendent::gen(7, 0);
    Descendent pair = Descendent::gen(4, 0) - Descendent::gen(3, 0) * Descendent::gen(3, 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> v(-9, 9);
    for (int m = -2; m <= 2; ++m) {
        CohClass alpha = chern_char(R, 0, R.zero(), R.element(2), m);
        Rat sign = m % 2 ? -1 : 1;
        // the functional-free form: holds for every table M of class alpha
        Descendent want = reduce_mod_alpha(pair, alpha, R).scaled(sign / 6);
        c.expect(bracket_form(alpha, true, L00, ch7, R) == want, "form at m = " + std::to_string(m));
        Functional M{alpha, {}, 2, true, false};
        for (const Mono& mono : {make_mono({{4, 0}}), make_mono({{3, 1}}), make_mono({{2, 2}})}) M.table[mono] = v(rng);
        c.expect(bracket_pair(M, L00, ch7, R) == M(want, R), "pairing at m = " + std::to_string(m));
    }
    return c;
}

Check c_theta_recursion() {
    Check c;
    const CohRing& R = P3();
    ThetaClasses theta(R);
    auto sheaf = [&](int d, const Rat& m) { return chern_char(R, 0, R.zero(), R.element(2, d), m); };
    auto pair = [&](int d, const Rat& m) { return chern_char(R, -1, R.zero(), R.element(2, d), m); };
    std::vector<std::pair<CohClass, CohClass>> shapes = {{sheaf(1, 0), R.scale(R.unit(), -1)},
                                                         {sheaf(2, 3), pair(1, -1)},
                                                         {sheaf(1, ratio(1, 2)), pair(3, 2)},
                                                         {sheaf(3, -2), pair(0, 0)}};
    for (const auto& [a, b] : shapes) {
        Rat chi = chi_sym(a, b, R);
        for (int j = 1; j <= 5; ++j) {
            auto lhs = reduce_mod_alpha(r_minus1_left(theta.c(j)), a, b, R);
            auto rhs = reduce_mod_alpha(theta.c(j - 1).scaled(chi - j + 1), a, b, R);
            c.expect(lhs == rhs, "j = " + std::to_string(j));
        }
    }
    return c;
}

NovikovSeries random_novikov(std::mt19937_64& rng, bool unit) {
    NovikovSeries z(Exp{2, 1}, 2, 2);
    std::uniform_int_distribution<int> co(-3, 3);
    for (int b0 = 0; b0 <= 2; ++b0)
        for (int b1 = 0; b1 <= 1; ++b1)
            for (int t0 = 0; t0 <= 2; ++t0)
                for (int t1 = 0; t0 + t1 <= 2; ++t1) {
                    NovikovSeries::Key k{{b0, b1}, {t0, t1}};
                    if (b0 + b1 + t0 + t1 == 0) {
                        if (unit) z.add(k, RationalFn::constant(1, 1));
                        continue;
                    }
                    int a = co(rng);
                    if (a == 0) continue;
                    RationalFn v = RationalFn::constant(1, a);
                    if (co(rng) > 0) v *= inverse_s();
                    z.add(k, v);
                }
    return z;
}

Check c_primary() {
    Check c;
    for (int k = 0; k <= 4; ++k)
        c.expect(rf_equal(primary_tuple_series(k), primary_tuple_closed_form(k)), "tuples at k = " + std::to_string(k));
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        NovikovSeries x = random_novikov(rng, false);
        c.expect(connected_log(novikov_exp(x)) == x, "log(exp(x))");
        NovikovSeries z = random_novikov(rng, true);
        c.expect(novikov_exp(connected_log(z)) == z, "exp(log(z))");
    }
    return c;
}

Check c_poles() {
    Check c;
    std::mt19937_64 rng(10);
    SyntheticBounds b;
    for (int t = 0; t < pole_trials; ++t) {
        Assembly a = random_assembly(rng, b);
        RationalFn z = assemble_pt(a).z;
        c.expect(poles_within(z, a.lattice, a.beta), "synthetic input " + std::to_string(t));
    }
    // chain cones whose quasi-polynomial periods divide the radii
    std::vector<int> r = {2, 3, 2};
    auto p2 = QuasiPoly::univariate(2, {{1, 1}, {0, 0, 1}});
    auto p3 = QuasiPoly::univariate(3, {{1}, {2}, {0, 1}});
    RationalFn w = specialize(weighted_qp_series(chain_cone(r), builtin_weight(WeightKind::ord, 3),
                                                 QuasiPoly::product({p2, p3, p2})),
                              Exp{1, 1, 1});
    for (const auto& e : pole_report(w)) c.expect(e.N == 7 || e.N == 5 || e.N == 2, "chain pole order");
    std::vector<int> r2 = {1, 4};
    auto p4 = QuasiPoly::univariate(4, {{1}, {0, 1}, {-1}, {2}});
    RationalFn w2 = specialize(weighted_qp_series(chain_cone(r2), builtin_weight(WeightKind::harmonic, 2),
                                                  QuasiPoly::product({QuasiPoly::constant(1, 1), p4})),
                               Exp{1, 1});
    for (const auto& e : pole_report(w2)) c.expect(e.N == 5 || e.N == 4, "chain pole order");
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Check()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> all = {
        {1, "golden P3 lines", limit_golden_s, c_golden},
        {2, "functional equation", limit_golden_s, c_functional_equation},
        {3, "L-recovery", limit_golden_s, c_recovery},
        {4, "reciprocity suite", limit_reciprocity_s, c_reciprocity},
        {5, "ord self-duality", limit_ord_s, c_ord_duality},
        {6, "parity of Delta_s", limit_parity_s, c_delta_parity},
        {7, "bracket identity", limit_bracket_s, c_bracket_identity},
        {8, "c_j(Theta) recursion", limit_recursion_s, c_theta_recursion},
        {9, "primary exp identity", limit_primary_s, c_primary},
        {10, "pole containment", limit_poles_s, c_poles},
    };
    int failed = 0;
    for (const auto& cr : all) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("threw: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < cr.limit_s;
        bool pass = c.ok && in_time;
        if (!pass) ++failed;
        std::printf("criterion %2d %-22s %s  %.3fs / %.0fs", cr.id, cr.name, pass ? "PASS" : "FAIL", secs, cr.limit_s);
        if (!c.ok) std::printf("  (%s)", c.detail.c_str());
        if (c.ok && !in_time) std::printf("  (over time)");
        std::printf("\n");
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
