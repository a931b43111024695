#include "doctest.h"

#include "conewall/suite.hpp"

using namespace cw;

namespace {

RationalFn q_pow(int e) { return RationalFn::monomial(Exp{e}); }

QuasiPoly golden_b() {
    return QuasiPoly::univariate(2, {{ratio(5, 9), 0, ratio(-5, 3)}, {ratio(-5, 9), 0, ratio(5, 3)}});
}

RationalFn golden_closed_form() {
    LaurentPoly p(1);
    std::vector<long> a = {2, 3, -28, 3, 2};
    for (size_t i = 0; i < a.size(); ++i) {
        p.add_term(Exp{static_cast<int>(i)}, ratio(a[i], 18));
        p.add_term(Exp{static_cast<int>(i) - 1}, ratio(-a[i], 18));
    }
    RationalFn f(p);
    f.divide_by(Exp{1}, ratio(1, 2), 3);
    return f;
}

void check_against_brute(const WeightedConeProblem& p, int order) {
    RationalFn z = weighted_qp_series(p);
    auto brute = brute_force_series(p, order);
    LaurentSeries closed = p.specialization ? series_expand(specialize(z, *p.specialization), order)
                                            : series_expand(z, order, expansion_grading(p.cone));
    CHECK(closed == brute);
}

}  // namespace

TEST_CASE("weighted series on a ray") {
    auto ray = chain_cone({1});
    CHECK(rf_equal(weighted_series(ray, builtin_weight(WeightKind::standard, 1)), RationalFn::geometric(Exp{1})));
    // apex weighted 1/2: (1+q) / (2(1-q))
    RationalFn half = RationalFn::constant(1, ratio(1, 2)) * (RationalFn::constant(1, 1) + q_pow(1)) * RationalFn::geometric(Exp{1});
    CHECK(rf_equal(weighted_series(ray, builtin_weight(WeightKind::harmonic, 1)), half));
    CHECK(rf_equal(weighted_series(ray, builtin_weight(WeightKind::ord, 1)), half));

    auto n = QuasiPoly::univariate(1, {{0, 1}});
    CHECK(rf_equal(weighted_qp_series(ray, builtin_weight(WeightKind::standard, 1), n), q_pow(1) * RationalFn::geometric(Exp{1}, 0, 2)));
    CHECK(rf_equal(weighted_qp_series(ray, builtin_weight(WeightKind::ord, 1), QuasiPoly::constant(1, 1)), half));
}

TEST_CASE("golden tail through the quasi-polynomial series") {
    RationalFn tail = weighted_qp_series(chain_cone({1}), builtin_weight(WeightKind::ord, 1), golden_b());
    RationalFn z = tail + RationalFn::monomial(Exp{-1}, ratio(-1, 9)) + RationalFn::monomial(Exp{1}, ratio(1, 9));
    CHECK(rf_equal(z, golden_closed_form()));
}

TEST_CASE("brute force series") {
    // r = (1,2): pairs with 2 n_1 <= n_2, counted by n_1 + n_2
    WeightedConeProblem p{chain_cone({1, 2}), builtin_weight(WeightKind::standard, 2), std::nullopt, Exp{1, 1}};
    auto s = brute_force_series(p, 5);
    for (int n = 0; n <= 5; ++n) {
        long count = 0;
        for (int a = 0; a <= n; ++a) count += 2 * a <= n - a;
        CHECK(s.coeff(n) == CycNum(count));
    }
    WeightedConeProblem zero{chain_cone({2, 3}), FaceWeight(2), std::nullopt, std::nullopt};
    CHECK(brute_force_series(zero, 10).coeffs().empty());
    CHECK_THROWS_AS(brute_force_series(zero, 41), Error);

    check_against_brute({chain_cone({1, 1}), builtin_weight(WeightKind::ord, 2), std::nullopt, Exp{1, 1}}, 15);
    check_against_brute({chain_cone({2, 1, 3}), builtin_weight(WeightKind::half, 3), std::nullopt, std::nullopt}, 18);
    SimplicialCone skew({{1, 0, 2}, {-1, 1, 0}, {0, 1, 1}});
    auto twist = QuasiPoly::product({golden_b(), QuasiPoly::univariate(3, {{1}, {0, 1}, {-1}}), QuasiPoly::constant(1, 2)});
    check_against_brute({skew, builtin_weight(WeightKind::harmonic, 3), twist, std::nullopt}, 14);
}

TEST_CASE("reciprocity") {
    auto std2 = builtin_weight(WeightKind::standard, 2);
    CHECK(check_reciprocity({chain_cone({2, 3}), std2, std::nullopt, std::nullopt}).pass);
    CHECK(check_reciprocity({chain_cone({1, 1, 1}), builtin_weight(WeightKind::ord, 3), QuasiPoly::constant(3, 1), std::nullopt}).pass);
    CHECK(dual_weight(builtin_weight(WeightKind::ord, 3)) == scaled(builtin_weight(WeightKind::ord, 3), -1));

    // reciprocity holds for every table; a corrupted dual table must be caught
    auto ord3 = builtin_weight(WeightKind::ord, 3);
    WeightedConeProblem chain{chain_cone({1, 1, 1}), ord3, std::nullopt, std::nullopt};
    CHECK(check_reciprocity(chain, scaled(ord3, -1)).pass);
    auto bad = scaled(ord3, -1);
    bad[0b010] += 1;
    CHECK_FALSE(check_reciprocity(chain, bad).pass);
    auto g = QuasiPoly::univariate(2, {{1, 0, 1}, {0, 3}});
    CHECK(check_reciprocity({chain_cone({3}), builtin_weight(WeightKind::half, 1), g, std::nullopt}).pass);
}

TEST_CASE("collapsed character sum equals the term-by-term construction") {
    std::mt19937_64 rng(77);
    SuiteBounds small;
    small.budget = 600;
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_cone_problem(rng, small);
        if (!p.qp) continue;
        CHECK(rf_equal(weighted_qp_series(p), weighted_qp_series_by_terms(p.cone, p.weight, *p.qp)));
    }
    SimplicialCone skew({{1, 0, 2}, {-1, 1, 0}, {0, 1, 1}});
    auto twist = QuasiPoly::product({golden_b(), QuasiPoly::univariate(3, {{1}, {0, 1}, {-1}}), QuasiPoly::constant(1, 2)});
    auto w = builtin_weight(WeightKind::harmonic, 3);
    CHECK(rf_equal(weighted_qp_series(skew, w, twist), weighted_qp_series_by_terms(skew, w, twist)));
}

TEST_CASE("randomized suite sample") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 12; ++trial) {
        auto p = random_cone_problem(rng);
        CHECK(check_reciprocity(p).pass);
        check_against_brute(p, 25);
    }
}

TEST_CASE("chain symmetry") {
    auto one = QuasiPoly::constant(1, 1);
    auto rep = check_chain_symmetry({1, 1}, builtin_weight(WeightKind::ord, 2), {one, one});
    CHECK(rep.pass);
    CHECK(rep.even_factors == 2);
    auto ray = check_chain_symmetry({1}, builtin_weight(WeightKind::harmonic, 1), {one});
    CHECK(ray.pass);
    CHECK(rf_equal(invert_variables(ray.z), -ray.z));

    auto odd = QuasiPoly::univariate(2, {{0, 1}, {0, -1}});
    auto sq = QuasiPoly::univariate(1, {{0, 0, 1}});
    auto mixed = check_chain_symmetry({2, 1, 2}, builtin_weight(WeightKind::ord, 3), {odd, sq, one});
    CHECK(mixed.pass);
    CHECK(mixed.even_factors == 2);
    CHECK_THROWS_AS(check_chain_symmetry({1}, builtin_weight(WeightKind::ord, 1), {QuasiPoly::univariate(1, {{1, 1}})}), Error);
    CHECK_THROWS_AS(check_chain_symmetry({1}, builtin_weight(WeightKind::standard, 1), {one}), Error);
}

TEST_CASE("pole report") {
    auto golden = pole_report(golden_closed_form());
    REQUIRE(golden.size() == 1);
    CHECK(golden[0].N == 1);
    CHECK(golden[0].angle == ratio(1, 2));
    CHECK(golden[0].mult == 3);
    CHECK(pole_report(q_pow(2) + q_pow(-1)).empty());

    // sign twists on r = (1,1): suffix sums {2, 1}
    auto sign = QuasiPoly::univariate(2, {{1}, {-1}});
    RationalFn z = specialize(weighted_qp_series(chain_cone({1, 1}), builtin_weight(WeightKind::standard, 2),
                                                 QuasiPoly::product({sign, sign})),
                              Exp{1, 1});
    for (const auto& e : pole_report(z)) CHECK((e.N == 1 || e.N == 2));

    // periods dividing r_i: untwisted factors at suffix sums only
    std::vector<int> r = {2, 3, 2};
    auto p2 = QuasiPoly::univariate(2, {{1, 1}, {0, 0, 1}});
    auto p3 = QuasiPoly::univariate(3, {{1}, {2}, {0, 1}});
    RationalFn w = specialize(weighted_qp_series(chain_cone(r), builtin_weight(WeightKind::ord, 3), QuasiPoly::product({p2, p3, p2})),
                              Exp{1, 1, 1});
    auto rep = pole_report(w);
    CHECK_FALSE(rep.empty());
    for (const auto& e : rep) {
        CHECK((e.N == 7 || e.N == 5 || e.N == 2));
        CHECK(e.angle == 0);
    }
}
