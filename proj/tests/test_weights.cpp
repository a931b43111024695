#include "doctest.h"

#include "conewall/weights.hpp"

#include <random>

using namespace cw;

namespace {

// b(m) = (5/9)(-1)^m (1 - 3m^2)
QuasiPoly golden_b() {
    return QuasiPoly::univariate(2, {{ratio(5, 9), 0, ratio(-5, 3)}, {ratio(-5, 9), 0, ratio(5, 3)}});
}

QuasiPoly random_qp(std::mt19937& rng, int k, int period, int degree) {
    std::uniform_int_distribution<int> co(-3, 3);
    QuasiPoly f(k, period);
    for (size_t idx = 0; idx < f.classes().size(); ++idx)
        for (int t = 0; t < 3; ++t) {
            Exp e(k);
            int left = degree;
            for (auto& x : e) {
                x = std::uniform_int_distribution<int>(0, left)(rng);
                left -= x;
            }
            Rat c = co(rng);
            if (c != 0) f.cls(f.residue(idx))[e] += c;
        }
    return f;
}

unsigned mask_of_I(const std::vector<int>& I, int k) {
    unsigned s = (1u << k) - 1;
    for (int i : I) s &= ~(1u << (i - 1));
    return s;
}

}  // namespace

TEST_CASE("dual weights") {
    for (int k = 1; k <= 5; ++k) {
        auto d = dual_weight(builtin_weight(WeightKind::standard, k));
        for (unsigned s = 0; s < (1u << k); ++s) CHECK(d[s] == (s == (1u << k) - 1 ? Rat(k % 2 ? -1 : 1) : Rat(0)));
        for (auto kind : {WeightKind::half, WeightKind::harmonic}) {
            auto w = builtin_weight(kind, k);
            CHECK(dual_weight(w) == scaled(w, k % 2 ? -1 : 1));
        }
    }
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> co(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        FaceWeight w(1 + trial % 5);
        for (unsigned s = 0; s < (1u << w.dim()); ++s) w[s] = ratio(co(rng), 1 + trial % 4);
        CHECK(dual_weight(dual_weight(w)) == w);
    }
}

TEST_CASE("builtin weights") {
    CHECK(builtin_weight(WeightKind::half, 2)[0] == ratio(1, 4));
    CHECK(builtin_weight(WeightKind::harmonic, 3)[0b001] == ratio(1, 3));
    CHECK(builtin_weight(WeightKind::ord, 5)[mask_of_I({1, 2, 5}, 5)] == ratio(1, 12));
    CHECK(builtin_weight(WeightKind::ord, 5)[0b11111] == 1);
    CHECK(builtin_weight(WeightKind::ord, 1)[0] == ratio(1, 2));
    CHECK_THROWS_AS(parse_weight_kind("uniform"), Error);
    CHECK_THROWS_AS(builtin_weight(WeightKind::ord, 0), Error);
}

TEST_CASE("omega_ord") {
    CHECK(omega_ord({0, 0, 1, 2, 2}) == ratio(1, 12));
    CHECK(omega_ord({Rat(1), ratio(3, 2), Rat(4)}) == 1);
    CHECK(omega_ord({0}) == ratio(1, 2));
    CHECK(omega_ord({ratio(1, 2)}) == 1);
    CHECK_THROWS_AS(omega_ord({1, 0}), Error);
    CHECK_THROWS_AS(omega_ord({-1}), Error);
    CHECK(omega_ord_oracle({}, 2) == 1);
    CHECK(omega_ord_oracle({1}, 1) == ratio(1, 2));
    CHECK_THROWS_AS(omega_ord_oracle({}, 9), Error);

    // face table, sequence formula and permutation oracle agree on every face pattern
    for (int k = 1; k <= 6; ++k) {
        auto w = builtin_weight(WeightKind::ord, k);
        for (unsigned s = 0; s < (1u << k); ++s) {
            std::vector<int> I;
            std::vector<Rat> mu;
            Rat cur = 0;
            for (int i = 1; i <= k; ++i) {
                if ((s >> (i - 1)) & 1u)
                    cur += ratio(1, i);
                else
                    I.push_back(i);
                mu.push_back(cur);
            }
            CHECK(w[s] == omega_ord_oracle(I, k));
            CHECK(w[s] == omega_ord(mu));
        }
    }
}

TEST_CASE("quasi-polynomial evaluation and duality") {
    CHECK(qp_eval(QuasiPoly::constant(1, 1), Exp{17}) == 1);
    auto b = golden_b();
    CHECK(qp_eval(b, Exp{1}) == ratio(10, 9));
    CHECK(qp_eval(b, Exp{2}) == ratio(-55, 9));
    CHECK(qp_eval(b, Exp{0}) == ratio(5, 9));
    CHECK(qp_dual(b) == b);
    CHECK(qp_parity(b) == Parity::even);
    CHECK_THROWS_AS(qp_eval(b, Exp{1, 2}), Error);

    // n^2 (-1)^n
    auto f = QuasiPoly::univariate(2, {{0, 0, 1}, {0, 0, -1}});
    CHECK(qp_parity(f) == Parity::even);
    auto g = QuasiPoly::univariate(3, {{0, 1}, {0, 2}, {1}});
    CHECK(qp_parity(g) == Parity::neither);
    CHECK(qp_parity(QuasiPoly::univariate(1, {{0, 1}})) == Parity::odd);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + trial % 2, N = 1 + trial % 4;
        auto q = random_qp(rng, k, N, 3);
        auto d = qp_dual(q);
        Parity p = qp_parity(q);
        bool even = true, odd = true;
        for (int x = -2 * N; x <= 2 * N; ++x)
            for (int y = -2 * N; y <= 2 * N; ++y) {
                Exp n = k == 1 ? Exp{x} : Exp{x, y};
                Exp m = exp_scale(n, -1);
                CHECK(qp_eval(d, n) == qp_eval(q, m));
                even = even && qp_eval(q, n) == qp_eval(q, m);
                odd = odd && qp_eval(q, n) == -qp_eval(q, m);
                if (k == 1) break;
            }
        CHECK((p == Parity::even) == even);
        CHECK((p == Parity::odd) == (odd && !even));
    }
}

TEST_CASE("termize round trip") {
    auto one = qp_termize(qp_with_period(QuasiPoly::constant(1, 1), 2));
    REQUIRE(one.size() == 1);
    CHECK(one[0].coeff == CycNum(1));
    CHECK(one[0].b == Exp{0});

    std::mt19937 rng(4);
    std::vector<QuasiPoly> cases = {golden_b()};
    for (auto [k, N] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
        cases.push_back(random_qp(rng, k, N, 3));
    cases.push_back(QuasiPoly::product({golden_b(), QuasiPoly::univariate(3, {{1}, {0, 1}, {2, 0, 1}})}));
    for (const auto& q : cases) {
        auto terms = qp_termize(q);
        const int k = q.arity(), N = q.period();
        Exp n(k, -2 * N);
        while (true) {
            CycNum s = 0;
            for (const auto& t : terms) s += qp_term_eval(t, n);
            CHECK(s == CycNum(qp_eval(q, n)));
            int j = 0;
            while (j < k && n[j] == 2 * N) n[j] = -2 * N, ++j;
            if (j == k) break;
            ++n[j];
        }
    }
}

TEST_CASE("quasi-polynomial product") {
    auto b = golden_b();
    auto h = QuasiPoly::univariate(3, {{1}, {0, 1}, {2, 0, 1}});
    auto p = QuasiPoly::product({b, h});
    CHECK(p.period() == 6);
    CHECK(p.arity() == 2);
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) CHECK(qp_eval(p, Exp{x, y}) == qp_eval(b, Exp{x}) * qp_eval(h, Exp{y}));
    CHECK(p.degree() == 4);
}
