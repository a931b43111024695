#include "doctest.h"

#include "conewall/descendent.hpp"

#include <tuple>

using namespace cw;

namespace {

const CohRing& P3() {
    static const CohRing r = projective_space(3);
    return r;
}

Descendent ch(int k, int cls) { return Descendent::gen(k, cls); }

CohClass Hpow(int a, const Rat& c = 1) { return P3().element(a, c); }

// (0, 0, d*line, m)
CohClass sheaf(int d, const Rat& m) { return chern_char(P3(), 0, P3().zero(), Hpow(2, d), m); }
// (-1, 0, d*line, m)
CohClass pair_class(int d, const Rat& m) { return chern_char(P3(), -1, P3().zero(), Hpow(2, d), m); }

using Triple = std::map<std::tuple<Mono, Mono, Mono>, Rat>;

Triple sigma_left_then(const Descendent& D) {
    Triple out;
    for (const auto& [k, c] : sigma_star(D).terms())
        for (const auto& [k2, c2] : sigma_star(Descendent::mono(k.first)).terms())
            out[{k2.first, k2.second, k.second}] += c * c2;
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

Triple sigma_right_then(const Descendent& D) {
    Triple out;
    for (const auto& [k, c] : sigma_star(D).terms())
        for (const auto& [k2, c2] : sigma_star(Descendent::mono(k.second)).terms())
            out[{k.first, k2.first, k2.second}] += c * c2;
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

TensorDescendent r_left(const TensorDescendent& T) { return r_minus1_left(T); }

}  // namespace

TEST_CASE("projective space ring") {
    const CohRing& R = P3();
    CHECK(R.td() == CohClass{1, 2, ratio(11, 6), 1});
    CHECK(R.c1() == CohClass{0, 4, 0, 0});
    CHECK(R.integrate(R.mul(Hpow(1), Hpow(2))) == 1);
    // Delta_* H = H (x) H^3 + H^2 (x) H^2 + H^3 (x) H
    auto diag = R.diagonal(Hpow(1));
    REQUIRE(diag.size() == 3);
    for (const auto& t : diag) {
        CHECK(t.left + t.right == 4);
        CHECK(t.coeff == 1);
    }
    CHECK(R.diagonal(R.unit()).size() == 4);
    CHECK(projective_space(1).td() == CohClass{1, 1});
    CHECK(projective_space(2).td() == CohClass{1, ratio(3, 2), 1});
}

TEST_CASE("three-fold product of lines") {
    CohRing R = p1_cubed();
    CHECK(R.size() == 8);
    CHECK(R.integrate(R.power(R.hyperplane(), 3)) == 6);
    CHECK(R.integrate(R.td()) == 1);
    // Delta_* of the unit is sum e_i (x) e_i^dual; pairing e_i against the right slot recovers e_i
    auto diag = R.diagonal(R.unit());
    CHECK(diag.size() == 8);
    for (const auto& t : diag) CHECK(R.basis(t.left).degree + R.basis(t.right).degree == 3);
}

TEST_CASE("ring validation") {
    using B = CohRing::Basis;
    std::vector<B> basis = {{"1", 0}, {"x", 1}};
    std::vector<std::vector<CohClass>> mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    CHECK_NOTHROW(CohRing(1, basis, mult, {0, 1}, {1, ratio(1, 2)}, {0, 1}, {0, 1}, {0, 1}));
    CHECK_THROWS_AS(CohRing(1, basis, mult, {0, 2}, {1, 0}, {0, 1}, {0, 1}, {0, 1}), Error);  // int pt = 2
    CHECK_THROWS_AS(CohRing(1, basis, mult, {0, 1}, {2, 0}, {0, 1}, {0, 1}, {0, 1}), Error);  // td_0 != 1
    auto bad = mult;
    bad[1][1] = {0, 1};
    CHECK_THROWS_AS(CohRing(1, basis, bad, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}), Error);
    std::vector<std::vector<CohClass>> deg = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    CHECK_THROWS_AS(CohRing(1, {{"1", 0}, {"x", 2}}, deg, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}), Error);
}

TEST_CASE("reduction modulo a Chern character") {
    const CohRing& R = P3();
    auto L = pair_class(1, ratio(3, 2));
    CHECK(reduce_mod_alpha(ch(0, 3), L, R) == Descendent::constant(-1));
    // ch_1(pt) has positive degree and survives; only the pt-normalized pairing kills it
    CHECK(reduce_mod_alpha(ch(1, 3), L, R) == ch(1, 3));
    CHECK(point_functional(R)(ch(1, 3), R) == 0);

    auto M = sheaf(1, 5);
    CHECK(reduce_mod_alpha(ch(2, 1), M, R) == Descendent::constant(1));  // int beta * H
    CHECK(reduce_mod_alpha(ch(3, 0), M, R) == Descendent::constant(5));  // int m pt
    CHECK(reduce_mod_alpha(ch(2, 2), M, R) == ch(2, 2));
    CHECK(reduce_mod_alpha(ch(1, 1) + ch(0, 2), M, R).is_zero());
    CHECK(reduce_mod_alpha(ch(4, 0) - ch(3, 0) * ch(3, 1), M, R) == ch(4, 0) - ch(3, 1).scaled(5));
    CHECK_THROWS_AS(reduce_mod_alpha(ch(2, 7), M, R), Error);
}

TEST_CASE("R_{-1}") {
    const CohRing& R = P3();
    CHECK(r_minus1(ch(2, 1) * ch(3, 2)) == ch(1, 1) * ch(3, 2) + ch(2, 1) * ch(2, 2));
    CHECK(r_minus1(ch(0, 3)).is_zero());
    CHECK(r_minus1(ch(2, 1) * ch(2, 1)) == (ch(1, 1) * ch(2, 1)).scaled(2));
    // ch_1(pt) - ch_0(pt) ch_1(1)... built as a kernel element: ch_1(x) ch_0(y) - ch_0(x) ch_1(y)
    CHECK(r_minus1(ch(1, 3) * ch(0, 2) - ch(0, 3) * ch(1, 2)).is_zero());

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto a = random_descendent(rng, R, 5, 4), b = random_descendent(rng, R, 5, 4);
        CHECK(r_minus1(a * b) == r_minus1(a) * b + a * r_minus1(b));
        CHECK(r_minus1(delta_star(a)) == delta_star(r_minus1(a)).scaled(-1));
    }
}

TEST_CASE("Sigma^*") {
    auto s = sigma_star(ch(7, 0));
    CHECK(s == TensorDescendent::pure(ch(7, 0), Descendent::constant(1)) + TensorDescendent::pure(Descendent::constant(1), ch(7, 0)));
    CHECK(sigma_star(ch(2, 1) * ch(3, 2)).size() == 4);
    CHECK(sigma_star(ch(2, 1) * ch(2, 1)).size() == 3);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        auto D = random_descendent(rng, P3(), 6, 4);
        CHECK(sigma_left_then(D) == sigma_right_then(D));
    }
}

TEST_CASE("T_H^*") {
    const CohRing& R = P3();
    for (int k : {-2, 0, 1, 3}) {
        auto got = t_h_star(ch(4, 0), Hpow(1, k), R);
        auto expect = ch(4, 0) + ch(3, 1).scaled(k) + ch(2, 2).scaled(ratio(k * k, 2)) + ch(1, 3).scaled(ratio(k * k * k, 6));
        CHECK(got == expect);
    }
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        auto D = random_descendent(rng, R, 6, 4);
        CHECK(t_h_star(D, R.zero(), R) == D);
        auto a = Hpow(1, t % 5 - 2), b = Hpow(1, ratio(t % 3 + 1, 2));
        CHECK(t_h_star(t_h_star(D, a, R), b, R) == t_h_star(D, R.add(a, b), R));
    }
    CohRing Q = p1_cubed();
    auto D = random_descendent(rng, Q, 5, 3);
    CohClass a = Q.element(1, 2), b = Q.add(Q.element(2, -1), Q.element(4, 3));
    CHECK(t_h_star(t_h_star(D, a, Q), b, Q) == t_h_star(D, Q.add(a, b), Q));
}

TEST_CASE("delta^*") {
    CHECK(delta_star(ch(7, 0)) == ch(7, 0).scaled(-1));
    CHECK(delta_star(ch(2, 1) * ch(4, 0)) == ch(2, 1) * ch(4, 0));
    std::mt19937_64 rng(14);
    for (int t = 0; t < 20; ++t) {
        auto D = random_descendent(rng, P3(), 6, 4);
        CHECK(delta_star(delta_star(D)) == D);
        Descendent even, odd;
        for (const auto& [m, c] : D.terms()) (mono_parity(m) ? odd : even).add(m, c);
        CHECK(delta_star(even) == even);
        CHECK(delta_star(odd) == odd.scaled(-1));
    }
}

TEST_CASE("Euler pairings") {
    const CohRing& R = P3();
    for (int d : {1, 2, 3})
        for (Rat m : {Rat(0), ratio(1, 2), Rat(-3), Rat(4)}) {
            const Rat dbeta = 4 * d;
            CHECK(euler_pairing(sheaf(d, m), pair_class(2, 7), R) == m - dbeta / 2);
            CHECK(euler_pairing(pair_class(2, 7), sheaf(d, m), R) == -m - dbeta / 2);
            CHECK(chi_sym(sheaf(d, m), pair_class(1, -1), R) == -dbeta);
        }
    // chi(O, O) = 1, chi(O, O(1)) = 4
    CHECK(euler_pairing(R.unit(), R.unit(), R) == 1);
    CohClass O1 = {1, 1, ratio(1, 2), ratio(1, 6)};
    CHECK(euler_pairing(R.unit(), O1, R) == 4);
    CHECK(euler_pairing(O1, R.unit(), R) == 0);  // chi(O(1), O) = h^3(O(-1)) = 0
    CHECK(euler_pairing(R.pt(), R.pt(), R) == 0);
}

TEST_CASE("c_k(Theta)") {
    const CohRing& R = P3();
    ThetaClasses theta(R);
    CHECK(theta.c(0) == TensorDescendent::one());
    CHECK(theta.c(-1).is_zero());
    for (int k = 1; k <= 5; ++k) CHECK(delta_star(theta.c(k)) == theta.c(k).scaled(k % 2 ? -1 : 1));

    // (R_{-1} (x) id) c_j = (chi_sym - j + 1) c_{j-1} modulo the two classes
    std::vector<std::pair<CohClass, CohClass>> pairs = {
        {sheaf(1, 0), R.scale(R.unit(), -1)}, {sheaf(2, 3), pair_class(1, -1)}, {sheaf(1, ratio(1, 2)), pair_class(3, 2)}};
    for (const auto& [a, b] : pairs) {
        Rat s = chi_sym(a, b, R);
        for (int j = 1; j <= 5; ++j) {
            auto lhs = reduce_mod_alpha(r_left(theta.c(j)), a, b, R);
            auto rhs = reduce_mod_alpha(theta.c(j - 1).scaled(s - j + 1), a, b, R);
            CHECK(lhs == rhs);
        }
    }
    ThetaClasses capped(R, 4);
    CHECK_THROWS_AS(capped.c(3), Error);
}

TEST_CASE("Delta_s") {
    const CohRing& R = P3();
    ThetaClasses theta(R);
    for (int s = -3; s <= 2; ++s) CHECK(delta_s(s, Descendent::constant(1), R) == theta.c(s + 1));

    std::mt19937_64 rng(15);
    for (int t = 0; t < 6; ++t) {
        auto D = random_descendent(rng, R, 3, 3, 2);
        for (int s : {-5, -2, 1}) {
            auto lhs = delta_star(delta_s(s, D, theta));
            auto rhs = delta_s(s, delta_star(D), theta);
            CHECK(lhs == ((s + 1) % 2 ? rhs.scaled(-1) : rhs));
        }
    }

    // the left slot of Delta_{chi_sym} is weight 0 after reduction
    std::vector<std::pair<CohClass, CohClass>> pairs = {{sheaf(1, 0), pair_class(0, 0)}, {sheaf(1, 2), pair_class(1, -1)},
                                                        {sheaf(2, ratio(1, 2)), pair_class(1, 3)}};
    for (const auto& [a, b] : pairs) {
        int s = static_cast<int>(chi_sym(a, b, R).get_num().get_si());
        ThetaClasses reduced(R, a, b);
        for (const auto& D : {ch(7, 0), ch(5, 1) * ch(2, 2), random_descendent(rng, R, 5, 3)}) {
            auto T = delta_s(s, D, reduced);
            if (s == -4 && D == ch(7, 0)) CHECK_FALSE(T.is_zero());
            CHECK(reduce_mod_alpha(r_left(T), a, b, R).is_zero());
        }
    }
    // a reduced theta agrees with reducing afterwards
    for (int t = 0; t < 4; ++t) {
        auto D = random_descendent(rng, R, 3, 3);
        ThetaClasses reduced(R, sheaf(1, 2), pair_class(1, -1));
        for (int s : {-4, 0})
            CHECK(delta_s(s, D, reduced) == reduce_mod_alpha(delta_s(s, D, theta), sheaf(1, 2), pair_class(1, -1), R));
    }
}

TEST_CASE("R_{-1} descends to the quotient") {
    const CohRing& R = P3();
    std::mt19937_64 rng(18);
    for (int t = 0; t < 30; ++t) {
        auto D = random_descendent(rng, R, 6, 4);
        auto a = t % 2 ? sheaf(t % 3 + 1, ratio(t, 2)) : pair_class(t % 3, t - 4);
        CHECK(reduce_mod_alpha(r_minus1(D), a, R) == reduce_mod_alpha(r_minus1(reduce_mod_alpha(D, a, R)), a, R));
    }
}

TEST_CASE("bracket with the point functional") {
    const CohRing& R = P3();
    ThetaClasses theta(R);
    auto L00 = point_functional(R);
    CHECK(L00(Descendent::constant(3) + ch(3, 1), R) == 3);
    Functional empty{sheaf(1, 0), {}, 2, true, false};
    CHECK_THROWS_AS(empty(ch(2, 2), R), Error);
    for (int m = -3; m <= 3; ++m) {
        auto form = bracket_form(sheaf(1, m), true, L00, ch(7, 0), R);
        Rat sign = m % 2 ? -1 : 1;
        // ((-1)^m / 6) <M, ch_4(1) - ch_3(1) ch_3(H)>
        auto expect = reduce_mod_alpha(ch(4, 0) - ch(3, 0) * ch(3, 1), sheaf(1, m), R).scaled(sign / 6);
        CHECK(form == expect);

        Functional M{sheaf(1, m), {}, 2, true, false};
        M.table[make_mono({{4, 0}})] = 7;
        M.table[make_mono({{3, 1}})] = -2;
        M.table[make_mono({{2, 2}})] = 5;
        CHECK(bracket_pair(M, L00, ch(7, 0), R) == M(expect, R));
        CHECK(bracket_pair(M, zero_functional(R.scale(R.unit(), -1)), ch(7, 0), R) == 0);
    }
    // half-integral chi is refused
    Functional half{sheaf(1, ratio(1, 2)), {}, std::nullopt, true, false};
    CHECK_THROWS_AS(bracket_pair(half, L00, ch(7, 0), R), Error);
}

TEST_CASE("point functional is pt-normalized and multiplicative") {
    const CohRing& R = P3();
    auto L00 = point_functional(R);
    auto alpha = L00.alpha;
    std::mt19937_64 rng(16);
    for (int t = 0; t < 20; ++t) {
        auto a = random_descendent(rng, R, 4, 3), b = random_descendent(rng, R, 4, 3);
        Rat va = L00(reduce_mod_alpha(a, alpha, R), R), vb = L00(reduce_mod_alpha(b, alpha, R), R);
        CHECK(L00(reduce_mod_alpha(a * b, alpha, R), R) == va * vb);
    }
    CHECK(L00(reduce_mod_alpha(ch(0, 3), alpha, R), R) == -1);
    CHECK(L00(reduce_mod_alpha(ch(1, 3), alpha, R), R) == 0);
    CHECK(L00(reduce_mod_alpha(ch(5, 2), alpha, R), R) == 0);
}

TEST_CASE("bracket of two sheaf functionals on a ring with several divisors") {
    CohRing R = p1_cubed();
    // beta_1 = h2 h3 (degree 1 against h1), beta_2 = h1 h3; gamma = h1 - h2 + h3
    CohClass b1 = R.element(6), b2 = R.element(5);
    CohClass gamma = R.add(R.add(R.element(1), R.element(2, -1)), R.element(4));
    Rat g1 = R.integrate(R.mul(gamma, b1)), g2 = R.integrate(R.mul(gamma, b2));
    REQUIRE(g1 == -g2);
    REQUIRE(g1 != 0);
    CohClass a1 = chern_char(R, 0, R.zero(), b1, 1), a2 = chern_char(R, 0, R.zero(), b2, -2);
    CHECK(chi_sym(a1, a2, R) == 0);

    std::mt19937_64 rng(17);
    auto pick = [&] { return ratio(std::uniform_int_distribution<int>(-9, 9)(rng), 1); };
    auto table = [&](const CohClass& a) {
        Functional F{a, {}, 2, true, false};
        for (int i = 0; i < R.size(); ++i) {
            int k = 4 - R.basis(i).degree;
            if (k >= 2) F.table[make_mono({{k, i}})] = pick();
        }
        return F;
    };
    // only the ch_2 (x) ch_2 part of c_2(Theta), against ch_2(gamma) (x) 1, survives; it carries
    // the diagonal of td_1 = c_1 / 2 with coefficient -2, so the value is -(int gamma beta_1) times the sum
    for (int t = 0; t < 5; ++t) {
        auto M1 = table(a1), M2 = table(a2);
        Rat expect = 0;
        for (const auto& d : R.diagonal(R.c1()))
            if (R.basis(d.left).degree == 2 && R.basis(d.right).degree == 2)
                expect += d.coeff * M1(ch(2, d.left), R) * M2(ch(2, d.right), R);
        expect *= -g1;
        CHECK(expect != 0);
        CHECK(bracket_pair(M1, M2, Descendent::ch(3, gamma), R) == expect);
        // independent of m_1, m_2
        for (int m : {-3, 5}) {
            M1.alpha = chern_char(R, 0, R.zero(), b1, m);
            M2.alpha = chern_char(R, 0, R.zero(), b2, 1 - m);
            CHECK(bracket_pair(M1, M2, Descendent::ch(3, gamma), R) == expect);
        }
    }
}
