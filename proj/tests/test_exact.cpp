#include "doctest.h"

#include "conewall/ratfn.hpp"

#include <random>

using namespace cw;

namespace {

RationalFn q_pow(int e) { return RationalFn::monomial(Exp{e}); }
RationalFn geo(int b, const Rat& angle = 0, int m = 1) { return RationalFn::geometric(Exp{b}, angle, m); }
RationalFn cst(const Rat& r) { return RationalFn::constant(1, r); }

// coefficients of the golden closed form by plain long division over Q
std::vector<Rat> golden_oracle(int upto) {
    // numerator (q-1)(2+3q-28q^2+3q^3+2q^4)/18 in ascending powers, overall factor q^{-1}
    std::vector<Rat> a = {2, 3, -28, 3, 2};
    std::vector<Rat> num(6, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        num[i + 1] += a[i];
        num[i] -= a[i];
    }
    for (auto& c : num) c /= 18;
    // 1/(1+q)^3 = sum binom(-3,n) q^n
    std::vector<Rat> inv(upto + 2);
    for (int n = 0; n < upto + 2; ++n) inv[n] = binomial(-3, n);
    std::vector<Rat> out(upto + 2, Rat(0));  // out[i] is coefficient of q^{i-1}
    for (int i = 0; i < upto + 2; ++i)
        for (int j = 0; j <= i && j < 6; ++j) out[i] += num[j] * inv[i - j];
    return out;
}

RationalFn golden_closed_form() {
    LaurentPoly p(1);
    std::vector<long> a = {2, 3, -28, 3, 2};
    for (size_t i = 0; i < a.size(); ++i) {
        p.add_term(Exp{static_cast<int>(i)}, ratio(a[i], 18));
        p.add_term(Exp{static_cast<int>(i) - 1}, ratio(-a[i], 18));
    }
    RationalFn f(p);
    f.divide_by(Exp{1}, Rat(1, 2), 3);
    return f;
}

}  // namespace

TEST_CASE("rational serialization") {
    CHECK(to_string(Rat(5, 18)) == "5/18");
    CHECK(to_string(Rat(-3)) == "-3");
    CHECK(parse_rat("-10/4") == Rat(-5, 2));
    CHECK(parse_rat("7") == 7);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("cyclotomic arithmetic") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 24}) {
        CycNum z = CycNum::root(Rat(1, n));
        CycNum p = 1;
        for (int i = 0; i < n; ++i) {
            if (i > 0) CHECK_FALSE(p == CycNum(1));
            p *= z;
        }
        CHECK(p == CycNum(1));
        // minimal polynomial relation
        const auto& phi = cyclotomic_poly(n);
        CycNum s = 0, zp = 1;
        for (long c : phi) {
            s += zp * CycNum(c);
            zp *= z;
        }
        CHECK(s.is_zero());
    }
    CHECK(euler_phi(12) == 4);
    CHECK(CycNum::root(Rat(1, 2)) == CycNum(-1));
    CHECK(CycNum::root(Rat(1, 6)).conductor() == 3);
    // Rat embeds homomorphically
    CHECK(CycNum(Rat(2, 3)) * CycNum(Rat(3, 5)) == CycNum(Rat(2, 5)));
    CHECK(CycNum(Rat(1, 2)) + CycNum(Rat(1, 3)) == CycNum(Rat(5, 6)));
    // mixed conductors
    CycNum i = CycNum::root(Rat(1, 4)), w = CycNum::root(Rat(1, 3));
    CHECK(i * w == CycNum::root(Rat(7, 12)));
    CHECK((i * i).is_rational());
    CHECK((1 + w + w * w).is_zero());
    CycNum x = CycNum(3) + i * CycNum(Rat(1, 2)) - w;
    CHECK(x * x.inverse() == CycNum(1));
    CHECK(CycNum::root(Rat(5, 12)).root_angle() == Rat(5, 12));
    CHECK_THROWS_AS(CycNum(2).root_angle(), Error);
    CHECK_THROWS_AS(CycNum(0).inverse(), Error);
}

TEST_CASE("rf_equal") {
    RationalFn a = geo(1);
    LaurentPoly p(1);
    p.add_term(Exp{0}, 1);
    p.add_term(Exp{1}, 1);
    RationalFn b(p);
    b.divide_by(Exp{2}, 0, 1);
    CHECK(rf_equal(a, b));
    CHECK_FALSE(rf_equal(q_pow(1) * geo(1), geo(1)));
    CHECK_THROWS_AS(rf_equal(geo(1), RationalFn::geometric(Exp{1, 0})), Error);
    // equivalence and idempotent canonicalization
    RationalFn c = b.cancelled();
    CHECK(rf_equal(c, a));
    CHECK(rf_equal(c.cancelled(), c));
    CHECK(c.denominator().size() == 1);
}

TEST_CASE("series_expand") {
    auto s = series_expand(geo(1), 3);
    for (int e = 0; e <= 3; ++e) CHECK(s.coeff(e) == CycNum(1));
    CHECK(s.coeff(4).is_zero());
    CHECK(s.coeff(-1).is_zero());

    auto oracle = golden_oracle(10);
    auto g = series_expand(golden_closed_form(), 10);
    for (int e = -1; e <= 10; ++e) CHECK(g.coeff(e) == CycNum(oracle[e + 1]));
    CHECK(g.coeff(-1) == CycNum(Rat(-1, 9)));
    CHECK(g.coeff(0) == CycNum(Rat(5, 18)));
    CHECK(g.coeff(1) == CycNum(Rat(11, 9)));

    // inconsistent expansion directions are refused
    RationalFn mixed = RationalFn::geometric(Exp{1, -1});
    CHECK_THROWS_AS(series_expand(mixed, 5), Error);
    CHECK_NOTHROW(series_expand(mixed, 5, Exp{2, 1}));
}

TEST_CASE("invert_variables") {
    // 1/(1-q) at q^-1 equals -q/(1-q)
    CHECK(rf_equal(invert_variables(geo(1)), -(q_pow(1) * geo(1))));
    CHECK(rf_equal(invert_variables(RationalFn::monomial(Exp{2, -3})), RationalFn::monomial(Exp{-2, 3})));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ex(-3, 3), co(-4, 4), pick(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly p(2);
        for (int t = 0; t < 4; ++t) p.add_term(Exp{ex(rng), ex(rng)}, Rat(co(rng)));
        RationalFn f(p);
        for (int t = 0; t < 2; ++t) {
            Exp b{pick(rng), pick(rng) - 1};
            if (b[0] == 0 && b[1] == 0) b[0] = 1;
            f.divide_by(b, Rat(pick(rng), 4), 1 + pick(rng) % 2);
        }
        CHECK(rf_equal(invert_variables(invert_variables(f)), f));
    }
}

TEST_CASE("theta_derivative") {
    CHECK(rf_equal(theta_derivative(geo(1), 0), q_pow(1) * geo(1, 0, 2)));
    CHECK(rf_equal(theta_derivative(q_pow(5), 0), cst(5) * q_pow(5)));
    // derivative respects rf_equal classes
    LaurentPoly p(1);
    p.add_term(Exp{0}, 1);
    p.add_term(Exp{1}, 1);
    RationalFn b(p);
    b.divide_by(Exp{2}, 0, 1);
    CHECK(rf_equal(theta_derivative(b, 0), theta_derivative(geo(1), 0)));
    CHECK_THROWS_AS(theta_derivative(geo(1), 1), Error);
}

TEST_CASE("root_substitute") {
    CHECK(rf_equal(root_substitute(geo(1), 0, CycNum(-1)), geo(1, Rat(1, 2))));
    CHECK(rf_equal(root_substitute(geo(1), 0, CycNum(1)), geo(1)));
    CHECK_THROWS_AS(root_substitute(geo(1), 0, CycNum(2)), Error);

    RationalFn f = theta_derivative(RationalFn::geometric(Exp{1, 2}) * RationalFn::geometric(Exp{0, 1}), 1);
    Rat ang(1, 3);
    auto base = series_expand(f, 8);
    auto sub = series_expand(root_substitute(f, 1, ang), 8);
    for (const auto& [e, c] : base.coeffs()) CHECK(sub.coeff(e) == c * CycNum::root(ang * e[1]));
    CHECK(sub.coeffs().size() == base.coeffs().size());
}

TEST_CASE("specialize and poles") {
    RationalFn f = RationalFn::geometric(Exp{1, 0}) * RationalFn::geometric(Exp{0, 1});
    RationalFn g = specialize(f, Exp{1, 1});
    CHECK(rf_equal(g, geo(1, 0, 2)));
    // collapsing factor that cancels
    LaurentPoly p(2);
    p.add_term(Exp{0, 0}, 1);
    p.add_term(Exp{1, -1}, -1);
    RationalFn h(p);
    h.divide_by(Exp{1, -1}, 0, 1);
    CHECK(rf_equal(specialize(h, Exp{1, 1}), cst(1)));
    // collapsing factor that does not cancel
    CHECK_THROWS_AS(specialize(RationalFn::geometric(Exp{1, -1}), Exp{1, 1}), Error);
    // twisted collapsing factor becomes a constant
    CHECK(rf_equal(specialize(RationalFn::geometric(Exp{1, -1}, Rat(1, 2)), Exp{1, 1}), cst(Rat(1, 2))));

    auto ps = poles(golden_closed_form());
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].angle == Rat(1, 2));
    CHECK(ps[0].mult == 3);
    CHECK(poles(q_pow(3) + cst(2)).empty());
    // (1+q)/(1-q^2) has only the pole at q = 1
    LaurentPoly n(1);
    n.add_term(Exp{0}, 1);
    n.add_term(Exp{1}, 1);
    RationalFn r(n);
    r.divide_by(Exp{2}, 0, 1);
    auto rp = poles(r);
    REQUIRE(rp.size() == 1);
    CHECK(rp[0].order == 1);
}

TEST_CASE("reduced splits binomials that cancel") {
    // (1 - q^2)^3 / (1 - q^4)^3 = 1 / (1 + q^2)^3
    RationalFn z = RationalFn(LaurentPoly::binomial_power(Exp{2}, CycNum(1), 3)) * geo(4, 0, 3);
    RationalFn r = z.reduced();
    CHECK(rf_equal(r, z));
    CHECK(r.numerator() == LaurentPoly::constant(1, 1));
    REQUIRE(r.denominator().size() == 1);
    CHECK(r.denominator().begin()->first.b == Exp{2});
    CHECK(r.denominator().begin()->first.angle == Rat(1, 2));
    CHECK(r.denominator().begin()->second == 3);

    // (1 - q) / (1 - q^3) would leave factors over Q(zeta_3): kept whole
    RationalFn w = (cst(1) - q_pow(1)) * geo(3);
    RationalFn rw = w.reduced();
    CHECK(rf_equal(rw, w));
    CHECK(rw.denominator().size() == 1);
    CHECK(rw.denominator().begin()->first.b == Exp{3});

    // nothing to cancel
    RationalFn v = geo(6, 0, 2) * (cst(2) + q_pow(1));
    CHECK(v.reduced().denominator() == v.denominator());
}
