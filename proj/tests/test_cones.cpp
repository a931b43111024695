#include "doctest.h"

#include "conewall/cones.hpp"

#include <random>

using namespace cw;

namespace {

// integer matrix m and denominator d with t = m n / d, solved independently of the cone
std::pair<std::vector<std::vector<long>>, long> inverse_coords(const SimplicialCone& c) {
    const int k = c.dim();
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k)), cols;
    for (int r = 0; r < k; ++r)
        for (int i = 0; i < k; ++i) a[r][i] = c.generator(i)[r];
    long d = 1;
    for (int j = 0; j < k; ++j) {
        std::vector<Rat> e(k, Rat(0));
        e[j] = 1;
        cols.push_back(solve(a, e));
        for (const auto& x : cols.back()) d = lcm(d, x.get_den().get_si());
    }
    std::vector<std::vector<long>> m(k, std::vector<long>(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) m[i][j] = Rat(cols[j][i] * d).get_num().get_si();
    return {m, d};
}

// lattice points n of the closed cone with <g,n> <= order, tagged with their face mask
std::map<Exp, unsigned> enumerate(const SimplicialCone& c, const Exp& g, int order) {
    const int k = c.dim();
    auto m = inverse_coords(c).first;
    Exp bound(k, 0);
    for (int j = 0; j < k; ++j) {
        Rat b = 0;
        for (const auto& v : c.generators()) {
            Rat q = Rat(std::abs(v[j]) * order) / dot(g, v);
            if (q > b) b = q;
        }
        bound[j] = static_cast<int>(b.get_num().get_si() / b.get_den().get_si()) + 1;
    }
    std::map<Exp, unsigned> out;
    Exp n = exp_scale(bound, -1);
    while (true) {
        if (dot(g, n) <= order) {
            bool inside = true;
            unsigned mask = 0;
            for (int i = 0; i < k && inside; ++i) {
                long t = 0;
                for (int j = 0; j < k; ++j) t += m[i][j] * n[j];
                if (t < 0) inside = false;
                if (t > 0) mask |= 1u << i;
            }
            if (inside) out[n] = mask;
        }
        int j = 0;
        while (j < k && n[j] == bound[j]) n[j] = -bound[j], ++j;
        if (j == k) break;
        ++n[j];
    }
    return out;
}

SimplicialCone random_cone(std::mt19937& rng, int k, int span) {
    std::uniform_int_distribution<int> e(-span, span);
    while (true) {
        std::vector<Exp> gens(k, Exp(k));
        for (auto& v : gens)
            for (auto& x : v) x = e(rng);
        try {
            SimplicialCone c(gens);
            if (c.det() <= 30) return c;
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("face lattice") {
    CHECK(face_lattice(chain_cone({1})).size() == 2);
    auto f3 = face_lattice(chain_cone({1, 1, 1}));
    REQUIRE(f3.size() == 8);
    std::vector<int> dims;
    for (auto f : f3) dims.push_back(f.dim());
    CHECK(dims == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3});

    // face {mu_1 = 0} of r = (1,2): t_1 = 0, spanned by the second generator
    auto c = chain_cone({1, 2});
    CHECK(c.generator(0) == Exp{1, 2});
    CHECK(c.generator(1) == Exp{0, 2});
    for (const auto& [n, mask] : enumerate(c, Exp{1, 1}, 20)) CHECK(((mask & 1u) == 0) == (n[0] == 0));
}

TEST_CASE("relint membership") {
    auto c = chain_cone({1, 1});
    CHECK(relint_membership(c, Exp{0, 0}) == Face{0});
    CHECK(relint_membership(c, Exp{0, 3}) == Face{0b10});
    CHECK(relint_membership(c, Exp{1, 2}) == Face{0b11});
    CHECK(relint_membership(c, Exp{2, 2}) == Face{0b01});
    CHECK_FALSE(relint_membership(c, Exp{2, 1}).has_value());
    CHECK_FALSE(relint_membership(c, Exp{-1, 0}).has_value());
    CHECK(chain_cone({2, 3}).det() == 6);
    CHECK_THROWS_AS(chain_cone({}), Error);
    CHECK_THROWS_AS(chain_cone({1, 0}), Error);
    CHECK_THROWS_AS(SimplicialCone({{1, 2}, {2, 4}}), Error);
}

TEST_CASE("parallelepiped points") {
    SimplicialCone unimodular({{1, 0}, {1, 1}});
    CHECK(parallelepiped_points(unimodular, Parallelepiped::half_open) == std::vector<Exp>{{0, 0}});
    CHECK(parallelepiped_points(unimodular, Parallelepiped::opposite) == std::vector<Exp>{{2, 1}});
    CHECK(parallelepiped_points(chain_cone({1, 2}), Parallelepiped::half_open).size() == 2);
    CHECK_THROWS_AS(parallelepiped_points(chain_cone({5, 5}), Parallelepiped::half_open, Face{~0u}, 10), Error);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = random_cone(rng, 2 + trial % 2, 3);
        CHECK(static_cast<long>(parallelepiped_points(c, Parallelepiped::half_open).size()) == c.det());
        CHECK(static_cast<long>(parallelepiped_points(c, Parallelepiped::opposite).size()) == c.det());
    }
}

TEST_CASE("face series against enumeration") {
    std::mt19937 rng(5);
    std::vector<SimplicialCone> cones = {chain_cone({1, 2}), chain_cone({2, 3}), chain_cone({1, 2, 1})};
    for (int trial = 0; trial < 6; ++trial) cones.push_back(random_cone(rng, 2 + trial % 2, 2));
    for (const auto& c : cones) {
        Exp g = c.positive_grading();
        long gmin = dot(g, c.generator(0));
        for (const auto& v : c.generators()) gmin = std::min(gmin, dot(g, v));
        int order = static_cast<int>(std::max<long>(20, 6 * gmin));
        auto points = enumerate(c, g, order);

        RationalFn total(c.dim());
        for (auto f : face_lattice(c)) {
            auto s = series_expand(face_interior_series(c, f), order, g);
            for (const auto& [n, mask] : points) CHECK(s.coeff(n) == CycNum(mask == f.mask ? 1 : 0));
            long count = 0;
            for (const auto& [n, mask] : points) count += mask == f.mask;
            CHECK(static_cast<long>(s.coeffs().size()) == count);
            total += face_interior_series(c, f);
        }
        // disjoint union of relative interiors
        CHECK(rf_equal(total, face_series(c, Face{~0u})));
        auto closed = series_expand(total, order, g);
        CHECK(closed.coeffs().size() == points.size());
    }
}

TEST_CASE("Stanley reciprocity on faces") {
    CHECK(rf_equal(face_interior_series(chain_cone({1}), Face{0}), RationalFn::constant(1, 1)));
    auto ray = chain_cone({1});
    CHECK(rf_equal(face_interior_series(ray, Face{1}), RationalFn::monomial(Exp{1}) * RationalFn::geometric(Exp{1})));
    CHECK(rf_equal(invert_variables(face_series(ray, Face{1})), -face_interior_series(ray, Face{1})));

    std::mt19937 rng(3);
    std::vector<SimplicialCone> cones = {chain_cone({2, 3}), chain_cone({1, 2, 3})};
    for (int trial = 0; trial < 8; ++trial) cones.push_back(random_cone(rng, 2 + trial % 2, 3));
    for (const auto& c : cones)
        for (auto f : face_lattice(c)) {
            RationalFn lhs = invert_variables(face_series(c, f));
            RationalFn rhs = face_interior_series(c, f);
            if (f.dim() % 2) rhs = -rhs;
            CHECK(rf_equal(lhs, rhs));
        }
}
