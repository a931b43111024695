#include "conewall/suite.hpp"

#include <set>

namespace cw {

double closed_form_cost(const WeightedConeProblem& p) {
    const SimplicialCone& c = p.cone;
    const int k = c.dim();
    double cost = double(c.det());
    if (!p.qp) return cost;
    const QuasiPoly& f = *p.qp;
    const long N = f.period();
    auto terms = qp_termize(f);
    for (int i = 0; i < k; ++i) {
        const Exp& v = c.generator(i);
        // lifted denominator (1 - x^{N_v v})^m of this direction
        long Nv = 1;
        int m = 1;
        for (const auto& t : terms) {
            long phase = ((dot(t.b, v) % N) + N) % N;
            Nv = lcm(Nv, N / gcd(N, phase));
            int d = 1;
            for (int j = 0; j < k; ++j)
                if (v[j] != 0) d += t.a[j];
            m = std::max(m, d);
        }
        cost *= double(Nv) * m;
    }
    return cost;
}

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

QuasiPoly random_qp(std::mt19937_64& rng, int k, int period, int degree) {
    QuasiPoly f(k, period);
    for (size_t idx = 0; idx < f.classes().size(); ++idx) {
        const int nterms = pick(rng, 0, 3);
        for (int t = 0; t < nterms; ++t) {
            Exp e(k, 0);
            int left = pick(rng, 0, degree);
            while (left > 0) {
                ++e[pick(rng, 0, k - 1)];
                --left;
            }
            Rat c = ratio(pick(rng, -4, 4), pick(rng, 1, 3));
            if (c == 0) continue;
            Rat& slot = f.cls(f.residue(idx))[e];
            slot += c;
            if (slot == 0) f.cls(f.residue(idx)).erase(e);
        }
    }
    return f;
}

}  // namespace

WeightedConeProblem random_cone_problem(std::mt19937_64& rng, const SuiteBounds& b) {
    static const WeightKind kinds[] = {WeightKind::standard, WeightKind::half, WeightKind::harmonic, WeightKind::ord};
    while (true) {
        const int k = pick(rng, 1, b.max_k);
        std::vector<int> r(k);
        for (auto& x : r) x = pick(rng, 1, b.max_r);
        WeightedConeProblem p{chain_cone(r), builtin_weight(kinds[pick(rng, 0, 3)], k), std::nullopt, std::nullopt};
        if (pick(rng, 0, 4) > 0) p.qp = random_qp(rng, k, pick(rng, 1, b.max_period), pick(rng, 0, b.max_degree));
        if (closed_form_cost(p) <= b.budget) return p;
    }
}

}  // namespace cw
