#include "conewall/wallcross.hpp"

namespace cw {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rat small_rat(std::mt19937_64& rng) {
    int n = pick(rng, -6, 6);
    if (n == 0) n = 1;
    return ratio(n, pick(rng, 1, 4));
}

// on n = d mod 2 only, with f(-n) = (-1)^p f(n)
QuasiPoly random_m_qp(std::mt19937_64& rng, int period, int p, int d, int degree) {
    QuasiPoly f(1, period);
    for (int r = 0; r < period; ++r) {
        if ((r - d) % 2) continue;
        Poly& c = f.cls(Exp{r});
        for (int e = 0; e <= degree; ++e)
            if (pick(rng, 0, 2)) c[Exp{e}] = small_rat(rng);
    }
    QuasiPoly g = qp_add(f, qp_scaled(qp_dual(f), p ? -1 : 1));
    return qp_scaled(g, Rat(1, 2));
}

constexpr int window = 3;

std::map<int, Rat> random_table(std::mt19937_64& rng, int d, int support, std::optional<int> parity) {
    std::map<int, Rat> out;
    for (int i = 0; i < support; ++i) {
        int n = pick(rng, -2 * window, 2 * window);
        if ((n - d) % 2) ++n;
        if (n > 2 * window) n -= 2;
        Rat v = small_rat(rng);
        out[n] = v;
        if (parity) out[-n] = *parity ? Rat(-v) : v;
    }
    if (parity && *parity) out.erase(0);
    return out;
}

}  // namespace

Assembly random_assembly(std::mt19937_64& rng, const SyntheticBounds& b) {
    const int h = pick(rng, 1, b.max_beta_h);
    const int mult = pick(rng, 1, b.max_beta_h / h);
    const int d = pick(rng, 1, b.max_d);
    Assembly a{CurveLattice{Exp{h}, Exp{d}, {}}, Exp{mult}, pick(rng, 0, 1), {}};
    for (const Partition& P : partitions(a.lattice, a.beta)) {
        PartitionSplit split{P, {}};
        const int k = P.k();
        const int d0 = static_cast<int>(a.lattice.d(P.beta0));
        const int terms = pick(rng, 1, b.max_terms);
        for (int t = 0; t < terms; ++t) {
            SplitTerm term;
            // parities of the slots add up to |D| + sum (d_j + 1)
            int p0 = a.parity;
            for (int j = 0; j < k; ++j) {
                const int dj = static_cast<int>(a.lattice.d(P.parts[j]));
                const int hj = static_cast<int>(a.lattice.h_degree(P.parts[j]));
                const int pj = pick(rng, 0, 1);
                p0 += dj + 1 + pj;
                QuasiPoly g = random_m_qp(rng, 2 * hj, pj, dj, pick(rng, 0, b.max_degree));
                term.f.push_back(qp_mul(half_integer_sign(dj), g));
            }
            p0 %= 2;
            if (P.beta0[0] == 0) {
                if (p0 == 0) term.l[0] = small_rat(rng);
            } else {
                term.l = random_table(rng, d0, pick(rng, 1, b.max_support), p0);
            }
            if (!term.l.empty()) split.terms.push_back(std::move(term));
        }
        a.splits.push_back(std::move(split));
    }
    return a;
}

IrreducibleData random_irreducible(std::mt19937_64& rng, const SyntheticBounds& b) {
    IrreducibleData out;
    out.d_beta = pick(rng, 1, b.max_d);
    out.h = pick(rng, 1, b.max_beta_h);
    out.L = random_table(rng, out.d_beta, pick(rng, 1, b.max_support), std::nullopt);
    out.bracket = qp_mul(half_integer_sign(out.d_beta),
                         random_m_qp(rng, 2 * out.h, pick(rng, 0, 1), out.d_beta, pick(rng, 0, b.max_degree)));
    CurveLattice lat{Exp{out.h}, Exp{out.d_beta}, {}};
    out.assembly = Assembly{lat, Exp{1}, 0, {}};
    for (const Partition& P : partitions(lat, Exp{1})) {
        PartitionSplit split{P, {}};
        if (P.k() == 0)
            split.terms.push_back(SplitTerm{out.L, {}});
        else
            split.terms.push_back(SplitTerm{{{0, Rat(1)}}, {out.bracket}});
        out.assembly.splits.push_back(std::move(split));
    }
    return out;
}

}  // namespace cw
