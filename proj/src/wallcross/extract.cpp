#include "conewall/wallcross.hpp"

#include <algorithm>
#include <cstdlib>

namespace cw {

int max_order() {
    const char* e = std::getenv("CONEWALL_MAX_ORDER");
    if (!e || !*e) return 40;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (*end || v <= 0 || v > 100000) throw Error(std::string("CONEWALL_MAX_ORDER must be a positive integer, got ") + e);
    return static_cast<int>(v);
}

namespace {

int twice(const Rat& m, const char* what) {
    Rat n = 2 * m;
    if (n.get_den() != 1) throw Error(std::string(what) + " must be a half-integer");
    return static_cast<int>(n.get_num().get_si());
}

int mod(int a, int n) { return ((a % n) + n) % n; }

Rat weight(int n) {
    if (n > 0) return 1;
    if (n == 0) return Rat(1, 2);
    return 0;
}

}  // namespace

ExtractResult extract_L(const RationalFn& z, int d_beta, const Rat& m_min, const Rat& m_max, int degree_bound,
                        int period) {
    if (z.nvars() != 1) throw Error("extraction needs a series in one variable");
    if (degree_bound < 0) throw Error("degree bound must be non-negative");
    if (period < 1) throw Error("period must be positive");
    const int n_lo = twice(m_min, "window start");
    const int n_hi = twice(m_max, "window end");
    const bool empty = n_lo > n_hi;

    // the bracket in n = 2m has period 2P and lives on n = d mod 2
    const int N = 2 * period;
    int start = empty ? 1 : std::max(n_hi + 1, 1);
    if (mod(start - d_beta, 2)) ++start;
    // one spare sample per class for the consistency check
    const int order = start + N * (degree_bound + 2);
    if (order > max_order())
        throw Error("underdetermined: the fit needs the series up to u^" + std::to_string(order) +
                    ", above the limit " + std::to_string(max_order()) + " (CONEWALL_MAX_ORDER)");

    LaurentSeries s = series_expand(z, order);
    auto coef = [&](int n) {
        CycNum c = s.coeff(n);
        if (!c.is_rational()) throw Error("series has irrational coefficients");
        return c.rational();
    };

    ExtractResult out;
    out.bracket = QuasiPoly(1, N);
    for (int rho = 0; rho < N; ++rho) {
        if (mod(rho - d_beta, 2)) continue;
        const int first = start + mod(rho - start, N);
        const int D = degree_bound + 1;
        std::vector<std::vector<Rat>> a(D, std::vector<Rat>(D));
        std::vector<Rat> rhs(D);
        for (int i = 0; i < D; ++i) {
            int n = first + i * N;
            Rat p = 1;
            for (int e = 0; e < D; ++e, p *= n) a[i][e] = p;
            rhs[i] = coef(n);
        }
        std::vector<Rat> c = solve(a, rhs);
        Poly& cls = out.bracket.cls(Exp{rho});
        for (int e = 0; e < D; ++e)
            if (c[e] != 0) cls[Exp{e}] = c[e];
    }

    int lowest = empty ? 0 : n_lo;
    if (!s.coeffs().empty()) lowest = std::min(lowest, s.coeffs().begin()->first[0]);
    for (int n = lowest; n <= order; ++n) {
        const bool in_window = n >= n_lo && n <= n_hi;
        const Rat pt = coef(n);
        if (mod(n - d_beta, 2)) {
            if (pt != 0)
                throw Error("inconsistent: u^" + std::to_string(n) + " has coefficient " + to_string(pt) +
                            " but m - d/2 is not integral there");
            continue;
        }
        const Rat fit = weight(n) * qp_eval(out.bracket, Exp{n});
        if (in_window) {
            out.L[ratio(n, 2)] = pt - fit;
        } else if (pt != fit) {
            throw Error("inconsistent: at m = " + to_string(ratio(n, 2)) + " the series has " + to_string(pt) +
                        " but the fitted bracket predicts " + to_string(fit) +
                        "; raise the degree bound or the period, or widen the window");
        }
    }
    return out;
}

}  // namespace cw
