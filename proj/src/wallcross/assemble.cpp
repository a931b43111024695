#include "conewall/wallcross.hpp"

#include <algorithm>

namespace cw {

bool CurveLattice::effective(const Exp& b) const {
    return static_cast<int>(b.size()) == rank() && std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
}

void CurveLattice::validate() const {
    if (H.empty()) throw Error("curve lattice has rank zero");
    if (c1.size() != H.size()) throw Error("H and c1 pairings have different lengths");
    for (int i = 0; i < rank(); ++i) {
        if (H[i] <= 0) throw Error("H must be positive on every basis curve");
        if (c1[i] <= 0) throw Error("d_beta must be positive on every basis curve");
    }
    if (!curves.empty() && static_cast<int>(curves.size()) != rank())
        throw Error("need one cohomology class per basis curve");
}

CohClass CurveLattice::curve(const Exp& b, const CohRing& R) const {
    if (static_cast<int>(curves.size()) != rank()) throw Error("curve lattice has no cohomology classes");
    CohClass out = R.zero();
    for (int i = 0; i < rank(); ++i) out = R.add(out, R.scale(curves[i], b[i]));
    return out;
}

namespace {

// all 0 <= x <= top, in lexicographic order
std::vector<Exp> box(const Exp& top) {
    std::vector<Exp> out;
    Exp x(top.size(), 0);
    while (true) {
        out.push_back(x);
        size_t i = 0;
        while (i < x.size() && x[i] == top[i]) x[i++] = 0;
        if (i == x.size()) break;
        ++x[i];
    }
    return out;
}

bool is_zero(const Exp& b) {
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

void compositions(const Exp& rest, std::vector<Exp>& cur, std::vector<std::vector<Exp>>& out) {
    if (is_zero(rest)) {
        out.push_back(cur);
        return;
    }
    for (const Exp& p : box(rest)) {
        if (is_zero(p)) continue;
        cur.push_back(p);
        compositions(exp_sub(rest, p), cur, out);
        cur.pop_back();
    }
}

// f vanishes on every n with n - d odd
bool supported_on(const QuasiPoly& f, long d) {
    QuasiPoly g = qp_with_period(f, static_cast<int>(lcm(f.period(), 2)));
    for (size_t idx = 0; idx < g.classes().size(); ++idx)
        if ((g.residue(idx)[0] - d) % 2 && !g.classes()[idx].empty()) return false;
    return true;
}

std::string class_str(const Exp& b) {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

}  // namespace

std::vector<Partition> partitions(const CurveLattice& lat, const Exp& beta) {
    lat.validate();
    if (!lat.effective(beta)) throw Error("target class is not effective");
    std::vector<Partition> out;
    for (const Exp& b0 : box(beta)) {
        std::vector<std::vector<Exp>> comps;
        std::vector<Exp> cur;
        compositions(exp_sub(beta, b0), cur, comps);
        for (auto& c : comps) out.push_back(Partition{b0, std::move(c)});
    }
    return out;
}

QuasiPoly half_integer_sign(int d) {
    QuasiPoly s(1, 4);
    for (int r = 0; r < 4; ++r) {
        if ((r - d) % 2) continue;
        int t = ((r - d) / 2 % 2 + 2) % 2;
        s.cls(Exp{r})[Exp{0}] = t ? -1 : 1;
    }
    return s;
}

PTSeries assemble_pt(const Assembly& a) {
    const CurveLattice& lat = a.lattice;
    lat.validate();
    if (!lat.effective(a.beta)) throw Error("target class is not effective");
    LaurentPoly finite(1);
    RationalFn z(1);
    for (const auto& split : a.splits) {
        const Partition& P = split.partition;
        const int k = P.k();
        if (!lat.effective(P.beta0)) throw Error("partition has a non-effective beta_0");
        Exp sum = P.beta0;
        std::vector<int> r(k);
        for (int j = 0; j < k; ++j) {
            if (!lat.effective(P.parts[j]) || is_zero(P.parts[j])) throw Error("partition parts must be nonzero and effective");
            sum = exp_add(sum, P.parts[j]);
            r[j] = static_cast<int>(2 * lat.h_degree(P.parts[j]));
        }
        if (sum != a.beta) throw Error("partition does not add up to the target class " + class_str(a.beta));
        const long d0 = lat.d(P.beta0);

        std::map<int, QuasiPoly> by_n0;
        for (const auto& t : split.terms) {
            if (static_cast<int>(t.f.size()) != k) throw Error("split term needs one quasi-polynomial per M slot");
            for (const auto& [n0, v] : t.l)
                if ((n0 - d0) % 2) throw Error("L value at m_0 = " + to_string(ratio(n0, 2)) + " violates m_0 - d/2 integral");
            for (int j = 0; j < k; ++j) {
                if (t.f[j].arity() != 1) throw Error("M slot quasi-polynomials must be univariate");
                if (!supported_on(t.f[j], lat.d(P.parts[j])))
                    throw Error("f_" + std::to_string(j + 1) + " is nonzero at some m with m - d/2 not integral");
            }
            if (k == 0) {
                for (const auto& [n0, v] : t.l) finite.add_term(Exp{n0}, v);
                continue;
            }
            QuasiPoly prod = k == 1 ? t.f[0] : QuasiPoly::product(t.f);
            for (const auto& [n0, v] : t.l) {
                QuasiPoly add = qp_scaled(prod, v);
                auto it = by_n0.find(n0);
                if (it == by_n0.end())
                    by_n0.emplace(n0, add);
                else
                    it->second = qp_add(it->second, add);
            }
        }
        if (by_n0.empty()) continue;
        SimplicialCone cone = chain_cone(r);
        FaceWeight ord = builtin_weight(WeightKind::ord, k);
        for (const auto& [n0, g] : by_n0) {
            if (qp_is_zero(g)) continue;
            RationalFn b = specialize(weighted_qp_series(cone, ord, g), Exp(k, 1));
            z += RationalFn::monomial(Exp{n0}) * b;
        }
    }
    z += RationalFn(finite);
    PTSeries out;
    out.z = z.cancelled();
    out.parity = a.parity;
    return out;
}

bool check_functional_equation(const RationalFn& z, int parity) {
    return rf_equal(invert_variables(z), parity % 2 ? -z : z);
}

// descendent data

QuasiPoly QuasiFunctional::operator()(const std::vector<Descendent>& in_m, const CohRing& R) const {
    QuasiPoly out(1, 1);
    for (size_t e = 0; e < in_m.size(); ++e) {
        QuasiPoly acc(1, 1);
        for (const auto& [m, c] : in_m[e].terms()) {
            bool killed = degree && mono_degree(m, R) != *degree;
            if (sheaf_supported)
                killed = killed || std::any_of(m.begin(), m.end(), [](char16_t g) { return gen_k(g) <= 1; });
            if (killed) continue;
            auto it = table.find(m);
            if (it == table.end()) throw Error("M data has no value on " + (m.empty() ? std::string("1") : mono_str(m, R)));
            acc = qp_add(acc, qp_scaled(it->second, c));
        }
        if (qp_is_zero(acc)) continue;
        // (n/2)^e
        std::vector<Rat> ne(e + 1);
        ne[e] = power(Rat(1, 2), static_cast<long>(e));
        out = qp_add(out, qp_mul(acc, QuasiPoly::univariate(1, {ne})));
    }
    return out;
}

void QuasiFunctional::validate(const CohRing& R) const {
    for (const auto& [m, f] : table) {
        if (f.arity() != 1) throw Error("M data must be univariate in n = 2m");
        for (char16_t g : m)
            if (gen_cls(g) >= R.size()) throw Error("unknown basis class in M data");
        if (!symmetric || qp_is_zero(f)) continue;
        Parity want = mono_parity(m) ? Parity::odd : Parity::even;
        if (qp_parity(f) != want)
            throw Error("M value on " + mono_str(m, R) + " is not " + parity_name(want) + " in m");
    }
}

int descendent_parity(const Descendent& D) {
    int p = -1;
    for (const auto& [m, c] : D.terms()) {
        int q = mono_parity(m);
        if (p >= 0 && q != p) throw Error("descendent mixes even and odd monomials");
        p = q;
    }
    return std::max(p, 0);
}

namespace {

void check_l_symmetry(const Exp& b, const std::map<int, Functional>& tab, const CohRing& R) {
    for (const auto& [n0, F] : tab) {
        auto it = tab.find(-n0);
        for (const auto& [m, v] : F.table) {
            Rat want = mono_parity(m) ? Rat(-v) : v;
            Rat have = 0;
            if (it != tab.end()) {
                auto jt = it->second.table.find(m);
                if (jt == it->second.table.end())
                    throw Error("L data for " + class_str(b) + " lacks " + mono_str(m, R) + " at m = " + to_string(ratio(-n0, 2)));
                have = jt->second;
            }
            if (have != want) throw Error("L data for " + class_str(b) + " breaks the duality symmetry at " + mono_str(m, R));
        }
    }
}

}  // namespace

Assembly build_assembly(const WCInput& in, const CohRing& R) {
    const CurveLattice& lat = in.lattice;
    lat.validate();
    if (static_cast<int>(lat.curves.size()) != lat.rank()) throw Error("curve lattice needs cohomology classes of its basis");
    for (const auto& c : lat.curves)
        if (static_cast<int>(c.size()) != R.size()) throw Error("curve class has the wrong length");
    for (const auto& [b, M] : in.M) M.validate(R);
    for (const auto& [b, tab] : in.L) {
        if (!lat.effective(b)) throw Error("L data for a non-effective class " + class_str(b));
        for (const auto& [n0, F] : tab)
            if ((n0 - lat.d(b)) % 2)
                throw Error("L data for " + class_str(b) + " at m = " + to_string(ratio(n0, 2)) +
                            " violates m - d/2 integral");
        if (in.l_symmetric) check_l_symmetry(b, tab, R);
    }

    Assembly out{lat, in.beta, descendent_parity(in.D), {}};
    ThetaClasses theta(R);
    std::map<std::pair<int, Mono>, TensorDescendent> delta_memo;
    std::map<std::pair<Exp, Mono>, QuasiPoly> m_memo;
    std::map<std::pair<Exp, Mono>, std::map<int, Rat>> l_memo;

    std::map<int, Functional> default_l00;
    default_l00.emplace(0, point_functional(R));

    for (const Partition& P : partitions(lat, in.beta)) {
        const int k = P.k();
        const std::map<int, Functional>* ltab = nullptr;
        if (auto it = in.L.find(P.beta0); it != in.L.end())
            ltab = &it->second;
        else if (is_zero(P.beta0))
            ltab = &default_l00;
        else
            throw Error("missing L data for class " + class_str(P.beta0));
        for (const Exp& b : P.parts)
            if (!in.M.count(b)) throw Error("missing M data for class " + class_str(b));

        // slots [D_k, ..., D_1, D_0]; the outermost bracket splits first
        std::map<std::vector<Mono>, Rat> cur;
        for (const auto& [m, c] : in.D.terms()) cur[{m}] += c;
        for (int j = k - 1; j >= 0; --j) {
            const int s = -static_cast<int>(lat.d(P.parts[j]));
            std::map<std::vector<Mono>, Rat> next;
            for (const auto& [tuple, c] : cur) {
                auto key = std::make_pair(s, tuple.back());
                auto it = delta_memo.find(key);
                if (it == delta_memo.end()) it = delta_memo.emplace(key, delta_s(s, Descendent::mono(tuple.back()), theta)).first;
                for (const auto& [lr, c2] : it->second.terms()) {
                    std::vector<Mono> t = tuple;
                    t.back() = lr.first;
                    t.push_back(lr.second);
                    Rat& v = next[t];
                    v += c * c2;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            cur = std::move(next);
        }

        const CohClass curve0 = lat.curve(P.beta0, R);
        PartitionSplit split{P, {}};
        for (const auto& [tuple, c] : cur) {
            const Mono& d0 = tuple.back();
            auto lkey = std::make_pair(P.beta0, d0);
            auto lit = l_memo.find(lkey);
            if (lit == l_memo.end()) {
                std::map<int, Rat> vals;
                for (const auto& [n0, F] : *ltab) {
                    Functional G = F;
                    G.alpha = chern_char(R, -1, R.zero(), curve0, ratio(n0, 2));
                    Rat v = G(reduce_mod_alpha(Descendent::mono(d0), G.alpha, R), R);
                    if (v != 0) vals[n0] = v;
                }
                lit = l_memo.emplace(lkey, std::move(vals)).first;
            }
            if (lit->second.empty()) continue;

            SplitTerm t;
            bool zero = false;
            for (int j = 1; j <= k && !zero; ++j) {
                const Exp& bj = P.parts[j - 1];
                const Mono& dj = tuple[k - j];
                auto mkey = std::make_pair(bj, dj);
                auto mit = m_memo.find(mkey);
                if (mit == m_memo.end()) {
                    CohClass alpha = chern_char(R, 0, R.zero(), lat.curve(bj, R), 0);
                    QuasiPoly g = in.M.at(bj)(reduce_mod_alpha_in_m(Descendent::mono(dj), alpha, R), R);
                    if (!supported_on(g, lat.d(bj)))
                        throw Error("M data for " + class_str(bj) + " is nonzero at some m with m - d/2 not integral");
                    mit = m_memo.emplace(mkey, qp_mul(half_integer_sign(static_cast<int>(lat.d(bj))), g)).first;
                }
                if (qp_is_zero(mit->second)) zero = true;
                t.f.push_back(mit->second);
            }
            if (zero) continue;
            for (const auto& [n0, v] : lit->second) t.l[n0] = c * v;
            split.terms.push_back(std::move(t));
        }
        out.splits.push_back(std::move(split));
    }
    return out;
}

// poles

std::vector<int> minus_q_orders(const RationalFn& z) {
    if (z.nvars() != 1) throw Error("pole analysis needs a univariate function");
    std::vector<int> out;
    for (const Pole& p : poles(z)) {
        // u = exp(-2 pi i a), so -q = exp(2 pi i (1/2 - 2a))
        Rat x = frac(Rat(1, 2) - 2 * p.angle);
        out.push_back(static_cast<int>(x.get_den().get_si()));
    }
    return out;
}

bool poles_within(const RationalFn& z, const CurveLattice& lat, const Exp& beta) {
    std::vector<long> allowed;
    for (const Exp& b : box(beta))
        if (!is_zero(b)) allowed.push_back(lat.h_degree(b));
    for (int o : minus_q_orders(z))
        if (std::none_of(allowed.begin(), allowed.end(), [o](long N) { return N % o == 0; })) return false;
    return true;
}

}  // namespace cw
