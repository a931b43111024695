#include "conewall/conegen.hpp"

#include <functional>
#include <set>

namespace cw {

void WeightedConeProblem::validate() const {
    const int k = cone.dim();
    if (weight.dim() != k) throw Error("weight dimension differs from cone dimension");
    if (qp && qp->arity() != k) throw Error("quasi-polynomial arity differs from cone dimension");
    if (specialization && static_cast<int>(specialization->size()) != k)
        throw Error("specialization length differs from cone dimension");
}

RationalFn weighted_series(const SimplicialCone& c, const FaceWeight& w) {
    if (w.dim() != c.dim()) throw Error("weight dimension differs from cone dimension");
    RationalFn out(c.dim());
    for (auto f : face_lattice(c)) {
        if (w[f.mask] == 0) continue;
        out += face_interior_series(c, f).scaled(CycNum(w[f.mask]));
    }
    return out;
}

namespace {

class ThetaTable {
public:
    ThetaTable(RationalFn z, int k) { d_.emplace(Exp(k, 0), std::move(z)); }

    const RationalFn& operator()(const Exp& a) {
        if (auto it = d_.find(a); it != d_.end()) return it->second;
        int i = 0;
        while (a[i] == 0) ++i;
        Exp lower = a;
        --lower[i];
        RationalFn d = theta_derivative((*this)(lower), i);
        return d_.emplace(a, std::move(d)).first->second;
    }

private:
    std::map<Exp, RationalFn> d_;
};

}  // namespace

RationalFn weighted_qp_series_by_terms(const SimplicialCone& c, const FaceWeight& w, const QuasiPoly& f) {
    const int k = c.dim();
    if (f.arity() != k) throw Error("quasi-polynomial arity differs from cone dimension");
    ThetaTable theta(weighted_series(c, w), k);
    std::map<Exp, std::vector<const QPTerm*>> groups;
    auto terms = qp_termize(f);
    for (const auto& t : terms) groups[t.b].push_back(&t);

    RationalFn out(k);
    for (const auto& [b, ts] : groups) {
        RationalFn g(k);
        for (const QPTerm* t : ts) g += theta(t->a).scaled(t->coeff);
        for (int i = 0; i < k; ++i)
            if (b[i] != 0) g = root_substitute(g, i, ratio(b[i], f.period()));
        out += g;
    }
    return out;
}

RationalFn weighted_qp_series(const SimplicialCone& c, const FaceWeight& w, const QuasiPoly& f) {
    const int k = c.dim();
    const int N = f.period();
    if (f.arity() != k) throw Error("quasi-polynomial arity differs from cone dimension");
    ThetaTable theta(weighted_series(c, w), k);
    auto terms = qp_termize(f);
    std::set<Exp> powers;
    for (const auto& t : terms) powers.insert(t.a);
    if (powers.empty()) return RationalFn(k);

    // Every theta^a Z is lifted to a denominator prod (1 - x^{N_b b})^m that the
    // substitutions x -> zeta^beta x leave unchanged, N_b being the order of the twists
    // seen by direction b. The substitution then only rescales numerator terms, and
    // summing over the characters of a fixed power a returns the class coefficient.
    RationalFn::Denominator common;
    for (const auto& a : powers)
        for (const auto& [fac, m] : theta(a).denominator()) common[fac] = std::max(common[fac], m);
    std::map<Factor, int> order;
    LaurentPoly cofactor = LaurentPoly::constant(k, 1);
    for (const auto& [fac, m] : common) {
        long Nb = 1;
        for (const auto& t : terms) {
            long phase = ((dot(t.b, fac.b) % N) + N) % N;
            Nb = lcm(Nb, N / gcd(N, phase));
        }
        order[fac] = static_cast<int>(Nb);
        LaurentPoly geo(k);
        for (int j = 0; j < Nb; ++j) geo.add_term(exp_scale(fac.b, j), 1);
        for (int i = 0; i < m; ++i) cofactor = cofactor * geo;
    }

    std::map<Exp, Rat> num;
    for (const auto& a : powers) {
        const RationalFn& ta = theta(a);
        LaurentPoly q = ta.numerator();
        for (const auto& [fac, m] : common) {
            auto it = ta.denominator().find(fac);
            int have = it == ta.denominator().end() ? 0 : it->second;
            if (m > have) q = q * LaurentPoly::binomial_power(fac.b, CycNum(1), m - have);
        }
        q = q * cofactor;
        for (const auto& [e, v] : q.terms()) {
            auto cls = f.cls(e).find(a);
            if (cls == f.cls(e).end()) continue;
            num[e] += v.rational() * cls->second;
        }
    }
    LaurentPoly out(k);
    for (const auto& [e, v] : num) out.add_term(e, v);
    RationalFn r(out);
    if (r.is_zero()) return r;
    for (const auto& [fac, m] : common) r.divide_by(exp_scale(fac.b, order[fac]), 0, m);
    return r;
}

RationalFn weighted_qp_series(const WeightedConeProblem& p) {
    p.validate();
    if (!p.qp) return weighted_series(p.cone, p.weight);
    return weighted_qp_series(p.cone, p.weight, *p.qp);
}

Exp expansion_grading(const SimplicialCone& c) {
    Exp ones(c.dim(), 1);
    for (const auto& v : c.generators())
        if (dot(ones, v) <= 0) return c.positive_grading();
    return ones;
}

LaurentSeries brute_force_series(const WeightedConeProblem& p, int order) {
    p.validate();
    if (order > max_brute_order) throw Error("brute force order above " + std::to_string(max_brute_order));
    const SimplicialCone& c = p.cone;
    const int k = c.dim();
    const Exp g = p.specialization ? *p.specialization : expansion_grading(c);
    for (const auto& v : c.generators())
        if (dot(g, v) <= 0) throw Error("grading must be positive on every generator for a finite count");

    // n = sum t_i v_i with t_i >= 0 and sum t_i <g,v_i> <= order bounds every coordinate
    Exp lo(k, 0), hi(k, 0);
    for (int j = 0; j < k; ++j)
        for (const auto& v : c.generators()) {
            long gv = dot(g, v);
            long q = static_cast<long>(order) * v[j];
            if (q > 0) hi[j] = std::max<long>(hi[j], q / gv);
            if (q < 0) lo[j] = std::min<long>(lo[j], -((-q) / gv));
        }
    std::vector<long> rest(k + 1, 0);
    for (int j = k - 1; j >= 0; --j) rest[j] = rest[j + 1] + std::min<long>(long(g[j]) * lo[j], long(g[j]) * hi[j]);

    LaurentSeries out(p.specialization ? 1 : k, order, p.specialization ? Exp{1} : g);
    Exp n(k, 0);
    std::function<void(int, long)> walk = [&](int j, long partial) {
        if (j == k) {
            auto face = relint_membership(c, n);
            if (!face) return;
            Rat v = p.weight[face->mask];
            if (v == 0) return;
            if (p.qp) v *= qp_eval(*p.qp, n);
            out.add(p.specialization ? Exp{static_cast<int>(partial)} : n, CycNum(v));
            return;
        }
        for (int x = lo[j]; x <= hi[j]; ++x) {
            long s = partial + long(g[j]) * x;
            if (s + rest[j + 1] > order) continue;
            n[j] = x;
            walk(j + 1, s);
        }
    };
    walk(0, 0);
    return out;
}

ReciprocityReport check_reciprocity(const WeightedConeProblem& p) { return check_reciprocity(p, dual_weight(p.weight)); }

ReciprocityReport check_reciprocity(const WeightedConeProblem& p, const FaceWeight& dual) {
    p.validate();
    if (dual.dim() != p.weight.dim()) throw Error("dual weight dimension differs from the weight");
    ReciprocityReport r;
    if (p.qp) {
        r.lhs = invert_variables(weighted_qp_series(p.cone, p.weight, *p.qp));
        r.rhs = weighted_qp_series(p.cone, dual, qp_dual(*p.qp));
    } else {
        r.lhs = invert_variables(weighted_series(p.cone, p.weight));
        r.rhs = weighted_series(p.cone, dual);
    }
    r.pass = rf_equal(r.lhs, r.rhs);
    return r;
}

SymmetryReport check_chain_symmetry(const std::vector<int>& r, const FaceWeight& w, const std::vector<QuasiPoly>& factors) {
    const int k = static_cast<int>(r.size());
    if (static_cast<int>(factors.size()) != k) throw Error("need one quasi-polynomial factor per chain coordinate");
    if (dual_weight(w) != scaled(w, k % 2 ? -1 : 1)) throw Error("weight is not self-dual");
    SymmetryReport rep;
    for (const auto& f : factors) {
        if (f.arity() != 1) throw Error("chain factors must be univariate");
        Parity par = qp_parity(f);
        if (par == Parity::neither) throw Error("chain factor is neither even nor odd");
        rep.even_factors += par == Parity::even;
    }
    rep.z = specialize(weighted_qp_series(chain_cone(r), w, QuasiPoly::product(factors)), Exp(k, 1));
    RationalFn expect = rep.even_factors % 2 ? -rep.z : rep.z;
    rep.pass = rf_equal(invert_variables(rep.z), expect);
    return rep;
}

std::vector<PoleEntry> pole_report(const RationalFn& f) {
    if (f.nvars() != 1) throw Error("pole report needs a univariate function");
    std::vector<PoleEntry> out;
    RationalFn g = f.cancelled();
    if (g.is_zero()) return out;
    for (const auto& [fac, mult] : g.denominator()) out.push_back(PoleEntry{fac.b[0], fac.angle, mult});
    return out;
}

}  // namespace cw
