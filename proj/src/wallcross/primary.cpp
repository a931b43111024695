#include "conewall/wallcross.hpp"

#include <algorithm>
#include <numeric>

namespace cw {

NovikovSeries::NovikovSeries(Exp beta_max, int n_insertions, int t_max)
    : beta_max_(std::move(beta_max)), n_(n_insertions), t_max_(t_max) {
    if (n_ < 0 || t_max_ < 0) throw Error("negative truncation");
    if (std::any_of(beta_max_.begin(), beta_max_.end(), [](int b) { return b < 0; }))
        throw Error("class bound must be effective");
}

bool NovikovSeries::in_range(const Key& k) const {
    if (k.beta.size() != beta_max_.size() || static_cast<int>(k.t.size()) != n_) return false;
    for (size_t i = 0; i < k.beta.size(); ++i)
        if (k.beta[i] < 0 || k.beta[i] > beta_max_[i]) return false;
    if (std::any_of(k.t.begin(), k.t.end(), [](int e) { return e < 0; })) return false;
    return std::accumulate(k.t.begin(), k.t.end(), 0) <= t_max_;
}

RationalFn NovikovSeries::coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? RationalFn(1) : it->second;
}

void NovikovSeries::add(const Key& k, const RationalFn& c) {
    if (!in_range(k)) throw Error("term outside the truncation");
    if (c.nvars() != 1) throw Error("coefficients must be functions of q^{1/2}");
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

namespace {

void check_same(const NovikovSeries& a, const NovikovSeries& b) {
    if (a.beta_max() != b.beta_max() || a.n_insertions() != b.n_insertions() || a.t_max() != b.t_max())
        throw Error("series have different truncations");
}

}  // namespace

NovikovSeries NovikovSeries::operator*(const NovikovSeries& o) const {
    check_same(*this, o);
    NovikovSeries out(beta_max_, n_, t_max_);
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k{exp_add(ka.beta, kb.beta), exp_add(ka.t, kb.t)};
            if (in_range(k)) out.add(k, ca * cb);
        }
    for (auto& [k, c] : out.t_) c = c.cancelled();
    return out;
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& o) {
    check_same(*this, o);
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

NovikovSeries NovikovSeries::scaled(const RationalFn& c) const {
    NovikovSeries out(beta_max_, n_, t_max_);
    for (const auto& [k, v] : t_) out.add(k, (v * c).cancelled());
    return out;
}

RationalFn NovikovSeries::constant_term() const {
    return coeff(Key{Exp(beta_max_.size(), 0), Exp(n_, 0)});
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
    if (a.beta_max_ != b.beta_max_ || a.n_ != b.n_ || a.t_max_ != b.t_max_) return false;
    for (const auto& [k, c] : a.t_)
        if (!rf_equal(c, b.coeff(k))) return false;
    for (const auto& [k, c] : b.t_)
        if (!rf_equal(c, a.coeff(k))) return false;
    return true;
}

NovikovSeries novikov_exp(const NovikovSeries& x) {
    if (!x.constant_term().is_zero()) throw Error("exp needs a series without constant term");
    NovikovSeries out(x.beta_max(), x.n_insertions(), x.t_max());
    NovikovSeries::Key one{Exp(x.beta_max().size(), 0), Exp(x.n_insertions(), 0)};
    out.add(one, RationalFn::constant(1, 1));
    NovikovSeries p = out;
    for (int n = 1;; ++n) {
        p = (p * x).scaled(RationalFn::constant(1, ratio(1, n)));
        if (p.terms().empty()) break;
        out += p;
    }
    return out;
}

NovikovSeries connected_log(const NovikovSeries& z) {
    if (!rf_equal(z.constant_term(), RationalFn::constant(1, 1))) throw Error("log needs constant term 1");
    NovikovSeries x = z;
    NovikovSeries::Key one{Exp(z.beta_max().size(), 0), Exp(z.n_insertions(), 0)};
    x.add(one, RationalFn::constant(1, -1));
    NovikovSeries out(z.beta_max(), z.n_insertions(), z.t_max());
    NovikovSeries p = x;
    for (int n = 1; !p.terms().empty(); ++n) {
        out += p.scaled(RationalFn::constant(1, ratio(n % 2 ? 1 : -1, n)));
        p = p * x;
    }
    return out;
}

NovikovSeries primary_exp(const NovikovSeries& zm, const NovikovSeries& zl, const CurveLattice& lat) {
    check_same(zm, zl);
    lat.validate();
    if (static_cast<int>(zm.beta_max().size()) != lat.rank()) throw Error("series and lattice have different ranks");
    for (const auto& [k, c] : zm.terms()) {
        if (lat.d(k.beta) != 1) throw Error("M series carries a class with d_beta != 1");
        if (!c.is_polynomial() || c.numerator().size() > 1 || (!c.numerator().is_zero() && c.numerator().terms().begin()->first[0] != 0))
            throw Error("M series coefficients must be constants");
    }
    return novikov_exp(zm.scaled(inverse_s())) * zl;
}

RationalFn inverse_s() {
    return RationalFn::monomial(Exp{1}) * RationalFn::geometric(Exp{2}, Rat(1, 2));
}

RationalFn primary_tuple_series(int k) {
    if (k < 0) throw Error("negative tuple length");
    if (k == 0) return RationalFn::constant(1, 1);
    QuasiPoly sign = half_integer_sign(1);
    QuasiPoly f = k == 1 ? sign : QuasiPoly::product(std::vector<QuasiPoly>(k, sign));
    RationalFn z = weighted_qp_series(chain_cone(std::vector<int>(k, 2)), builtin_weight(WeightKind::ord, k), f);
    return specialize(z, Exp(k, 1)).cancelled();
}

RationalFn primary_tuple_closed_form(int k) {
    if (k < 0) throw Error("negative tuple length");
    RationalFn z = RationalFn::constant(1, Rat(1 / factorial(k)));
    for (int i = 0; i < k; ++i) z *= inverse_s();
    return z;
}

namespace {

// z * (u + 1/u)^e as a Laurent polynomial with rational coefficients, or nullopt
std::optional<std::map<int, Rat>> times_s_power(const RationalFn& z, int e) {
    RationalFn w = z;
    RationalFn s = RationalFn(LaurentPoly::monomial(Exp{1}) + LaurentPoly::monomial(Exp{-1}));
    for (int i = 0; i < e; ++i) w *= s;
    for (int i = 0; i < -e; ++i) w *= inverse_s();
    w = w.linear_cancelled();
    if (!w.is_polynomial()) return std::nullopt;
    std::map<int, Rat> out;
    for (const auto& [x, c] : w.numerator().terms()) {
        if (!c.is_rational()) return std::nullopt;
        out[x[0]] = c.rational();
    }
    return out;
}

}  // namespace

std::map<int, Rat> gv_extract(const RationalFn& z, int d_beta) {
    if (z.nvars() != 1) throw Error("expected a function of q^{1/2}");
    if (d_beta < 1) throw Error("d_beta must be positive");
    if (!rf_equal(invert_variables(z), z)) throw Error("series is not invariant under q -> 1/q");
    auto w = times_s_power(z, 2 - d_beta);
    if (!w) throw Error("series is not a Laurent polynomial in q^{1/2} + q^{-1/2} of the expected shape");
    std::map<int, Rat> out;
    std::map<int, Rat>& p = *w;
    while (!p.empty()) {
        auto [top, c] = *p.rbegin();
        if (top < 0 || top % 2) throw Error("no expansion with non-negative genus: leftover term u^" + std::to_string(top));
        const int g = top / 2;
        out[g] = c;
        for (int i = 0; i <= top; ++i) {
            Rat& v = p[top - 2 * i];
            v -= c * binomial(top, i);
            if (v == 0) p.erase(top - 2 * i);
        }
    }
    return out;
}

RationalityReport strong_rationality_check(const RationalFn& z, int d_beta) {
    if (z.nvars() != 1) throw Error("expected a function of q^{1/2}");
    if (d_beta < 1) throw Error("d_beta must be positive");
    RationalityReport r;
    r.poles = poles(z);
    if (d_beta > 1) {
        r.pass = r.poles.empty();
    } else {
        // q = -1 means u = +-i
        r.pass = std::all_of(r.poles.begin(), r.poles.end(), [](const Pole& p) {
            return p.mult == 1 && (p.angle == Rat(1, 4) || p.angle == Rat(3, 4));
        });
    }
    r.gv_divisible = times_s_power(z, 2 - d_beta).has_value();
    return r;
}

}  // namespace cw
