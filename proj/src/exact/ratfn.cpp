#include "conewall/ratfn.hpp"

#include <numeric>
#include <tuple>

namespace cw {

namespace {

LaurentPoly factor_power(const Factor& f, int e) {
    return LaurentPoly::binomial_power(f.b, f.constant(), e);
}

// numerator of this function once written over the larger denominator `target`
LaurentPoly lifted_numerator(const LaurentPoly& num, const RationalFn::Denominator& den,
                             const RationalFn::Denominator& target) {
    LaurentPoly out = num;
    for (const auto& [f, m] : target) {
        auto it = den.find(f);
        int have = it == den.end() ? 0 : it->second;
        if (m > have) out = out * factor_power(f, m - have);
    }
    return out;
}

RationalFn::Denominator merged(const RationalFn::Denominator& a, const RationalFn::Denominator& b) {
    RationalFn::Denominator m = a;
    for (const auto& [f, e] : b) {
        int& slot = m[f];
        slot = std::max(slot, e);
    }
    return m;
}

std::string factor_str(const Factor& f, const std::vector<std::string>& names) {
    LaurentPoly mono = LaurentPoly::monomial(f.b);
    std::string x = mono.str(names);
    if (f.angle == 0) return "(1 - " + x + ")";
    if (f.angle == Rat(1, 2)) return "(1 + " + x + ")";
    return "(1 - e(" + to_string(f.angle) + ")*" + x + ")";
}

std::vector<std::string> names_or_default(const std::vector<std::string>& names, int k) {
    return names.empty() ? default_var_names(k) : names;
}

}  // namespace

CycNum LaurentSeries::coeff(const Exp& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? CycNum(0) : it->second;
}

void LaurentSeries::add(const Exp& e, const CycNum& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.emplace(e, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.c_.size() != b.c_.size()) return false;
    auto ib = b.c_.begin();
    for (auto ia = a.c_.begin(); ia != a.c_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

RationalFn RationalFn::constant(int nvars, const CycNum& c) {
    return RationalFn(LaurentPoly::constant(nvars, c));
}

RationalFn RationalFn::monomial(const Exp& e, const CycNum& c) {
    return RationalFn(LaurentPoly::monomial(e, c));
}

RationalFn RationalFn::geometric(const Exp& b, const Rat& angle, int mult) {
    RationalFn r = constant(static_cast<int>(b.size()), 1);
    r.divide_by(b, angle, mult);
    return r;
}

void RationalFn::divide_by(const Exp& b, const Rat& angle, int mult) {
    if (mult == 0) return;
    if (mult < 0) throw Error("negative factor multiplicity");
    size_t j = 0;
    while (j < b.size() && b[j] == 0) ++j;
    if (j == b.size()) {
        CycNum c = 1 - CycNum::root(angle);
        if (c.is_zero()) throw Error("division by the zero factor (1 - 1)");
        CycNum inv = c.inverse(), s = 1;
        for (int i = 0; i < mult; ++i) s *= inv;
        num_ = num_.scaled(s);
        return;
    }
    Exp bb = b;
    Rat a = frac(angle);
    if (b[j] < 0) {
        // 1/(1 - c x^b) = (-c^{-1} x^{-b}) / (1 - c^{-1} x^{-b})
        bb = exp_scale(b, -1);
        a = frac(-angle);
        CycNum s = -CycNum::root(a), pw = 1;
        for (int i = 0; i < mult; ++i) pw *= s;
        num_ = num_.shifted(exp_scale(bb, mult)).scaled(pw);
    }
    den_[Factor{a, bb}] += mult;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.nvars() != nvars()) throw Error("variable count mismatch");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    Denominator m = merged(den_, o.den_);
    num_ = lifted_numerator(num_, den_, m) + lifted_numerator(o.num_, o.den_, m);
    den_ = std::move(m);
    if (num_.is_zero()) den_.clear();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (o.nvars() != nvars()) throw Error("variable count mismatch");
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [f, e] : o.den_) den_[f] += e;
    return *this;
}

RationalFn RationalFn::scaled(const CycNum& c) const {
    RationalFn r = *this;
    r.num_ = num_.scaled(c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFn RationalFn::cancelled() const {
    RationalFn r = *this;
    for (auto it = r.den_.begin(); it != r.den_.end();) {
        CycNum c = it->first.constant();
        while (it->second > 0) {
            LaurentPoly q(nvars());
            if (!r.num_.divide_binomial(it->first.b, c, q)) break;
            r.num_ = std::move(q);
            --it->second;
        }
        it = it->second == 0 ? r.den_.erase(it) : std::next(it);
    }
    return r;
}

RationalFn RationalFn::linear_cancelled() const {
    if (nvars() != 1) throw Error("linear factor cancellation needs a univariate function");
    RationalFn r(num_);
    for (const auto& [f, e] : den_) {
        const int n = f.b[0];
        for (int j = 0; j < n; ++j) r.den_[Factor{frac((f.angle + j) / Rat(n)), Exp{1}}] += e;
    }
    return r.cancelled();
}

RationalFn RationalFn::reduced() const {
    RationalFn r = cancelled();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [f, e] : r.den_) {
            long g = 0;
            for (int x : f.b) g = gcd(g, std::abs(x));
            const int conductor = f.constant().conductor();
            for (long p = 2; p <= g && !changed; ++p) {
                if (g % p) continue;
                bool prime = true;
                for (long d = 2; d * d <= p; ++d) prime = prime && p % d;
                if (!prime) continue;
                // 1 - c x^b = prod_j (1 - c_j x^{b/p}) with c_j^p = c
                RationalFn t = r;
                t.den_.erase(f);
                for (long j = 0; j < p; ++j) {
                    Exp b = f.b;
                    for (int& x : b) x = static_cast<int>(x / p);
                    t.den_[Factor{frac((f.angle + Rat(j)) / Rat(p)), b}] += e;
                }
                t = t.cancelled();
                long before = 0, after = 0;
                auto size = [](const Factor& h) {
                    long n = 0;
                    for (int x : h.b) n += std::abs(x);
                    return n;
                };
                for (const auto& [h, m] : r.den_) before += m * size(h);
                bool plain = true;
                for (const auto& [h, m] : t.den_) {
                    after += m * size(h);
                    plain = plain && conductor % h.constant().conductor() == 0;
                }
                if (after < before && plain) {
                    r = std::move(t);
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    return r;
}

std::string RationalFn::numerator_str(const std::vector<std::string>& names) const {
    return num_.str(names_or_default(names, nvars()));
}

std::vector<std::string> RationalFn::denominator_strs(const std::vector<std::string>& names) const {
    auto nm = names_or_default(names, nvars());
    std::vector<std::string> out;
    for (const auto& [f, e] : den_) out.push_back(factor_str(f, nm) + (e > 1 ? "^" + std::to_string(e) : ""));
    return out;
}

std::string RationalFn::str(const std::vector<std::string>& names) const {
    std::string n = "(" + numerator_str(names) + ")";
    if (den_.empty()) return n;
    std::string d;
    for (const auto& s : denominator_strs(names)) d += (d.empty() ? "" : "*") + s;
    return n + "/(" + d + ")";
}

bool rf_equal(const RationalFn& a, const RationalFn& b) {
    if (a.nvars() != b.nvars()) throw Error("rf_equal: variable count mismatch");
    auto m = merged(a.den_, b.den_);
    return lifted_numerator(a.num_, a.den_, m) == lifted_numerator(b.num_, b.den_, m);
}

LaurentSeries series_expand(const RationalFn& f, int order, Exp grading) {
    const int k = f.nvars();
    const bool chosen = !grading.empty();
    if (!chosen) grading.assign(k, 1);
    if (static_cast<int>(grading.size()) != k) throw Error("grading length does not match variable count");
    // with an explicit grading a factor pointing the wrong way is rewritten as
    // 1/(1 - c x^b) = -c^{-1} x^{-b} / (1 - c^{-1} x^{-b})
    LaurentPoly num = f.numerator();
    std::vector<std::tuple<CycNum, Exp, int>> factors;
    for (const auto& [fac, mult] : f.denominator()) {
        long gb = dot(grading, fac.b);
        if (gb == 0 || (gb < 0 && !chosen))
            throw Error("series_expand: factor direction not positive for the expansion grading");
        if (gb > 0) {
            factors.emplace_back(fac.constant(), fac.b, mult);
            continue;
        }
        CycNum inv = CycNum::root(frac(-fac.angle));
        CycNum pw = 1;
        for (int i = 0; i < mult; ++i) pw *= -inv;
        num = num.shifted(exp_scale(fac.b, -mult)).scaled(pw);
        factors.emplace_back(inv, exp_scale(fac.b, -1), mult);
    }
    std::map<std::pair<long, Exp>, CycNum> s;
    for (const auto& [e, c] : num.terms()) {
        long g = dot(grading, e);
        if (g <= order) s.emplace(std::make_pair(g, e), c);
    }
    for (const auto& [c, b, mult] : factors) {
        const long step = dot(grading, b);
        for (int m = 0; m < mult; ++m) {
            for (auto it = s.begin(); it != s.end(); ++it) {
                long g = it->first.first + step;
                if (g > order) continue;
                if (it->second.is_zero()) continue;
                CycNum add = c * it->second;
                auto key = std::make_pair(g, exp_add(it->first.second, b));
                auto [jt, fresh] = s.emplace(key, add);
                if (!fresh) jt->second += add;
            }
        }
    }
    LaurentSeries out(k, order, grading);
    for (const auto& [key, c] : s) out.add(key.second, c);
    return out;
}

RationalFn invert_variables(const RationalFn& f) {
    const int k = f.nvars();
    LaurentPoly num(k);
    for (const auto& [e, c] : f.num_.terms()) num.add_term(exp_scale(e, -1), c);
    RationalFn r(num);
    for (const auto& [fac, e] : f.den_) {
        // 1/(1 - c x^{-b}) = (-c^{-1} x^b) / (1 - c^{-1} x^b)
        Rat a = frac(-fac.angle);
        CycNum s = -CycNum::root(a), pw = 1;
        for (int i = 0; i < e; ++i) pw *= s;
        r.num_ = r.num_.shifted(exp_scale(fac.b, e)).scaled(pw);
        r.den_[Factor{a, fac.b}] += e;
    }
    return r;
}

RationalFn theta_derivative(const RationalFn& f, int i) {
    const int k = f.nvars();
    if (i < 0 || i >= k) throw Error("theta_derivative: variable index out of range");
    LaurentPoly dnum(k);
    for (const auto& [e, c] : f.num_.terms())
        if (e[i] != 0) dnum.add_term(e, c * CycNum(e[i]));
    std::vector<Factor> hit;
    for (const auto& [fac, e] : f.den_)
        if (fac.b[i] != 0) hit.push_back(fac);
    RationalFn r(k);
    if (hit.empty()) {
        r.num_ = dnum;
        r.den_ = f.den_;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }
    LaurentPoly all = LaurentPoly::constant(k, 1);
    for (const auto& fac : hit) all = all * factor_power(fac, 1);
    LaurentPoly num = dnum * all;
    for (size_t j = 0; j < hit.size(); ++j) {
        const Factor& fac = hit[j];
        LaurentPoly others = LaurentPoly::constant(k, 1);
        for (size_t l = 0; l < hit.size(); ++l)
            if (l != j) others = others * factor_power(hit[l], 1);
        CycNum coef = fac.constant() * CycNum(static_cast<long>(fac.b[i]) * f.den_.at(fac));
        num += (f.num_ * others).shifted(fac.b).scaled(coef);
    }
    r.num_ = std::move(num);
    r.den_ = f.den_;
    for (const auto& fac : hit) ++r.den_[fac];
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFn root_substitute(const RationalFn& f, int i, const Rat& angle) {
    const int k = f.nvars();
    if (i < 0 || i >= k) throw Error("root_substitute: variable index out of range");
    Rat a = frac(angle);
    if (a == 0) return f;
    LaurentPoly num(k);
    for (const auto& [e, c] : f.num_.terms()) num.add_term(e, c * CycNum::root(a * e[i]));
    RationalFn r(num);
    for (const auto& [fac, e] : f.den_) r.den_[Factor{frac(fac.angle + a * fac.b[i]), fac.b}] += e;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFn root_substitute(const RationalFn& f, int i, const CycNum& c) {
    return root_substitute(f, i, c.root_angle());
}

RationalFn specialize(const RationalFn& f, const Exp& w) {
    const int k = f.nvars();
    if (static_cast<int>(w.size()) != k) throw Error("specialize: weight length does not match variable count");
    LaurentPoly num = f.numerator();
    RationalFn::Denominator keep;
    CycNum scale = 1;
    for (const auto& [fac, mult] : f.denominator()) {
        if (dot(w, fac.b) != 0) {
            keep[fac] += mult;
            continue;
        }
        // split 1 - c x^{g b'} into g factors 1 - omega x^{b'}
        int g = 0;
        for (int v : fac.b) g = std::gcd(g, std::abs(v));
        Exp bp(fac.b.size());
        for (size_t j = 0; j < bp.size(); ++j) bp[j] = fac.b[j] / g;
        for (int j = 0; j < g; ++j) {
            Rat om = frac((fac.angle + j) / Rat(g));
            if (om != 0) {
                CycNum c = 1 - CycNum::root(om);
                for (int m = 0; m < mult; ++m) scale *= c;
                continue;
            }
            for (int m = 0; m < mult; ++m) {
                LaurentPoly q(k);
                if (!num.divide_binomial(bp, CycNum(1), q))
                    throw Error("specialize: collapsing denominator factor does not cancel");
                num = std::move(q);
            }
        }
    }
    LaurentPoly un(1);
    for (const auto& [e, c] : num.terms()) un.add_term(Exp{static_cast<int>(dot(w, e))}, c);
    RationalFn r(un.scaled(scale.inverse()));
    for (const auto& [fac, mult] : keep) r.divide_by(Exp{static_cast<int>(dot(w, fac.b))}, fac.angle, mult);
    if (r.is_zero()) return RationalFn(1);
    return r;
}

std::vector<Pole> poles(const RationalFn& f) {
    RationalFn g = f.linear_cancelled();
    std::vector<Pole> out;
    if (g.is_zero()) return out;
    for (const auto& [fac, e] : g.denominator())
        out.push_back(Pole{fac.angle, static_cast<int>(fac.angle.get_den().get_si()), e});
    return out;
}

}  // namespace cw
