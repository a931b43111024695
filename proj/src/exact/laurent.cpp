#include "conewall/laurent.hpp"

#include <sstream>

namespace cw {

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exp exp_scale(const Exp& a, int s) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

long dot(const Exp& a, const Exp& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

LaurentPoly LaurentPoly::constant(int nvars, const CycNum& c) {
    LaurentPoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const CycNum& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

CycNum LaurentPoly::coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? CycNum(0) : it->second;
}

void LaurentPoly::add_term(const Exp& e, const CycNum& c) {
    if (static_cast<int>(e.size()) != k_) throw Error("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.k_ != k_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.k_ != k_) throw Error("variable count mismatch");
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.k_ != b.k_) throw Error("variable count mismatch");
    LaurentPoly r(a.k_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const CycNum& c) const {
    LaurentPoly r(k_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
    LaurentPoly r(k_);
    for (const auto& [e, v] : t_) r.t_.emplace(exp_add(e, s), v);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.k_ != b.k_ || a.t_.size() != b.t_.size()) return false;
    auto ib = b.t_.begin();
    for (auto ia = a.t_.begin(); ia != a.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

LaurentPoly LaurentPoly::binomial_power(const Exp& b, const CycNum& c, int e) {
    const int k = static_cast<int>(b.size());
    LaurentPoly r(k);
    CycNum mc = -c, pw = 1;
    for (int i = 0; i <= e; ++i) {
        r.add_term(exp_scale(b, i), pw * CycNum(binomial(e, i)));
        pw *= mc;
    }
    return r;
}

bool LaurentPoly::divide_binomial(const Exp& b, const CycNum& c, LaurentPoly& quotient) const {
    size_t j = 0;
    while (j < b.size() && b[j] == 0) ++j;
    if (j == b.size()) throw Error("binomial with zero exponent");
    if (b[j] < 0) {
        // 1 - c x^b = -c x^b (1 - c^{-1} x^{-b})
        CycNum ci = c.inverse();
        LaurentPoly q(k_);
        if (!divide_binomial(exp_scale(b, -1), ci, q)) return false;
        quotient = q.shifted(exp_scale(b, -1)).scaled(-ci);
        return true;
    }
    // group monomials along lines base + t*b
    std::map<Exp, std::map<long, CycNum>> lines;
    for (const auto& [e, v] : t_) {
        long t = e[j] >= 0 ? e[j] / b[j] : -((-e[j] + b[j] - 1) / b[j]);
        Exp base = exp_sub(e, exp_scale(b, static_cast<int>(t)));
        lines[base].emplace(t, v);
    }
    LaurentPoly q(k_);
    for (const auto& [base, pts] : lines) {
        long tmin = pts.begin()->first, tmax = pts.rbegin()->first;
        CycNum prev = 0;
        for (long t = tmin; t <= tmax; ++t) {
            auto it = pts.find(t);
            CycNum cur = c * prev;
            if (it != pts.end()) cur += it->second;
            if (t == tmax) {
                if (!cur.is_zero()) return false;
                break;
            }
            q.add_term(exp_add(base, exp_scale(b, static_cast<int>(t))), cur);
            prev = cur;
        }
    }
    quotient = std::move(q);
    return true;
}

std::vector<std::string> default_var_names(int k) {
    if (k == 1) return {"q"};
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : t_) {
        std::string mono;
        for (int i = 0; i < k_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = v.str();
        bool neg = !coef.empty() && coef[0] == '-';
        if (neg) coef.erase(0, 1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (mono.empty()) os << coef;
        else if (coef == "1") os << mono;
        else os << coef << "*" << mono;
    }
    return os.str();
}

}  // namespace cw
