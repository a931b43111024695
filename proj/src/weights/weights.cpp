#include "conewall/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cw {

FaceWeight::FaceWeight(int k, const Rat& fill) : k_(k) {
    if (k < 0 || k > 20) throw Error("face weight dimension out of range");
    v_.assign(size_t(1) << k, fill);
}

FaceWeight dual_weight(const FaceWeight& w) {
    const int k = w.dim();
    const unsigned full = (1u << k) - 1;
    FaceWeight out(k);
    for (unsigned s = 0; s <= full; ++s) {
        const unsigned rest = full & ~s;
        Rat acc = 0;
        // all T = s | sub with sub a subset of the complement
        for (unsigned sub = rest;; sub = (sub - 1) & rest) {
            unsigned t = s | sub;
            if (__builtin_popcount(t) % 2)
                acc -= w[t];
            else
                acc += w[t];
            if (sub == 0) break;
        }
        out[s] = acc;
    }
    return out;
}

FaceWeight scaled(const FaceWeight& w, const Rat& c) {
    FaceWeight out = w;
    for (unsigned s = 0; s < (1u << w.dim()); ++s) out[s] *= c;
    return out;
}

WeightKind parse_weight_kind(const std::string& name) {
    if (name == "standard") return WeightKind::standard;
    if (name == "half") return WeightKind::half;
    if (name == "harmonic") return WeightKind::harmonic;
    if (name == "ord") return WeightKind::ord;
    throw Error("unknown weight kind '" + name + "'");
}

std::string weight_kind_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::standard: return "standard";
        case WeightKind::half: return "half";
        case WeightKind::harmonic: return "harmonic";
        case WeightKind::ord: return "ord";
    }
    return "";
}

FaceWeight builtin_weight(WeightKind kind, int k) {
    if (k < 1) throw Error("weight dimension must be positive");
    FaceWeight w(k);
    for (unsigned s = 0; s < (1u << k); ++s) {
        const int codim = k - __builtin_popcount(s);
        switch (kind) {
            case WeightKind::standard: w[s] = 1; break;
            case WeightKind::half: w[s] = Rat(1) / power(Rat(2), codim); break;
            case WeightKind::harmonic: w[s] = ratio(1, codim + 1); break;
            case WeightKind::ord: {
                // blocks of consecutive indices outside s are chains of equalities
                Rat v = 1;
                int run = 0;
                for (int i = 0; i <= k; ++i) {
                    if (i < k && !((s >> i) & 1u)) {
                        ++run;
                        continue;
                    }
                    if (run) v /= factorial(run + 1);
                    run = 0;
                }
                w[s] = v;
                break;
            }
        }
    }
    return w;
}

Rat omega_ord(const std::vector<Rat>& mu) {
    Rat prev = 0;
    for (const auto& m : mu) {
        if (m < prev) throw Error("omega_ord: input must be nonnegative and nondecreasing");
        prev = m;
    }
    Rat v = 1;
    Rat cur = 0;
    long len = 1;
    for (const auto& m : mu) {
        if (m == cur) {
            ++len;
            continue;
        }
        v /= factorial(len);
        cur = m;
        len = 1;
    }
    return v / factorial(len);
}

Rat omega_ord_oracle(const std::vector<int>& I, int k) {
    if (k < 0 || k > 8) throw Error("omega_ord_oracle: k must be at most 8");
    for (int i : I)
        if (i < 1 || i > k) throw Error("omega_ord_oracle: index out of range");
    std::vector<int> s(k + 1);
    std::iota(s.begin(), s.end(), 1);
    long good = 0, total = 0;
    do {
        ++total;
        bool ok = true;
        for (int i : I) ok = ok && s[i - 1] < s[i];
        good += ok;
    } while (std::next_permutation(s.begin(), s.end()));
    return ratio(good, total);
}

Rat poly_eval(const Poly& p, const std::vector<Rat>& x) {
    Rat acc = 0;
    for (const auto& [e, c] : p) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) t *= power(x[i], e[i]);
        acc += t;
    }
    return acc;
}

QuasiPoly::QuasiPoly(int k, int period) : k_(k), N_(period) {
    if (k < 1) throw Error("quasi-polynomial arity must be positive");
    if (period < 1) throw Error("quasi-polynomial period must be positive");
    double size = std::pow(double(period), k);
    if (size > 1e6) throw Error("quasi-polynomial has too many residue classes");
    P_.assign(static_cast<size_t>(size), Poly{});
}

QuasiPoly QuasiPoly::constant(int k, const Rat& c) {
    QuasiPoly f(k, 1);
    if (c != 0) f.P_[0][Exp(k, 0)] = c;
    return f;
}

QuasiPoly QuasiPoly::univariate(int period, const std::vector<std::vector<Rat>>& classes) {
    if (static_cast<int>(classes.size()) != period) throw Error("quasi-polynomial needs one polynomial per residue class");
    QuasiPoly f(1, period);
    for (int a = 0; a < period; ++a)
        for (size_t d = 0; d < classes[a].size(); ++d)
            if (classes[a][d] != 0) f.P_[a][Exp{static_cast<int>(d)}] = classes[a][d];
    return f;
}

QuasiPoly QuasiPoly::product(const std::vector<QuasiPoly>& factors) {
    if (factors.empty()) throw Error("empty quasi-polynomial product");
    int k = 0;
    long N = 1;
    for (const auto& f : factors) {
        k += f.arity();
        N = lcm(N, f.period());
    }
    QuasiPoly out(k, static_cast<int>(N));
    for (size_t idx = 0; idx < out.P_.size(); ++idx) {
        Exp a = out.residue(idx);
        Poly acc{{Exp{}, Rat(1)}};
        int off = 0;
        for (const auto& f : factors) {
            Exp sub(a.begin() + off, a.begin() + off + f.arity());
            const Poly& p = f.cls(sub);
            Poly next;
            for (const auto& [e1, c1] : acc)
                for (const auto& [e2, c2] : p) {
                    Exp e = e1;
                    e.insert(e.end(), e2.begin(), e2.end());
                    next[e] += c1 * c2;
                }
            acc = std::move(next);
            off += f.arity();
        }
        for (auto& [e, c] : acc)
            if (c != 0) out.P_[idx][e] = c;
    }
    return out;
}

int QuasiPoly::degree() const {
    int d = -1;
    for (const auto& p : P_)
        for (const auto& [e, c] : p)
            if (c != 0) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Exp QuasiPoly::residue(size_t idx) const {
    Exp a(k_);
    for (int i = 0; i < k_; ++i) {
        a[i] = static_cast<int>(idx % N_);
        idx /= N_;
    }
    return a;
}

size_t QuasiPoly::index(const Exp& a) const {
    if (static_cast<int>(a.size()) != k_) throw Error("quasi-polynomial arity mismatch");
    size_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * N_ + ((a[i] % N_) + N_) % N_;
    return idx;
}

Rat qp_eval(const QuasiPoly& f, const Exp& n) {
    std::vector<Rat> x(n.begin(), n.end());
    return poly_eval(f.cls(n), x);
}

QuasiPoly qp_dual(const QuasiPoly& f) {
    QuasiPoly out(f.arity(), f.period());
    for (size_t idx = 0; idx < f.classes().size(); ++idx) {
        Exp a = exp_scale(f.residue(idx), -1);
        Poly& p = out.cls(a);
        for (const auto& [e, c] : f.classes()[idx]) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            p[e] = deg % 2 ? Rat(-c) : c;
        }
    }
    return out;
}

QuasiPoly qp_scaled(const QuasiPoly& f, const Rat& c) {
    QuasiPoly out(f.arity(), f.period());
    if (c == 0) return out;
    for (size_t idx = 0; idx < f.classes().size(); ++idx)
        for (const auto& [e, v] : f.classes()[idx]) out.cls(f.residue(idx))[e] = v * c;
    return out;
}

QuasiPoly qp_with_period(const QuasiPoly& f, int period) {
    if (period % f.period()) throw Error("new period must be a multiple of the old one");
    QuasiPoly out(f.arity(), period);
    for (size_t idx = 0; idx < out.classes().size(); ++idx) {
        Exp a = out.residue(idx);
        out.cls(a) = f.cls(a);
    }
    return out;
}

QuasiPoly qp_add(const QuasiPoly& f, const QuasiPoly& g) {
    if (f.arity() != g.arity()) throw Error("quasi-polynomial arity mismatch");
    const int N = static_cast<int>(lcm(f.period(), g.period()));
    QuasiPoly out = qp_with_period(f, N);
    for (size_t idx = 0; idx < out.classes().size(); ++idx) {
        Exp a = out.residue(idx);
        Poly& p = out.cls(a);
        for (const auto& [e, c] : g.cls(a)) {
            Rat& v = p[e];
            v += c;
            if (v == 0) p.erase(e);
        }
    }
    return out;
}

QuasiPoly qp_mul(const QuasiPoly& f, const QuasiPoly& g) {
    if (f.arity() != g.arity()) throw Error("quasi-polynomial arity mismatch");
    const int N = static_cast<int>(lcm(f.period(), g.period()));
    QuasiPoly out(f.arity(), N);
    for (size_t idx = 0; idx < out.classes().size(); ++idx) {
        Exp a = out.residue(idx);
        Poly& p = out.cls(a);
        for (const auto& [e1, c1] : f.cls(a))
            for (const auto& [e2, c2] : g.cls(a)) p[exp_add(e1, e2)] += c1 * c2;
        std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

bool qp_is_zero(const QuasiPoly& f) {
    return std::all_of(f.classes().begin(), f.classes().end(), [](const Poly& p) { return p.empty(); });
}

namespace {

bool same_function(const QuasiPoly& f, const QuasiPoly& g, const Rat& sign) {
    for (size_t idx = 0; idx < f.classes().size(); ++idx) {
        const Poly& p = f.classes()[idx];
        const Poly& q = g.cls(f.residue(idx));
        Poly diff = p;
        for (const auto& [e, c] : q) diff[e] -= sign * c;
        for (const auto& [e, c] : diff)
            if (c != 0) return false;
    }
    return true;
}

}  // namespace

Parity qp_parity(const QuasiPoly& f) {
    QuasiPoly d = qp_dual(f);
    if (same_function(f, d, 1)) return Parity::even;
    if (same_function(f, d, -1)) return Parity::odd;
    return Parity::neither;
}

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::neither: return "neither";
    }
    return "";
}

std::vector<QPTerm> qp_termize(const QuasiPoly& f) {
    const int k = f.arity(), N = f.period();
    const size_t size = f.classes().size();
    std::vector<CycNum> zeta(N);
    for (int j = 0; j < N; ++j) zeta[j] = CycNum::root(frac(ratio(-j, N)));

    // per monomial, the vector of coefficients over residue classes
    std::map<Exp, std::vector<CycNum>> table;
    for (size_t idx = 0; idx < size; ++idx)
        for (const auto& [e, c] : f.classes()[idx]) {
            auto& v = table.try_emplace(e, size, CycNum(0)).first->second;
            v[idx] = c;
        }

    // inverse DFT axis by axis: Q_b = N^{-k} sum_a zeta^{-<a,b>} P_a
    std::vector<QPTerm> out;
    const Rat scale = Rat(1) / power(Rat(N), k);
    for (auto& [e, v] : table) {
        size_t stride = 1;
        for (int axis = 0; axis < k; ++axis) {
            std::vector<CycNum> next(size, CycNum(0));
            for (size_t idx = 0; idx < size; ++idx) {
                const int a = static_cast<int>((idx / stride) % N);
                if (v[idx].is_zero()) continue;
                const size_t base = idx - a * stride;
                for (int b = 0; b < N; ++b) next[base + b * stride] += v[idx] * zeta[(a * b) % N];
            }
            v = std::move(next);
            stride *= N;
        }
        for (size_t idx = 0; idx < size; ++idx)
            if (!v[idx].is_zero()) out.push_back(QPTerm{v[idx] * CycNum(scale), e, f.residue(idx), N});
    }
    return out;
}

CycNum qp_term_eval(const QPTerm& t, const Exp& n) {
    Rat mono = 1;
    long phase = 0;
    for (size_t i = 0; i < n.size(); ++i) {
        mono *= power(Rat(n[i]), t.a[i]);
        phase += static_cast<long>(t.b[i]) * n[i];
    }
    phase = ((phase % t.N) + t.N) % t.N;
    return t.coeff * CycNum(mono) * CycNum::root(ratio(phase, t.N));
}

}  // namespace cw
