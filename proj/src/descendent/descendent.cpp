#include "conewall/descendent.hpp"

#include <algorithm>
#include <sstream>

namespace cw {

char16_t gen_code(int k, int cls) {
    if (k < 0 || k > 255 || cls < 0 || cls > 255) throw Error("generator ch_k needs 0 <= k < 256 and a basis class below 256");
    return static_cast<char16_t>(k << 8 | cls);
}

Mono make_mono(std::vector<Gen> gens) {
    std::sort(gens.begin(), gens.end());
    Mono m;
    for (const auto& g : gens) m.push_back(gen_code(g.k, g.cls));
    return m;
}

size_t MonoPairHash::operator()(const std::pair<Mono, Mono>& p) const {
    std::hash<Mono> h;
    return h(p.first) * 1000003u ^ h(p.second);
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int mono_degree(const Mono& m, const CohRing& R) {
    int d = 0;
    for (char16_t g : m) d += 2 * gen_k(g) + 2 * R.basis(gen_cls(g)).degree - 2 * R.dim();
    return d;
}

int mono_parity(const Mono& m) {
    int s = 0;
    for (char16_t g : m) s += gen_k(g);
    return s & 1;
}

// Descendent

Descendent Descendent::constant(const Rat& c) {
    Descendent d;
    d.add({}, c);
    return d;
}

Descendent Descendent::gen(int k, int cls) {
    return mono(Mono(1, gen_code(k, cls)));
}

Descendent Descendent::ch(int k, const CohClass& gamma) {
    Descendent d;
    if (k < 0) return d;
    for (int i = 0; i < static_cast<int>(gamma.size()); ++i)
        if (gamma[i] != 0) d.add(Mono(1, gen_code(k, i)), gamma[i]);
    return d;
}

Descendent Descendent::mono(const Mono& m, const Rat& c) {
    Descendent d;
    Mono s = m;
    std::sort(s.begin(), s.end());
    d.add(s, c);
    return d;
}

void Descendent::add(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

Rat Descendent::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

int Descendent::max_k() const {
    int k = -1;
    for (const auto& [m, c] : t_)
        for (char16_t g : m) k = std::max(k, gen_k(g));
    return k;
}

Descendent& Descendent::operator+=(const Descendent& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

Descendent& Descendent::operator-=(const Descendent& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

Descendent Descendent::operator*(const Descendent& o) const {
    Descendent out;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) out.add(mono_mul(a, b), ca * cb);
    return out;
}

Descendent Descendent::scaled(const Rat& c) const {
    Descendent out;
    if (c == 0) return out;
    out.t_ = t_;
    for (auto& [m, v] : out.t_) v *= c;
    return out;
}

// TensorDescendent

TensorDescendent TensorDescendent::one() {
    TensorDescendent t;
    t.add({}, {}, 1);
    return t;
}

TensorDescendent TensorDescendent::pure(const Descendent& left, const Descendent& right) {
    TensorDescendent t;
    for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) t.add(l, r, cl * cr);
    return t;
}

void TensorDescendent::add(const Mono& l, const Mono& r, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(Key{l, r}, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

TensorDescendent& TensorDescendent::operator+=(const TensorDescendent& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

void TensorDescendent::add_scaled(const TensorDescendent& o, const Rat& c) {
    if (c == 0) return;
    if (t_.empty()) t_.reserve(o.t_.size());
    Rat v;
    for (const auto& [k, x] : o.t_) {
        mpq_mul(v.get_mpq_t(), x.get_mpq_t(), c.get_mpq_t());
        auto [it, fresh] = t_.try_emplace(k, v);
        if (fresh) continue;
        it->second += v;
        if (it->second == 0) t_.erase(it);
    }
}

TensorDescendent TensorDescendent::operator*(const TensorDescendent& o) const {
    TensorDescendent out;
    out.t_.reserve(t_.size() * o.t_.size());
    Rat v;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) {
            mpq_mul(v.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            auto [it, fresh] = out.t_.try_emplace(Key{mono_mul(a.first, b.first), mono_mul(a.second, b.second)}, v);
            if (fresh) continue;
            it->second += v;
            if (it->second == 0) out.t_.erase(it);
        }
    return out;
}

TensorDescendent TensorDescendent::scaled(const Rat& c) const {
    TensorDescendent out;
    if (c == 0) return out;
    out.t_ = t_;
    for (auto& [m, v] : out.t_) v *= c;
    return out;
}

// printing

std::string mono_str(const Mono& m, const CohRing& R) {
    std::string s;
    for (char16_t g : m) {
        if (!s.empty()) s += "*";
        s += "ch" + std::to_string(gen_k(g)) + "(" + R.basis(gen_cls(g)).name + ")";
    }
    return s;
}

namespace {

void append_term(std::string& out, const Rat& c, const std::string& body) {
    Rat a = abs(c);
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (body.empty()) {
        out += to_string(a);
        return;
    }
    if (a != 1) out += to_string(a) + "*";
    out += body;
}

}  // namespace

std::string to_string(const Descendent& D, const CohRing& R) {
    std::map<Mono, Rat> sorted(D.terms().begin(), D.terms().end());
    std::string out;
    for (const auto& [m, c] : sorted) append_term(out, c, mono_str(m, R));
    return out.empty() ? "0" : out;
}

std::string to_string(const TensorDescendent& T, const CohRing& R) {
    std::map<TensorDescendent::Key, Rat> sorted(T.terms().begin(), T.terms().end());
    std::string out;
    for (const auto& [k, c] : sorted) {
        std::string l = k.first.empty() ? "1" : mono_str(k.first, R);
        std::string r = k.second.empty() ? "1" : mono_str(k.second, R);
        append_term(out, c, "[" + l + " | " + r + "]");
    }
    return out.empty() ? "0" : out;
}

// operators

namespace {

// scalar factor and surviving monomial, or nullopt if a generator vanishes
std::optional<std::pair<Rat, Mono>> reduce_mono(const Mono& m, const CohClass& alpha, const CohRing& R) {
    Rat c = 1;
    Mono rest;
    for (char16_t g : m) {
        int deg = 2 * gen_k(g) + 2 * R.basis(gen_cls(g)).degree - 2 * R.dim();
        if (deg < 0) return std::nullopt;
        if (deg == 0) {
            c *= R.integrate(R.mul(alpha, R.element(gen_cls(g))));
            if (c == 0) return std::nullopt;
        } else {
            rest.push_back(g);
        }
    }
    return std::make_pair(c, rest);
}

}  // namespace

Descendent reduce_mod_alpha(const Descendent& D, const CohClass& alpha, const CohRing& R) {
    if (static_cast<int>(alpha.size()) != R.size()) throw Error("Chern character has the wrong length");
    Descendent out;
    for (const auto& [m, c] : D.terms()) {
        for (char16_t g : m)
            if (gen_cls(g) >= R.size()) throw Error("unknown basis class in descendent");
        if (auto r = reduce_mono(m, alpha, R)) out.add(r->second, c * r->first);
    }
    return out;
}

std::vector<Descendent> reduce_mod_alpha_in_m(const Descendent& D, const CohClass& alpha, const CohRing& R) {
    if (static_cast<int>(alpha.size()) != R.size()) throw Error("Chern character has the wrong length");
    std::vector<Descendent> out;
    for (const auto& [m, c] : D.terms()) {
        std::vector<Rat> poly{c};
        Mono rest;
        for (char16_t g : m) {
            if (gen_cls(g) >= R.size()) throw Error("unknown basis class in descendent");
            int deg = 2 * gen_k(g) + 2 * R.basis(gen_cls(g)).degree - 2 * R.dim();
            if (deg < 0) {
                poly.clear();
                break;
            }
            if (deg > 0) {
                rest.push_back(g);
                continue;
            }
            // int (alpha + m pt) gamma
            Rat a = R.integrate(R.mul(alpha, R.element(gen_cls(g))));
            Rat b = R.integrate(R.mul(R.pt(), R.element(gen_cls(g))));
            std::vector<Rat> next(poly.size() + 1);
            for (size_t e = 0; e < poly.size(); ++e) {
                next[e] += poly[e] * a;
                next[e + 1] += poly[e] * b;
            }
            poly = std::move(next);
        }
        if (out.size() < poly.size()) out.resize(poly.size());
        for (size_t e = 0; e < poly.size(); ++e)
            if (poly[e] != 0) out[e].add(rest, poly[e]);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

TensorDescendent reduce_mod_alpha(const TensorDescendent& T, const CohClass& left, const CohClass& right, const CohRing& R) {
    if (static_cast<int>(left.size()) != R.size() || static_cast<int>(right.size()) != R.size())
        throw Error("Chern character has the wrong length");
    TensorDescendent out;
    for (const auto& [k, c] : T.terms()) {
        auto l = reduce_mono(k.first, left, R);
        if (!l) continue;
        auto r = reduce_mono(k.second, right, R);
        if (!r) continue;
        out.add(l->second, r->second, c * l->first * r->first);
    }
    return out;
}

namespace {

template <class F>
void for_each_lowering(const Mono& m, F&& f) {
    for (size_t i = 0; i < m.size(); ++i) {
        if (gen_k(m[i]) == 0) continue;
        Mono n = m;
        n[i] -= 256;
        std::sort(n.begin(), n.end());
        f(n);
    }
}

}  // namespace

Descendent r_minus1(const Descendent& D) {
    Descendent out;
    for (const auto& [m, c] : D.terms()) for_each_lowering(m, [&](const Mono& n) { out.add(n, c); });
    return out;
}

TensorDescendent r_minus1_left(const TensorDescendent& T) {
    TensorDescendent out;
    for (const auto& [k, c] : T.terms())
        for_each_lowering(k.first, [&](const Mono& n) { out.add(n, k.second, c); });
    return out;
}

TensorDescendent sigma_star(const Descendent& D) {
    TensorDescendent out;
    for (const auto& [m, c] : D.terms()) {
        const size_t n = m.size();
        if (n > 20) throw Error("monomial too long for the coproduct");
        for (unsigned long s = 0; s < (1ul << n); ++s) {
            Mono l, r;
            for (size_t i = 0; i < n; ++i) (s >> i & 1 ? l : r).push_back(m[i]);
            out.add(l, r, c);
        }
    }
    return out;
}

Descendent t_h_star(const Descendent& D, const CohClass& L, const CohRing& R) {
    std::map<char16_t, Descendent> image;
    auto img = [&](char16_t g) -> const Descendent& {
        auto it = image.find(g);
        if (it != image.end()) return it->second;
        Descendent v;
        CohClass gamma = R.element(gen_cls(g));
        for (int j = 0; j <= R.dim() && j <= gen_k(g); ++j) {
            v += Descendent::ch(gen_k(g) - j, gamma).scaled(1 / factorial(j));
            gamma = R.mul(gamma, L);
        }
        return image.emplace(g, std::move(v)).first->second;
    };
    Descendent out;
    for (const auto& [m, c] : D.terms()) {
        Descendent p = Descendent::constant(c);
        for (char16_t g : m) p = p * img(g);
        out += p;
    }
    return out;
}

Descendent delta_star(const Descendent& D) {
    Descendent out;
    for (const auto& [m, c] : D.terms()) out.add(m, mono_parity(m) ? -c : c);
    return out;
}

TensorDescendent delta_star(const TensorDescendent& T) {
    TensorDescendent out;
    for (const auto& [k, c] : T.terms()) out.add(k.first, k.second, mono_parity(k.first) ^ mono_parity(k.second) ? -c : c);
    return out;
}

// Theta

ThetaClasses::ThetaClasses(const CohRing& R, int k_max) : R_(R), k_max_(k_max) {
    c_.push_back(TensorDescendent::one());
    s_.emplace_back();
}

ThetaClasses::ThetaClasses(const CohRing& R, const CohClass& left, const CohClass& right, int k_max)
    : ThetaClasses(R, k_max) {
    if (static_cast<int>(left.size()) != R.size() || static_cast<int>(right.size()) != R.size())
        throw Error("Chern character has the wrong length");
    red_.emplace(left, right);
}

TensorDescendent ThetaClasses::reduce(const TensorDescendent& T) const {
    return red_ ? reduce_mod_alpha(T, red_->first, red_->second, R_) : T;
}

const TensorDescendent& ThetaClasses::log_coeff(int p) {
    if (p <= 0) throw Error("the exponent has no constant or negative terms");
    const int d = R_.dim();
    while (static_cast<int>(s_.size()) <= p) {
        const int q = static_cast<int>(s_.size());
        TensorDescendent S;
        // 2 (-1)^(b + q - 1) (q-1)! ch_a ch_b (Delta_* td_l), a + b + l - d = q, l = d mod 2
        for (int l = d % 2; l <= d; l += 2) {
            auto diag = R_.diagonal(R_.component(R_.td(), l));
            const int ab = q + d - l;
            for (int a = 0; a <= ab; ++a) {
                const int b = ab - a;
                Rat c = 2 * factorial(q - 1);
                if ((b + q - 1) % 2) c = -c;
                for (const auto& t : diag) {
                    if (a > k_max_ || b > k_max_)
                        throw Error("c(Theta) needs ch_" + std::to_string(std::max(a, b)) + ", above the cap " +
                                    std::to_string(k_max_));
                    S.add(Mono(1, gen_code(a, t.left)), Mono(1, gen_code(b, t.right)), c * t.coeff);
                }
            }
        }
        s_.push_back(reduce(S));
    }
    return s_[p];
}

const TensorDescendent& ThetaClasses::c(int j) {
    static const TensorDescendent empty;
    if (j < 0) return empty;
    while (static_cast<int>(c_.size()) <= j) {
        const int n = static_cast<int>(c_.size());
        // n c_n = sum_p p S_p c_{n-p}
        TensorDescendent acc;
        for (int p = 1; p <= n; ++p) acc += (log_coeff(p) * c_[n - p]).scaled(ratio(p, n));
        c_.push_back(std::move(acc));
    }
    return c_[j];
}

TensorDescendent c_theta(int j, const CohRing& R, int k_max) {
    ThetaClasses theta(R, k_max);
    return theta.c(j);
}

TensorDescendent delta_s(int s, const Descendent& D, ThetaClasses& theta) {
    TensorDescendent out;
    TensorDescendent cur = sigma_star(D);
    for (int j = 0; !cur.is_zero(); ++j) {
        const TensorDescendent& c = theta.c(s + j + 1);
        if (!c.is_zero()) out.add_scaled(c * theta.reduce(cur), 1 / factorial(j));
        cur = r_minus1_left(cur);
    }
    return out;
}

TensorDescendent delta_s(int s, const Descendent& D, const CohRing& R) {
    ThetaClasses theta(R);
    return delta_s(s, D, theta);
}

Rat euler_pairing(const CohClass& a, const CohClass& b, const CohRing& R) {
    return R.integrate(R.mul(R.mul(R.dual(a), b), R.td()));
}

Rat chi_sym(const CohClass& a, const CohClass& b, const CohRing& R) { return euler_pairing(a, b, R) + euler_pairing(b, a, R); }

// functionals

bool Functional::kills(const Mono& m, const CohRing& R) const {
    for (char16_t g : m) {
        if (sheaf_supported && gen_k(g) <= 1) return true;
        if (pt_normalized && gen_k(g) == 1 && R.basis(gen_cls(g)).degree == R.dim()) return true;
    }
    return degree && mono_degree(m, R) != *degree;
}

namespace {

Rat value(const Functional& F, const Mono& m, const CohRing& R) {
    if (F.kills(m, R)) return 0;
    auto it = F.table.find(m);
    if (it == F.table.end()) throw Error("functional has no value on " + mono_str(m, R));
    return it->second;
}

long integral_exponent(const Rat& x, const char* what) {
    if (x.get_den() != 1) throw Error(std::string(what) + " is not an integer: " + to_string(x));
    return x.get_num().get_si();
}

}  // namespace

Rat Functional::operator()(const Descendent& D, const CohRing& R) const {
    Rat s = 0;
    for (const auto& [m, c] : D.terms()) {
        Rat v = value(*this, m, R);
        if (v != 0) s += c * v;
    }
    return s;
}

Functional zero_functional(const CohClass& alpha) {
    Functional F;
    F.alpha = alpha;
    F.degree = -1;
    return F;
}

Functional point_functional(const CohRing& R) {
    Functional F;
    F.alpha = R.scale(R.unit(), -1);
    F.table[{}] = 1;
    F.degree = 0;
    F.pt_normalized = true;
    return F;
}

Rat bracket_pair(const Functional& A, const Functional& B, const Descendent& D, const CohRing& R) {
    long chi = integral_exponent(euler_pairing(A.alpha, B.alpha, R), "chi(alpha, beta)");
    long s = integral_exponent(chi_sym(A.alpha, B.alpha, R), "chi_sym(alpha, beta)");
    ThetaClasses theta(R, A.alpha, B.alpha);
    TensorDescendent T = delta_s(static_cast<int>(s), D, theta);
    Rat out = 0;
    for (const auto& [k, c] : T.terms()) {
        Rat b = value(B, k.second, R);
        if (b == 0) continue;
        Rat a = value(A, k.first, R);
        out += c * a * b;
    }
    return chi % 2 ? -out : out;
}

Descendent bracket_form(const CohClass& alpha, bool sheaf_supported, const Functional& B, const Descendent& D,
                        const CohRing& R) {
    long chi = integral_exponent(euler_pairing(alpha, B.alpha, R), "chi(alpha, beta)");
    long s = integral_exponent(chi_sym(alpha, B.alpha, R), "chi_sym(alpha, beta)");
    ThetaClasses theta(R, alpha, B.alpha);
    TensorDescendent T = delta_s(static_cast<int>(s), D, theta);
    Descendent out;
    for (const auto& [k, c] : T.terms()) {
        if (sheaf_supported && std::any_of(k.first.begin(), k.first.end(), [](char16_t g) { return gen_k(g) <= 1; })) continue;
        Rat b = value(B, k.second, R);
        if (b != 0) out.add(k.first, Rat(chi % 2 ? -c * b : Rat(c * b)));
    }
    return out;
}

Descendent random_descendent(std::mt19937_64& rng, const CohRing& R, int max_total_k, int max_terms, int max_gens) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Descendent out;
    const int nterms = pick(1, std::max(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        std::vector<Gen> m;
        int left = pick(0, max_total_k);
        const int ngens = pick(0, max_gens);
        for (int i = 0; i < ngens; ++i) {
            int k = i + 1 == ngens ? left : pick(0, left);
            left -= k;
            m.push_back(Gen{k, pick(0, R.size() - 1)});
        }
        out.add(make_mono(m), ratio(pick(-5, 5), pick(1, 4)));
    }
    return out;
}

}  // namespace cw
