#include "conewall/cyclo.hpp"

#include <map>
#include <mutex>

namespace cw {

namespace {

std::mutex g_phi_mutex;

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    const size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<Rat> reduce_mod(std::vector<Rat> p, int n) {
    const auto& phi = cyclotomic_poly(n);
    const size_t deg = phi.size() - 1;
    for (size_t i = p.size(); i-- > deg;) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        for (size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
    }
    p.resize(deg);
    return p;
}

std::vector<Rat> monomial(long e, int n) {
    std::vector<Rat> p(static_cast<size_t>(e) + 1, Rat(0));
    p[e] = 1;
    return reduce_mod(std::move(p), n);
}

}  // namespace

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

int normalize_conductor(int n) {
    if (n <= 0) throw Error("conductor must be positive");
    return (n % 4 == 2) ? n / 2 : n;
}

const std::vector<long>& cyclotomic_poly(int n) {
    // entries of a std::map never move, so each thread may keep plain pointers
    static std::map<int, std::vector<long>> cache;
    thread_local std::map<int, const std::vector<long>*> local;
    if (auto it = local.find(n); it != local.end()) return *it->second;
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return *(local[n] = &it->second);
    }
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return *(local[n] = &cache.emplace(n, std::move(p)).first->second);
}

CycNum CycNum::root(const Rat& angle) {
    Rat a = frac(angle);
    if (a == 0) return CycNum(1);
    long den = a.get_den().get_si();
    long num = a.get_num().get_si();
    if (den == 2) return CycNum(-1);
    thread_local std::map<std::pair<long, long>, CycNum> memo;
    if (auto it = memo.find({num, den}); it != memo.end()) return it->second;
    CycNum r = primitive_power(num, den);
    memo.emplace(std::make_pair(num, den), r);
    return r;
}

CycNum CycNum::primitive_power(long num, long den) {
    if (den % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2}, m odd
        long m = den / 2;
        long e = (num * ((m + 1) / 2)) % m;
        CycNum r(static_cast<int>(m), monomial(e, static_cast<int>(m)));
        if (num % 2) r = -r;
        r.shrink();
        return r;
    }
    CycNum r(static_cast<int>(den), monomial(num, static_cast<int>(den)));
    r.shrink();
    return r;
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycNum::rational() const {
    if (!is_rational()) throw Error("cyclotomic number " + str() + " is not rational");
    return c_[0];
}

void CycNum::shrink() {
    if (n_ != 1 && is_rational()) {
        Rat c = c_[0];
        n_ = 1;
        c_.assign(1, c);
    }
}

CycNum CycNum::lift(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("cannot lift cyclotomic number to a non-multiple conductor");
    const long step = m / n_;
    std::vector<Rat> p(static_cast<size_t>(step * (n_ - 1) + 1), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) p[i * step] += c_[i];
    return CycNum(m, reduce_mod(std::move(p), m));
}

Rat CycNum::root_angle() const {
    const int m = (n_ % 2) ? 2 * n_ : n_;
    for (int j = 0; j < m; ++j) {
        Rat a(j, m);
        a.canonicalize();
        if (root(a) == *this) return a;
    }
    throw Error("not a root of unity: " + str());
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw Error("division by zero cyclotomic number");
    if (n_ == 1) return CycNum(1 / c_[0]);
    const size_t d = c_.size();
    // column j of the multiplication matrix is this * zeta^j
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
    for (size_t j = 0; j < d; ++j) {
        std::vector<Rat> p(d + j, Rat(0));
        for (size_t i = 0; i < d; ++i) p[i + j] = c_[i];
        auto r = reduce_mod(std::move(p), n_);
        for (size_t i = 0; i < d; ++i) a[i][j] = r[i];
    }
    std::vector<Rat> e(d, Rat(0));
    e[0] = 1;
    CycNum out(n_, solve(std::move(a), std::move(e)));
    out.shrink();
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (n_ == o.n_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        int m = normalize_conductor(static_cast<int>(lcm(n_, o.n_)));
        CycNum a = lift(m), b = o.lift(m);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        *this = std::move(a);
    }
    shrink();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.n_ == 1) {
        for (auto& c : c_) c *= o.c_[0];
        shrink();
        return *this;
    }
    if (n_ == 1) {
        Rat s = c_[0];
        *this = o;
        for (auto& c : c_) c *= s;
        shrink();
        return *this;
    }
    int m = normalize_conductor(static_cast<int>(lcm(n_, o.n_)));
    CycNum a = lift(m), b = o.lift(m);
    std::vector<Rat> p(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    *this = CycNum(m, reduce_mod(std::move(p), m));
    shrink();
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    int m = normalize_conductor(static_cast<int>(lcm(a.n_, b.n_)));
    return a.lift(m).c_ == b.lift(m).c_;
}

std::string CycNum::str() const {
    if (n_ == 1) return to_string(c_[0]);
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::string coef = to_string(c_[i]);
        if (!out.empty()) {
            if (coef[0] == '-') {
                out += " - ";
                coef.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += coef;
            continue;
        }
        std::string z = "z" + std::to_string(n_) + (i > 1 ? "^" + std::to_string(i) : "");
        if (coef == "1") out += z;
        else if (coef == "-1") out += "-" + z;
        else out += coef + "*" + z;
    }
    return "(" + out + ")";
}

}  // namespace cw
