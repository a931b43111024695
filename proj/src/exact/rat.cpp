#include "conewall/rat.hpp"

#include <cstdlib>
#include <numeric>

namespace cw {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) throw Error("empty rational literal");
    if (t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    auto ok = [](const std::string& x) {
        if (x.empty()) return false;
        size_t i = (x[0] == '-') ? 1 : 0;
        if (i == x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!ok(t)) throw Error("bad rational literal '" + s + "'");
        return Rat(Int(t));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!ok(n) || !ok(d)) throw Error("bad rational literal '" + s + "'");
    Int den(d);
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    Rat r(Int(n), den);
    r.canonicalize();
    return r;
}

Rat frac(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rat(q);
}

Rat factorial(long n) {
    if (n < 0) throw Error("factorial of negative number");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(long n, long k) {
    if (k < 0) return 0;
    // generalized binomial for negative n
    Rat r = 1;
    for (long i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
    return r;
}

long gcd(long a, long b) { return std::gcd(a, b); }

long lcm(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::abs(a / std::gcd(a, b) * b);
}

Rat power(const Rat& r, long n) {
    if (n < 0) {
        if (r == 0) throw Error("zero to a negative power");
        return 1 / power(r, -n);
    }
    Rat out = 1, base = r;
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

std::vector<Rat> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

}  // namespace cw
