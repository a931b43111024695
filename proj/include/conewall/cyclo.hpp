#pragma once

#include "conewall/rat.hpp"

#include <string>
#include <vector>

namespace cw {

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial. The conductor is never 2 mod 4
// since Q(zeta_{2m}) = Q(zeta_m) for odd m.
class CycNum {
public:
    CycNum() : n_(1), c_{Rat(0)} {}
    CycNum(const Rat& r) : n_(1), c_{r} {}
    CycNum(long v) : n_(1), c_{Rat(v)} {}

    // exp(2 pi i * angle)
    static CycNum root(const Rat& angle);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // throws if not rational

    // same number expressed over Q(zeta_m); m must be a multiple of conductor()
    CycNum lift(int m) const;

    // if this is a root of unity, its angle in [0,1); otherwise throws
    Rat root_angle() const;

    CycNum inverse() const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
    CycNum operator-() const;
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;

private:
    CycNum(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    void shrink();
    static CycNum primitive_power(long num, long den);

    int n_;
    std::vector<Rat> c_;
};

int euler_phi(int n);
// integer coefficients of Phi_n, low degree first
const std::vector<long>& cyclotomic_poly(int n);
// conductor with the 2 mod 4 case folded away
int normalize_conductor(int n);

}  // namespace cw
