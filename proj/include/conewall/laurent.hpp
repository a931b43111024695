#pragma once

#include "conewall/cyclo.hpp"

#include <map>
#include <string>
#include <vector>

namespace cw {

using Exp = std::vector<int>;

Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);
Exp exp_scale(const Exp& a, int s);
long dot(const Exp& a, const Exp& b);

// Sparse Laurent polynomial in k variables with cyclotomic coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exp, CycNum>;

    explicit LaurentPoly(int nvars = 1) : k_(nvars) {}
    static LaurentPoly constant(int nvars, const CycNum& c);
    static LaurentPoly monomial(const Exp& e, const CycNum& c = CycNum(1));

    int nvars() const { return k_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    CycNum coeff(const Exp& e) const;

    void add_term(const Exp& e, const CycNum& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const CycNum& c) const;
    LaurentPoly shifted(const Exp& e) const;
    LaurentPoly operator-() const { return scaled(CycNum(-1)); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // (1 - c x^b)^e
    static LaurentPoly binomial_power(const Exp& b, const CycNum& c, int e);

    // exact quotient by (1 - c x^b), or false if not divisible
    bool divide_binomial(const Exp& b, const CycNum& c, LaurentPoly& quotient) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int k_;
    Terms t_;
};

std::vector<std::string> default_var_names(int k);

}  // namespace cw
