#pragma once

#include "conewall/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace cw {

// The binomial 1 - exp(2 pi i angle) x^b with b canonical (first nonzero entry positive).
struct Factor {
    Rat angle;  // in [0,1)
    Exp b;
    CycNum constant() const { return CycNum::root(angle); }
    friend bool operator<(const Factor& x, const Factor& y) {
        if (x.b != y.b) return x.b < y.b;
        return x.angle < y.angle;
    }
    friend bool operator==(const Factor& x, const Factor& y) { return x.angle == y.angle && x.b == y.b; }
};

class LaurentSeries {
public:
    LaurentSeries(int nvars, int order, Exp grading) : k_(nvars), order_(order), grading_(std::move(grading)) {}

    int nvars() const { return k_; }
    int order() const { return order_; }
    const Exp& grading() const { return grading_; }
    const std::map<Exp, CycNum>& coeffs() const { return c_; }
    CycNum coeff(const Exp& e) const;
    // univariate convenience
    CycNum coeff(int e) const { return coeff(Exp{e}); }
    void add(const Exp& e, const CycNum& v);

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    int k_;
    int order_;
    Exp grading_;
    std::map<Exp, CycNum> c_;
};

class RationalFn {
public:
    using Denominator = std::map<Factor, int>;

    explicit RationalFn(int nvars = 1) : num_(nvars) {}
    RationalFn(LaurentPoly num) : num_(std::move(num)) {}
    static RationalFn constant(int nvars, const CycNum& c);
    static RationalFn monomial(const Exp& e, const CycNum& c = CycNum(1));
    // 1 / (1 - exp(2 pi i angle) x^b)^mult
    static RationalFn geometric(const Exp& b, const Rat& angle = 0, int mult = 1);

    int nvars() const { return num_.nvars(); }
    const LaurentPoly& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    RationalFn scaled(const CycNum& c) const;
    RationalFn operator-() const { return scaled(CycNum(-1)); }

    // divide the numerator by denominator binomials wherever exact
    RationalFn cancelled() const;
    // univariate only: split every factor into linear ones and cancel; used for pole analysis
    RationalFn linear_cancelled() const;
    // also split binomials into sub-binomials wherever a piece cancels and no new roots of unity appear
    RationalFn reduced() const;

    std::string str(const std::vector<std::string>& names = {}) const;
    std::string numerator_str(const std::vector<std::string>& names = {}) const;
    std::vector<std::string> denominator_strs(const std::vector<std::string>& names = {}) const;

    // multiply in the denominator factor (1 - c x^b)^mult, canonicalizing b
    void divide_by(const Exp& b, const Rat& angle, int mult);

private:
    LaurentPoly num_;
    Denominator den_;

    friend bool rf_equal(const RationalFn& a, const RationalFn& b);
    friend RationalFn invert_variables(const RationalFn& f);
    friend RationalFn theta_derivative(const RationalFn& f, int i);
    friend RationalFn root_substitute(const RationalFn& f, int i, const Rat& angle);
};

bool rf_equal(const RationalFn& a, const RationalFn& b);

// Expand every factor as a geometric series in the direction where the grading g is
// positive; terms with <g,e> <= order are exact. Without an explicit grading the
// all-ones grading is used and every canonical direction must be positive for it.
LaurentSeries series_expand(const RationalFn& f, int order, Exp grading = {});

RationalFn invert_variables(const RationalFn& f);
RationalFn theta_derivative(const RationalFn& f, int i);
RationalFn root_substitute(const RationalFn& f, int i, const Rat& angle);
RationalFn root_substitute(const RationalFn& f, int i, const CycNum& c);

// x_i -> u^{w_i}; collapsing factors must cancel first
RationalFn specialize(const RationalFn& f, const Exp& w);

// pole of a univariate function at u = exp(-2 pi i angle), i.e. a factor (1 - exp(2 pi i angle) u)
struct Pole {
    Rat angle;
    int order;  // multiplicative order of the root exp(2 pi i angle)
    int mult;
};
std::vector<Pole> poles(const RationalFn& f);

}  // namespace cw
