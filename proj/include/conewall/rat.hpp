#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

using Rat = mpq_class;
using Int = mpz_class;

// All library failures surface as this type; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// canonical n/d; mpq_class(n, d) alone does not reduce
inline Rat ratio(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);

// fractional part in [0,1)
Rat frac(const Rat& r);

Rat factorial(long n);
Rat binomial(long n, long k);
long lcm(long a, long b);
long gcd(long a, long b);

// Rat^n for integer n (negative allowed for nonzero base)
Rat power(const Rat& r, long n);

// exact solve of a square system; throws Error if singular
std::vector<Rat> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace cw
