#pragma once

#include "conewall/cyclo.hpp"
#include "conewall/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace cw {

// Weight on the faces of a k-dimensional simplicial cone; entry S is the face
// spanned by the generators in the bitmask S (so the complement is I, the set of
// vanishing coordinates).
class FaceWeight {
public:
    explicit FaceWeight(int k, const Rat& fill = 0);

    int dim() const { return k_; }
    const Rat& operator[](unsigned s) const { return v_[s]; }
    Rat& operator[](unsigned s) { return v_[s]; }
    const std::vector<Rat>& values() const { return v_; }
    friend bool operator==(const FaceWeight&, const FaceWeight&) = default;

private:
    int k_;
    std::vector<Rat> v_;
};

FaceWeight dual_weight(const FaceWeight& w);
FaceWeight scaled(const FaceWeight& w, const Rat& c);

enum class WeightKind { standard, half, harmonic, ord };
WeightKind parse_weight_kind(const std::string& name);
std::string weight_kind_name(WeightKind kind);
FaceWeight builtin_weight(WeightKind kind, int k);

// weight of the chain 0 <= mu_1 <= ... <= mu_k: product of 1/len! over runs of equal
// values in (0, mu_1, ..., mu_k)
Rat omega_ord(const std::vector<Rat>& mu);
// fraction of permutations s of {1..k+1} with s(i) < s(i+1) for every i in I (1-based)
Rat omega_ord_oracle(const std::vector<int>& I, int k);

// Polynomial in k variables with rational coefficients.
using Poly = std::map<Exp, Rat>;
Rat poly_eval(const Poly& p, const std::vector<Rat>& x);

// f(n) = P_{n mod N}(n) on Z^k.
class QuasiPoly {
public:
    QuasiPoly(int k, int period);
    static QuasiPoly constant(int k, const Rat& c);
    // univariate from per-class coefficient lists (ascending powers)
    static QuasiPoly univariate(int period, const std::vector<std::vector<Rat>>& classes);
    // f(n) = prod_i f_i(n_i)
    static QuasiPoly product(const std::vector<QuasiPoly>& factors);

    int arity() const { return k_; }
    int period() const { return N_; }
    int degree() const;
    const Poly& cls(const Exp& a) const { return P_[index(a)]; }
    Poly& cls(const Exp& a) { return P_[index(a)]; }
    const std::vector<Poly>& classes() const { return P_; }
    // residue tuple of a flat class index
    Exp residue(size_t idx) const;
    size_t index(const Exp& a) const;

    friend bool operator==(const QuasiPoly& a, const QuasiPoly& b) { return a.k_ == b.k_ && a.N_ == b.N_ && a.P_ == b.P_; }

private:
    int k_;
    int N_;
    std::vector<Poly> P_;
};

Rat qp_eval(const QuasiPoly& f, const Exp& n);
QuasiPoly qp_dual(const QuasiPoly& f);
QuasiPoly qp_scaled(const QuasiPoly& f, const Rat& c);
// the same function with period a multiple of the current one
QuasiPoly qp_with_period(const QuasiPoly& f, int period);
// pointwise sum and product of quasi-polynomials of equal arity
QuasiPoly qp_add(const QuasiPoly& f, const QuasiPoly& g);
QuasiPoly qp_mul(const QuasiPoly& f, const QuasiPoly& g);
bool qp_is_zero(const QuasiPoly& f);

enum class Parity { even, odd, neither };
Parity qp_parity(const QuasiPoly& f);
std::string parity_name(Parity p);

// coeff * prod n_i^{a_i} * zeta_N^{sum b_i n_i}
struct QPTerm {
    CycNum coeff;
    Exp a;
    Exp b;
    int N;
};
std::vector<QPTerm> qp_termize(const QuasiPoly& f);
CycNum qp_term_eval(const QPTerm& t, const Exp& n);

}  // namespace cw
