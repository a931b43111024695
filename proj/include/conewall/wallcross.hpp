#pragma once

#include "conewall/conegen.hpp"
#include "conewall/descendent.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace cw {

// Curve classes as integer vectors in a fixed basis; effective means every entry
// is non-negative. beta.H and d_beta = beta.c_1 are linear forms, positive on
// every basis curve.
struct CurveLattice {
    Exp H;
    Exp c1;
    // cohomology class of each basis curve; only needed to reduce descendents
    std::vector<CohClass> curves;

    int rank() const { return static_cast<int>(H.size()); }
    long h_degree(const Exp& b) const { return dot(H, b); }
    long d(const Exp& b) const { return dot(c1, b); }
    bool effective(const Exp& b) const;
    void validate() const;
    CohClass curve(const Exp& b, const CohRing& R) const;
};

// beta = beta_0 + beta_1 + ... + beta_k with beta_0 effective and beta_i > 0
struct Partition {
    Exp beta0;
    std::vector<Exp> parts;
    int k() const { return static_cast<int>(parts.size()); }
};
std::vector<Partition> partitions(const CurveLattice& lat, const Exp& beta);

// One summand of a partition after splitting D. l holds the L slot as n_0 = 2 m_0 -> value;
// f[j-1] is f_j(n) = (-1)^{n/2 - d_j/2} <M_{beta_j, n/2}, D_j> as a quasi-polynomial in n.
struct SplitTerm {
    std::map<int, Rat> l;
    std::vector<QuasiPoly> f;
};

struct PartitionSplit {
    Partition partition;
    std::vector<SplitTerm> terms;
};

struct Assembly {
    CurveLattice lattice;
    Exp beta;
    int parity = 0;  // |D| mod 2
    std::vector<PartitionSplit> splits;
};

// Z(q | D) as a rational function of u = q^{1/2}
struct PTSeries {
    RationalFn z{1};
    int parity = 0;
    std::optional<bool> functional_equation;
};

// sum over partitions and terms of A(u) B(u), B from the ord-weighted chain cone
// 0 <= n_1/(2 r_1) <= ... <= n_k/(2 r_k), r_j = beta_j.H
PTSeries assemble_pt(const Assembly& a);
// Z(1/u) = (-1)^parity Z(u)
bool check_functional_equation(const RationalFn& z, int parity);

// (-1)^{(n-d)/2} on n = d mod 2, zero otherwise
QuasiPoly half_integer_sign(int d);

// n -> <M_{beta, n/2}, mono> for reduced monomials
struct QuasiFunctional {
    std::map<Mono, QuasiPoly> table;
    std::optional<int> degree = 2;  // moduli of one-dimensional sheaves have virtual dimension 1
    bool sheaf_supported = true;
    // entries must be even or odd with the parity of their monomial
    bool symmetric = false;

    // sum_e (n/2)^e <M, D_e> for D given as a polynomial in m
    QuasiPoly operator()(const std::vector<Descendent>& in_m, const CohRing& R) const;
    void validate(const CohRing& R) const;
};

struct WCInput {
    CurveLattice lattice;
    Exp beta;
    Descendent D;
    std::map<Exp, QuasiFunctional> M;
    // class -> n_0 = 2 m_0 -> functional; alpha is filled in from the class.
    // beta_0 = 0 defaults to the point functional of O_X[1] at m_0 = 0.
    std::map<Exp, std::map<int, Functional>> L;
    // require <L_{b,-m}, D> = <L_{b,m}, delta^* D>
    bool l_symmetric = false;
};

// common parity of the monomials, error when mixed
int descendent_parity(const Descendent& D);

// Splits D along each partition by iterated Delta_{-d_j}, outermost M slot first,
// and evaluates every slot against the M and L data.
Assembly build_assembly(const WCInput& in, const CohRing& R);

// Inverse direction for an irreducible class: PT(m) = L(m) + w(m) b(m) with w = 1 for
// m > 0, 1/2 at m = 0, 0 below. b is fitted on m beyond the window as a quasi-polynomial
// of the given degree and period in m, then L is read off inside [m_min, m_max].
struct ExtractResult {
    std::map<Rat, Rat> L;      // m -> <L_{beta, m}, D>
    QuasiPoly bracket{1, 1};  // n = 2m -> <[M_{beta, m}, L_{0,0}], D>
};
ExtractResult extract_L(const RationalFn& z, int d_beta, const Rat& m_min, const Rat& m_max, int degree_bound,
                        int period);

// largest u-exponent a caller may expand to; CONEWALL_MAX_ORDER, default 40
int max_order();

// order of -q at every pole of z(u) away from u = 0, with q = u^2
std::vector<int> minus_q_orders(const RationalFn& z);
// every such order divides H.beta' for some 0 < beta' <= beta
bool poles_within(const RationalFn& z, const CurveLattice& lat, const Exp& beta);

// Truncated power series in Q^beta and insertion variables t_a, coefficients in Q(u).
// Coefficients are those of the monomial Q^beta t^e, so a correlator of the multiset e
// enters divided by prod e_a!.
class NovikovSeries {
public:
    struct Key {
        Exp beta;
        Exp t;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    NovikovSeries(Exp beta_max, int n_insertions, int t_max);

    const Exp& beta_max() const { return beta_max_; }
    int n_insertions() const { return n_; }
    int t_max() const { return t_max_; }
    const std::map<Key, RationalFn>& terms() const { return t_; }
    bool in_range(const Key& k) const;
    RationalFn coeff(const Key& k) const;
    void add(const Key& k, const RationalFn& c);

    NovikovSeries operator*(const NovikovSeries& o) const;
    NovikovSeries& operator+=(const NovikovSeries& o);
    NovikovSeries scaled(const RationalFn& c) const;
    RationalFn constant_term() const;
    friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

private:
    Exp beta_max_;
    int n_;
    int t_max_;
    std::map<Key, RationalFn> t_;
};

// exp of a series without constant term, log of a series with constant term 1
NovikovSeries novikov_exp(const NovikovSeries& x);
NovikovSeries connected_log(const NovikovSeries& z);
// exp(Z^M / (q^{1/2} + q^{-1/2})) Z^L; Z^M may only carry classes with d_beta = 1
NovikovSeries primary_exp(const NovikovSeries& zm, const NovikovSeries& zl, const CurveLattice& lat);

// u / (1 + u^2) = 1 / (q^{1/2} + q^{-1/2})
RationalFn inverse_s();
// ord-weighted sum of prod (-1)^{m_j - 1/2} q^{m_j} over half-integers 0 < m_1 <= ... <= m_k
RationalFn primary_tuple_series(int k);
// 1 / (k! (q^{1/2} + q^{-1/2})^k)
RationalFn primary_tuple_closed_form(int k);

// z = sum_g n_g (q^{1/2} + q^{-1/2})^{2g - 2 + d_beta}
std::map<int, Rat> gv_extract(const RationalFn& z, int d_beta);

struct RationalityReport {
    bool pass = false;
    std::vector<Pole> poles;
    // divisibility by (q^{1/2} + q^{-1/2})^{d - 2}, reported only
    bool gv_divisible = false;
};
// poles only at u = 0 for d_beta > 1; for d_beta = 1 also a simple pole at q = -1
RationalityReport strong_rationality_check(const RationalFn& z, int d_beta);

// Rank-one synthetic inputs for the property suites.
struct SyntheticBounds {
    int max_beta_h = 3;  // beta.H
    int max_d = 4;       // d of the generator
    int max_support = 5;
    int max_degree = 2;
    int max_terms = 2;
};
Assembly random_assembly(std::mt19937_64& rng, const SyntheticBounds& b = {});

// irreducible class: L table and bracket quasi-polynomial, and their assembly
struct IrreducibleData {
    int d_beta;
    int h;
    std::map<int, Rat> L;  // n = 2m -> value
    QuasiPoly bracket{1, 1};
    Assembly assembly;
};
IrreducibleData random_irreducible(std::mt19937_64& rng, const SyntheticBounds& b = {});

}  // namespace cw
