#pragma once

#include "conewall/rat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cw {

// Element of H^even(X) as coefficients over the ring basis.
using CohClass = std::vector<Rat>;

// Even cohomology ring of a smooth projective variety, given by a basis with
// structure constants and the integrals of basis elements.
class CohRing {
public:
    struct Basis {
        std::string name;
        int degree;  // complex degree
    };

    // mult[i][j] = e_i * e_j in the basis; integral[i] = int_X e_i
    CohRing(int dim, std::vector<Basis> basis, std::vector<std::vector<CohClass>> mult, std::vector<Rat> integral,
            CohClass td, CohClass c1, CohClass hyperplane, CohClass pt);

    int dim() const { return d_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<Basis>& basis() const { return basis_; }
    const Basis& basis(int i) const { return basis_[i]; }
    std::optional<int> find(const std::string& name) const;

    CohClass zero() const { return CohClass(size()); }
    CohClass unit() const;
    CohClass element(int i, const Rat& c = 1) const;
    const CohClass& td() const { return td_; }
    const CohClass& c1() const { return c1_; }
    const CohClass& hyperplane() const { return H_; }
    const CohClass& pt() const { return pt_; }

    CohClass mul(const CohClass& a, const CohClass& b) const;
    CohClass add(const CohClass& a, const CohClass& b) const;
    CohClass scale(const CohClass& a, const Rat& c) const;
    CohClass power(const CohClass& a, int n) const;
    // part of complex degree j
    CohClass component(const CohClass& a, int j) const;
    Rat integrate(const CohClass& a) const;
    // sum_j (-1)^j a_j
    CohClass dual(const CohClass& a) const;

    // Delta_* gamma = sum over (i, j) of coeff e_i (x) e_j, from the inverse pairing
    struct DiagonalTerm {
        int left;
        int right;
        Rat coeff;
    };
    std::vector<DiagonalTerm> diagonal(const CohClass& gamma) const;

private:
    int d_;
    std::vector<Basis> basis_;
    std::vector<std::vector<CohClass>> mult_;
    std::vector<Rat> integral_;
    CohClass td_, c1_, H_, pt_;
    std::vector<CohClass> dual_basis_;  // int e_i * dual_basis_[j] = [i == j]
};

// P^n with basis 1, H, H^2, ..., H^n
CohRing projective_space(int n);
// P^1 x P^1 x P^1 with basis the square-free products of h1, h2, h3
CohRing p1_cubed();

// (r, D, beta, m): r*1 + D + beta + m*pt, the shapes of the sheaves and pairs in play
CohClass chern_char(const CohRing& R, const Rat& rank, const CohClass& divisor, const CohClass& beta, const Rat& m);

// ch_k(e_cls)
struct Gen {
    int k;
    int cls;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Sorted product of generators, each packed as k << 8 | cls so the string order
// is the (k, cls) order and short monomials stay in the small-string buffer.
using Mono = std::u16string;

char16_t gen_code(int k, int cls);
inline int gen_k(char16_t c) { return c >> 8; }
inline int gen_cls(char16_t c) { return c & 0xff; }
inline Gen gen_of(char16_t c) { return {gen_k(c), gen_cls(c)}; }
Mono make_mono(std::vector<Gen> gens);

struct MonoPairHash {
    size_t operator()(const std::pair<Mono, Mono>& p) const;
};

Mono mono_mul(const Mono& a, const Mono& b);
// sum of 2k + 2 deg(gamma) - 2d over the generators
int mono_degree(const Mono& m, const CohRing& R);
int mono_parity(const Mono& m);

// Rat-linear combination of monomials in the symbols ch_k(gamma).
class Descendent {
public:
    using Terms = std::unordered_map<Mono, Rat>;

    Descendent() = default;
    static Descendent constant(const Rat& c);
    static Descendent gen(int k, int cls);
    // ch_k(gamma), expanded over the basis
    static Descendent ch(int k, const CohClass& gamma);
    static Descendent mono(const Mono& m, const Rat& c = 1);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    void add(const Mono& m, const Rat& c);
    Rat coeff(const Mono& m) const;
    // largest k among the generators, -1 for constants
    int max_k() const;

    Descendent& operator+=(const Descendent& o);
    Descendent& operator-=(const Descendent& o);
    Descendent operator*(const Descendent& o) const;
    Descendent scaled(const Rat& c) const;
    friend Descendent operator+(Descendent a, const Descendent& b) { return a += b; }
    friend Descendent operator-(Descendent a, const Descendent& b) { return a -= b; }
    friend bool operator==(const Descendent& a, const Descendent& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

// sum of c * left (x) right
class TensorDescendent {
public:
    using Key = std::pair<Mono, Mono>;
    using Terms = std::unordered_map<Key, Rat, MonoPairHash>;

    static TensorDescendent one();
    static TensorDescendent pure(const Descendent& left, const Descendent& right);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    void add(const Mono& l, const Mono& r, const Rat& c);

    TensorDescendent& operator+=(const TensorDescendent& o);
    // this += c * o
    void add_scaled(const TensorDescendent& o, const Rat& c);
    TensorDescendent operator*(const TensorDescendent& o) const;
    TensorDescendent scaled(const Rat& c) const;
    friend TensorDescendent operator+(TensorDescendent a, const TensorDescendent& b) { return a += b; }
    friend bool operator==(const TensorDescendent& a, const TensorDescendent& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

std::string to_string(const Descendent& D, const CohRing& R);
std::string to_string(const TensorDescendent& T, const CohRing& R);

// generators of degree < 0 vanish, degree 0 become int_X alpha * gamma
Descendent reduce_mod_alpha(const Descendent& D, const CohClass& alpha, const CohRing& R);
TensorDescendent reduce_mod_alpha(const TensorDescendent& T, const CohClass& left, const CohClass& right, const CohRing& R);

// reduction modulo alpha + m pt with m formal: entry e is the coefficient of m^e
std::vector<Descendent> reduce_mod_alpha_in_m(const Descendent& D, const CohClass& alpha, const CohRing& R);

Descendent r_minus1(const Descendent& D);
TensorDescendent r_minus1_left(const TensorDescendent& T);
TensorDescendent sigma_star(const Descendent& D);
// ch_k(gamma) -> sum_j ch_{k-j}(gamma c_1(L)^j) / j!
Descendent t_h_star(const Descendent& D, const CohClass& L, const CohRing& R);
Descendent delta_star(const Descendent& D);
TensorDescendent delta_star(const TensorDescendent& T);

inline constexpr int default_k_max = 10;

// The classes c_j(Theta), memoized per instance. A generator ch_k with k above
// k_max is an error. With a pair of Chern characters the classes live in the
// quotient D_left (x) D_right, which is far smaller than the free algebra.
class ThetaClasses {
public:
    explicit ThetaClasses(const CohRing& R, int k_max = default_k_max);
    ThetaClasses(const CohRing& R, const CohClass& left, const CohClass& right, int k_max = default_k_max);

    const TensorDescendent& c(int j);
    // the z^p coefficient of the exponent
    const TensorDescendent& log_coeff(int p);
    const CohRing& ring() const { return R_; }
    bool reduced() const { return red_.has_value(); }
    // reduction modulo the pair, identity for unreduced classes
    TensorDescendent reduce(const TensorDescendent& T) const;

private:
    const CohRing& R_;
    int k_max_;
    std::optional<std::pair<CohClass, CohClass>> red_;
    std::vector<TensorDescendent> c_;
    std::vector<TensorDescendent> s_;
};

TensorDescendent c_theta(int j, const CohRing& R, int k_max = default_k_max);

// sum_j c_{s+j+1}(Theta) (R_{-1}^j / j! (x) id) Sigma^*(D), reduced when theta is
TensorDescendent delta_s(int s, const Descendent& D, ThetaClasses& theta);
TensorDescendent delta_s(int s, const Descendent& D, const CohRing& R);

// int_X a^vee b td(X)
Rat euler_pairing(const CohClass& a, const CohClass& b, const CohRing& R);
Rat chi_sym(const CohClass& a, const CohClass& b, const CohRing& R);

// empty string for the unit monomial
std::string mono_str(const Mono& m, const CohRing& R);

// Value table of an element of V_alpha on reduced monomials.
struct Functional {
    CohClass alpha;
    std::map<Mono, Rat> table;
    // graded dual of this cohomological degree: other degrees pair to zero
    std::optional<int> degree;
    // monomials containing ch_0 or ch_1 of anything pair to zero
    bool sheaf_supported = false;
    // monomials containing ch_1(pt) pair to zero
    bool pt_normalized = false;

    // D must already be reduced mod alpha
    Rat operator()(const Descendent& D, const CohRing& R) const;
    bool kills(const Mono& m, const CohRing& R) const;
};

Functional zero_functional(const CohClass& alpha);
// the one-point functional of O_X[1]: value 1 on the empty monomial
Functional point_functional(const CohRing& R);

// <[A,B],D> = (-1)^chi(a,b) <A (x) B, Delta_{chi_sym(a,b)} D>
Rat bracket_pair(const Functional& A, const Functional& B, const Descendent& D, const CohRing& R);
// the descendent E with <[A,B],D> = <A,E> for every A of class alpha: B applied to
// the right slot, left slot reduced mod alpha (and filtered by sheaf support)
Descendent bracket_form(const CohClass& alpha, bool sheaf_supported, const Functional& B, const Descendent& D,
                        const CohRing& R);

// random polynomial with at most max_gens generators and sum of k at most max_total_k per monomial
Descendent random_descendent(std::mt19937_64& rng, const CohRing& R, int max_total_k, int max_terms, int max_gens = 3);

}  // namespace cw
