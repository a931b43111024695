#pragma once

#include "conewall/cones.hpp"
#include "conewall/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

struct WeightedConeProblem {
    SimplicialCone cone;
    FaceWeight weight;
    std::optional<QuasiPoly> qp;
    std::optional<Exp> specialization;  // x_i -> u^{w_i}

    void validate() const;
};

// sum over faces of w(F) times the series of the relative interior of F
RationalFn weighted_series(const SimplicialCone& c, const FaceWeight& w);
// sum of w(n) f(n) x^n: per term of f, theta-derivatives then root substitution
RationalFn weighted_qp_series(const SimplicialCone& c, const FaceWeight& w, const QuasiPoly& f);
RationalFn weighted_qp_series(const WeightedConeProblem& p);
// reference path: one substitution per character group, summed as rational functions
RationalFn weighted_qp_series_by_terms(const SimplicialCone& c, const FaceWeight& w, const QuasiPoly& f);

inline constexpr int max_brute_order = 40;

// direct enumeration of sum w(n) f(n) x^n up to the given degree; univariate in u
// when the problem carries a specialization
LaurentSeries brute_force_series(const WeightedConeProblem& p, int order);
// grading used to truncate multivariate series of this cone
Exp expansion_grading(const SimplicialCone& c);

struct ReciprocityReport {
    bool pass = false;
    RationalFn lhs;  // Z(x^{-1})
    RationalFn rhs;  // Z with dual weight and dual quasi-polynomial
};
ReciprocityReport check_reciprocity(const WeightedConeProblem& p);
// same, against a claimed dual weight instead of the computed one
ReciprocityReport check_reciprocity(const WeightedConeProblem& p, const FaceWeight& dual);

// Z(q^{-1}) = (-1)^a Z(q) for the specialized chain-cone series, a the number of even
// factors; weight must be self-dual up to (-1)^k and every factor even or odd
struct SymmetryReport {
    bool pass = false;
    int even_factors = 0;
    RationalFn z;
};
SymmetryReport check_chain_symmetry(const std::vector<int>& r, const FaceWeight& w, const std::vector<QuasiPoly>& factors);

// canonical binomials (1 - c q^N)^mult left after cancelling common binomial factors
struct PoleEntry {
    int N;
    Rat angle;
    int mult;
};
std::vector<PoleEntry> pole_report(const RationalFn& f);

}  // namespace cw
