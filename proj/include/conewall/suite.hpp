#pragma once

#include "conewall/conegen.hpp"

#include <random>

namespace cw {

// Bounds of the randomized reciprocity suite.
struct SuiteBounds {
    int max_k = 4;
    int max_r = 5;
    int max_degree = 3;
    int max_period = 4;
    // reject draws whose closed form is predicted to be larger than this many numerator terms
    double budget = 10000;
};

// predicted numerator size of weighted_qp_series for the problem: det times the
// lifted denominator degree of every generator
double closed_form_cost(const WeightedConeProblem& p);

// chain cone, built-in weight and random quasi-polynomial within the bounds
WeightedConeProblem random_cone_problem(std::mt19937_64& rng, const SuiteBounds& b = {});

}  // namespace cw
