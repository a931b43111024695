#pragma once

#include "conewall/conegen.hpp"
#include "conewall/wallcross.hpp"

#include "json.hpp"

#include <string>

namespace cw {

using json = nlohmann::json;

// input errors name the JSON path of the offending field
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& msg) : Error((path.empty() ? "/" : path) + ": " + msg) {}
};

// rationals are "a/b" strings; integers are also accepted on input
Rat rat_from_json(const json& j, const std::string& path);
json to_json(const Rat& r);
Exp exp_from_json(const json& j, const std::string& path);
// "1" or "1,0" as used for curve-class keys
Exp exp_from_key(const std::string& key, const std::string& path);
std::string exp_key(const Exp& e);

// "P<n>", "P1xP1xP1" or a full table
CohRing ring_from_json(const json& j, const std::string& path);
// class expression string or coefficient array over the basis
CohClass class_from_json(const json& j, const CohRing& R, const std::string& path);
// a single monomial with coefficient 1, e.g. "ch3(H)" or "ch2(1)*ch5(H)"
Mono mono_from_json(const std::string& s, const CohRing& R, const std::string& path);

SimplicialCone cone_from_json(const json& j, const std::string& path);
QuasiPoly qp_from_json(const json& j, const std::string& path);
json to_json(const QuasiPoly& f);
FaceWeight weight_from_json(const json& j, int k, const std::string& path);
json to_json(const FaceWeight& w);
WeightedConeProblem problem_from_json(const json& j);

// {"variable": "u" | "q", "numerator": [[e, c], ...], "denominator": [{"b": e, "angle": a, "mult": m}]}
// exponents in u = q^{1/2}; "q" doubles them on input
RationalFn ratfn_from_json(const json& j, const std::string& path);
json to_json(const RationalFn& f);
// value of a constant or a rational function entry
RationalFn value_from_json(const json& j, const std::string& path);

// univariate f(u) shown in q = u^2, half-integral powers as q^(a/2)
std::string q_string(const RationalFn& f);
std::string q_exponent(int e);
// univariate f(x) shown in the variable name as given
std::string x_string(const RationalFn& f, const std::string& var);

CurveLattice lattice_from_json(const json& j, const CohRing* R, const std::string& path);
WCInput wcinput_from_json(const json& j, const CohRing& R);
// ring of a document: its "ring" field, P^3 when absent
CohRing document_ring(const json& j);

NovikovSeries novikov_from_json(const json& entries, const json& truncation, const std::string& path);
json to_json(const NovikovSeries& z);

}  // namespace cw
