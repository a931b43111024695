#pragma once

#include "conewall/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cw {

// status 0 when every check passes, 1 when one fails; input errors throw
struct Outcome {
    int status = 0;
    json report;
};

Outcome run_cone_series(const json& in, std::optional<int> order);
Outcome run_reciprocity(const json& in);
Outcome run_wallcross(const json& in);
Outcome run_invert(const json& in);
Outcome run_primary(const json& in);
Outcome run_descendent(const json& in);
// a fixture name, golden-p3-lines, or all
Outcome run_selftest(const std::string& name);

const std::vector<std::string>& fixture_names();
json fixture(const std::string& name);

// the golden closed form q^{-1}(q-1)(2+3q-28q^2+3q^3+2q^4) / (18(1+q)^3) in u = q^{1/2}
RationalFn golden_p3_closed_form();

}  // namespace cw
