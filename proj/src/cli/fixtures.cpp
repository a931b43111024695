#include "conewall/commands.hpp"

#include <algorithm>

namespace cw {

namespace {

// P^3: basis 1, H, H^2, H^3
const char* p3_ring = R"J({
  "dim": 3,
  "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 1}, {"name": "H^2", "degree": 2}, {"name": "H^3", "degree": 3}],
  "mult": [
    [[1,0,0,0], [0,1,0,0], [0,0,1,0], [0,0,0,1]],
    [[0,1,0,0], [0,0,1,0], [0,0,0,1], [0,0,0,0]],
    [[0,0,1,0], [0,0,0,1], [0,0,0,0], [0,0,0,0]],
    [[0,0,0,1], [0,0,0,0], [0,0,0,0], [0,0,0,0]]
  ],
  "integral": [0, 0, 0, 1],
  "td": [1, 2, "11/6", 1],
  "c1": [0, 4, 0, 0],
  "H": [0, 1, 0, 0],
  "pt": [0, 0, 0, 1]
})J";

// lines on P^3 with D = ch7(1); M values are quasi-polynomials in n = 2m
const char* p3_lines = R"J({
  "ring": "P3",
  "lattice": {"H": [1], "c1": [4], "curves": ["H^2"]},
  "beta": [1],
  "D": "ch7(1)",
  "M": {
    "1": {
      "degree": 2,
      "sheaf_supported": true,
      "symmetric": true,
      "values": {
        "ch4(1)": {"period": 2, "classes": {"0": ["10/3", 0, "5/2"]}},
        "ch3(H)": {"period": 2, "classes": {"0": [0, 10]}},
        "ch2(H^2)": {"period": 2, "classes": {"0": [20]}}
      }
    }
  },
  "L": {
    "1": {
      "degree": 8,
      "values": {"-1": {"ch7(1)": "-1/9"}, "0": {"ch7(1)": 0}, "1": {"ch7(1)": "1/9"}}
    }
  },
  "l_symmetric": true
})J";

const char* chain_ord_k3 = R"J({
  "cone": {"chain": [1, 2, 3]},
  "weight": "ord",
  "qp": {"product": [
    {"period": 2, "classes": {"0": [1], "1": [0, 1]}},
    {"period": 1, "classes": {"0": [1, 1]}},
    {"period": 3, "classes": {"0": [2], "1": ["-1/2"], "2": [0, 0, 1]}}
  ]},
  "specialization": [1, 1, 1]
})J";

const char* primary_identity = R"J({"tuple_identity": {"k_max": 4}})J";

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"p3-lines-ch7", "p3-ring", "chain-ord-k3", "primary-exp-identity"};
    return names;
}

json fixture(const std::string& name) {
    if (name == "p3-lines-ch7") return json::parse(p3_lines);
    if (name == "p3-ring") return json::parse(p3_ring);
    if (name == "chain-ord-k3") return json::parse(chain_ord_k3);
    if (name == "primary-exp-identity") return json::parse(primary_identity);
    std::string all;
    for (const auto& n : fixture_names()) all += (all.empty() ? "" : ", ") + n;
    throw Error("unknown fixture \"" + name + "\"; known: " + all);
}

RationalFn golden_p3_closed_form() {
    // (q-1)(2+3q-28q^2+3q^3+2q^4) = -2 - q + 31q^2 - 31q^3 + q^4 + 2q^5
    const int c[] = {-2, -1, 31, -31, 1, 2};
    LaurentPoly num(1);
    for (int i = 0; i < 6; ++i) num.add_term(Exp{2 * i - 2}, ratio(c[i], 18));
    RationalFn z(num);
    z.divide_by(Exp{2}, Rat(1, 2), 3);
    return z;
}

}  // namespace cw
