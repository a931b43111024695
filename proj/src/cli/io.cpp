#include "conewall/io.hpp"

#include "conewall/expr.hpp"

#include <sstream>

namespace cw {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(at(path, key), "missing field");
    return *it;
}

int int_from_json(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < -1000000 || v > 1000000) throw SchemaError(path, "integer out of range");
    return static_cast<int>(v);
}

bool bool_or(const json& j, const std::string& key, bool dflt, const std::string& path) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_boolean()) throw SchemaError(at(path, key), "expected true or false");
    return j[key].get<bool>();
}

std::optional<int> degree_field(const json& j, std::optional<int> dflt, const std::string& path) {
    if (!j.contains("degree")) return dflt;
    if (j["degree"].is_null()) return std::nullopt;
    return int_from_json(j["degree"], at(path, "degree"));
}

std::string coef_term(const CycNum& v, const std::string& mono, bool first) {
    std::string coef = v.str();
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mono.empty()) return out + coef;
    if (coef == "1") return out + mono;
    return out + coef + "*" + mono;
}

template <class Mono>
std::string render(const RationalFn& f, Mono mono) {
    std::string num;
    bool first = true;
    for (const auto& [e, v] : f.numerator().terms()) {
        num += coef_term(v, mono(e[0]), first);
        first = false;
    }
    if (first) num = "0";
    std::string out = "(" + num + ")";
    if (f.is_polynomial()) return out;
    std::string den;
    for (const auto& [fac, mult] : f.denominator()) {
        std::string x = mono(fac.b[0]);
        std::string s;
        if (fac.angle == 0)
            s = "(1 - " + x + ")";
        else if (fac.angle == Rat(1, 2))
            s = "(1 + " + x + ")";
        else
            s = "(1 - e(" + to_string(fac.angle) + ")*" + x + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
        den += (den.empty() ? "" : "*") + s;
    }
    return out + "/(" + den + ")";
}

}  // namespace

Rat rat_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw SchemaError(path, "expected a rational as \"a/b\" or an integer");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

json to_json(const Rat& r) { return to_string(r); }

Exp exp_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Exp{int_from_json(j, path)};
    if (!j.is_array()) throw SchemaError(path, "expected an integer array");
    Exp out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], at(path, i)));
    return out;
}

Exp exp_from_key(const std::string& key, const std::string& path) {
    Exp out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw SchemaError(path, "class key must be comma-separated integers, got \"" + key + "\"");
        }
    }
    if (out.empty()) throw SchemaError(path, "empty class key");
    return out;
}

std::string exp_key(const Exp& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

CohRing ring_from_json(const json& j, const std::string& path) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "P1xP1xP1") return p1_cubed();
        if (name.size() >= 2 && name[0] == 'P') {
            try {
                size_t used = 0;
                int n = std::stoi(name.substr(1), &used);
                if (used == name.size() - 1 && n >= 0 && n <= 12) return projective_space(n);
            } catch (const std::exception&) {
            }
        }
        throw SchemaError(path, "unknown built-in ring \"" + name + "\"; use P<n>, P1xP1xP1 or a table");
    }
    const json& basis = field(j, "basis", path);
    if (!basis.is_array() || basis.empty()) throw SchemaError(at(path, "basis"), "expected a non-empty array");
    std::vector<CohRing::Basis> b;
    for (size_t i = 0; i < basis.size(); ++i) {
        std::string p = at(at(path, "basis"), i);
        const json& name = field(basis[i], "name", p);
        if (!name.is_string()) throw SchemaError(at(p, "name"), "expected a string");
        b.push_back({name.get<std::string>(), int_from_json(field(basis[i], "degree", p), at(p, "degree"))});
    }
    const size_t n = b.size();
    auto vec = [&](const json& v, const std::string& p) {
        if (!v.is_array() || v.size() != n) throw SchemaError(p, "expected " + std::to_string(n) + " coefficients");
        CohClass c;
        for (size_t i = 0; i < n; ++i) c.push_back(rat_from_json(v[i], at(p, i)));
        return c;
    };
    const json& mult = field(j, "mult", path);
    if (!mult.is_array() || mult.size() != n) throw SchemaError(at(path, "mult"), "expected an n x n table of classes");
    std::vector<std::vector<CohClass>> m(n);
    for (size_t i = 0; i < n; ++i) {
        std::string p = at(at(path, "mult"), i);
        if (!mult[i].is_array() || mult[i].size() != n) throw SchemaError(p, "expected a row of " + std::to_string(n) + " classes");
        for (size_t k = 0; k < n; ++k) m[i].push_back(vec(mult[i][k], at(p, k)));
    }
    int dim = int_from_json(field(j, "dim", path), at(path, "dim"));
    try {
        return CohRing(dim, b, m, vec(field(j, "integral", path), at(path, "integral")), vec(field(j, "td", path), at(path, "td")),
                       vec(field(j, "c1", path), at(path, "c1")), vec(field(j, "H", path), at(path, "H")),
                       vec(field(j, "pt", path), at(path, "pt")));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

CohClass class_from_json(const json& j, const CohRing& R, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_class(j.get<std::string>(), R);
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
    }
    if (j.is_number_integer()) return R.scale(R.unit(), Rat(j.get<long>()));
    if (!j.is_array() || static_cast<int>(j.size()) != R.size())
        throw SchemaError(path, "expected a class expression or " + std::to_string(R.size()) + " coefficients");
    CohClass c;
    for (size_t i = 0; i < j.size(); ++i) c.push_back(rat_from_json(j[i], at(path, i)));
    return c;
}

Mono mono_from_json(const std::string& s, const CohRing& R, const std::string& path) {
    Descendent d;
    try {
        d = parse_expr(s, R);
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
    if (d.size() != 1 || d.terms().begin()->second != 1)
        throw SchemaError(path, "\"" + s + "\" is not a single monomial in the basis");
    return d.terms().begin()->first;
}

SimplicialCone cone_from_json(const json& j, const std::string& path) {
    try {
        if (j.contains("chain")) {
            Exp r = exp_from_json(j["chain"], at(path, "chain"));
            return chain_cone(std::vector<int>(r.begin(), r.end()));
        }
        const json& g = field(j, "generators", path);
        if (!g.is_array()) throw SchemaError(at(path, "generators"), "expected an array of integer vectors");
        std::vector<Exp> gens;
        for (size_t i = 0; i < g.size(); ++i) gens.push_back(exp_from_json(g[i], at(at(path, "generators"), i)));
        return SimplicialCone(gens);
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

QuasiPoly qp_from_json(const json& j, const std::string& path) {
    if (j.is_object() && j.contains("product")) {
        const json& p = j["product"];
        if (!p.is_array() || p.empty()) throw SchemaError(at(path, "product"), "expected a non-empty array");
        std::vector<QuasiPoly> fs;
        for (size_t i = 0; i < p.size(); ++i) fs.push_back(qp_from_json(p[i], at(at(path, "product"), i)));
        return fs.size() == 1 ? fs[0] : QuasiPoly::product(fs);
    }
    if (!j.is_object()) {
        // a bare rational is a constant in one variable
        return QuasiPoly::univariate(1, {{rat_from_json(j, path)}});
    }
    const int period = int_from_json(field(j, "period", path), at(path, "period"));
    const int k = j.contains("arity") ? int_from_json(j["arity"], at(path, "arity")) : 1;
    if (period < 1 || k < 1) throw SchemaError(path, "period and arity must be positive");
    if (k > 8) throw SchemaError(at(path, "arity"), "arity above 8");
    QuasiPoly f(k, period);
    const json& cls = field(j, "classes", path);
    if (!cls.is_object()) throw SchemaError(at(path, "classes"), "expected an object keyed by residue");
    for (const auto& [key, val] : cls.items()) {
        std::string p = at(at(path, "classes"), key);
        Exp a = exp_from_key(key, p);
        if (static_cast<int>(a.size()) != k) throw SchemaError(p, "residue has the wrong length");
        for (int& x : a) x = ((x % period) + period) % period;
        Poly& poly = f.cls(a);
        if (!val.is_array()) throw SchemaError(p, "expected coefficients");
        for (size_t i = 0; i < val.size(); ++i) {
            std::string q = at(p, i);
            Exp e;
            Rat c;
            if (k == 1 && !val[i].is_object()) {
                e = Exp{static_cast<int>(i)};
                c = rat_from_json(val[i], q);
            } else {
                e = exp_from_json(field(val[i], "exp", q), at(q, "exp"));
                c = rat_from_json(field(val[i], "c", q), at(q, "c"));
                if (static_cast<int>(e.size()) != k) throw SchemaError(at(q, "exp"), "exponent has the wrong length");
                for (int x : e)
                    if (x < 0) throw SchemaError(at(q, "exp"), "negative exponent");
            }
            if (c != 0) poly[e] += c;
        }
    }
    return f;
}

json to_json(const QuasiPoly& f) {
    json out = {{"period", f.period()}};
    if (f.arity() != 1) out["arity"] = f.arity();
    json cls = json::object();
    for (size_t idx = 0; idx < f.classes().size(); ++idx) {
        const Poly& p = f.classes()[idx];
        if (p.empty()) continue;
        json terms = json::array();
        if (f.arity() == 1) {
            int deg = p.rbegin()->first[0];
            for (int e = 0; e <= deg; ++e) {
                auto it = p.find(Exp{e});
                terms.push_back(to_json(it == p.end() ? Rat(0) : it->second));
            }
        } else {
            for (const auto& [e, c] : p) terms.push_back({{"exp", e}, {"c", to_json(c)}});
        }
        cls[exp_key(f.residue(idx))] = terms;
    }
    out["classes"] = cls;
    return out;
}

FaceWeight weight_from_json(const json& j, int k, const std::string& path) {
    if (j.is_string()) {
        try {
            return builtin_weight(parse_weight_kind(j.get<std::string>()), k);
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
    }
    const json& v = field(j, "values", path);
    const size_t n = size_t{1} << k;
    if (!v.is_array() || v.size() != n)
        throw SchemaError(at(path, "values"), "expected " + std::to_string(n) + " values indexed by face bitmask");
    FaceWeight w(k);
    for (size_t s = 0; s < n; ++s) w[static_cast<unsigned>(s)] = rat_from_json(v[s], at(at(path, "values"), s));
    return w;
}

json to_json(const FaceWeight& w) {
    json v = json::array();
    for (const Rat& x : w.values()) v.push_back(to_json(x));
    return {{"values", v}};
}

WeightedConeProblem problem_from_json(const json& j) {
    SimplicialCone c = cone_from_json(field(j, "cone", ""), "/cone");
    FaceWeight w = weight_from_json(j.contains("weight") ? j["weight"] : json("standard"), c.dim(), "/weight");
    WeightedConeProblem p{c, w, std::nullopt, std::nullopt};
    if (j.contains("qp")) p.qp = qp_from_json(j["qp"], "/qp");
    if (j.contains("specialization")) p.specialization = exp_from_json(j["specialization"], "/specialization");
    try {
        p.validate();
    } catch (const Error& e) {
        throw SchemaError("", e.what());
    }
    return p;
}

RationalFn ratfn_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) return RationalFn::constant(1, rat_from_json(j, path));
    int scale = 1;
    if (j.contains("variable")) {
        if (!j["variable"].is_string()) throw SchemaError(at(path, "variable"), "expected \"u\" or \"q\"");
        std::string v = j["variable"].get<std::string>();
        if (v == "q")
            scale = 2;
        else if (v != "u")
            throw SchemaError(at(path, "variable"), "expected \"u\" or \"q\"");
    }
    LaurentPoly num(1);
    const json& n = field(j, "numerator", path);
    if (!n.is_array()) throw SchemaError(at(path, "numerator"), "expected [[exponent, coefficient], ...]");
    for (size_t i = 0; i < n.size(); ++i) {
        std::string p = at(at(path, "numerator"), i);
        if (!n[i].is_array() || n[i].size() != 2) throw SchemaError(p, "expected [exponent, coefficient]");
        num.add_term(Exp{scale * int_from_json(n[i][0], at(p, 0))}, rat_from_json(n[i][1], at(p, 1)));
    }
    RationalFn f(num);
    if (j.contains("denominator")) {
        const json& d = j["denominator"];
        if (!d.is_array()) throw SchemaError(at(path, "denominator"), "expected an array of factors");
        for (size_t i = 0; i < d.size(); ++i) {
            std::string p = at(at(path, "denominator"), i);
            int b = int_from_json(field(d[i], "b", p), at(p, "b"));
            Rat angle = d[i].contains("angle") ? rat_from_json(d[i]["angle"], at(p, "angle")) : Rat(0);
            int mult = d[i].contains("mult") ? int_from_json(d[i]["mult"], at(p, "mult")) : 1;
            if (b == 0 || mult < 1) throw SchemaError(p, "factor needs b != 0 and mult >= 1");
            f.divide_by(Exp{scale * b}, frac(angle), mult);
        }
    }
    return f;
}

json to_json(const RationalFn& f) {
    if (f.nvars() != 1) throw Error("only univariate functions serialize");
    json num = json::array();
    for (const auto& [e, c] : f.numerator().terms()) {
        if (!c.is_rational()) throw Error("numerator has irrational coefficients");
        num.push_back({e[0], to_json(c.rational())});
    }
    json den = json::array();
    for (const auto& [fac, mult] : f.denominator()) den.push_back({{"b", fac.b[0]}, {"angle", to_json(fac.angle)}, {"mult", mult}});
    return {{"variable", "u"}, {"numerator", num}, {"denominator", den}};
}

RationalFn value_from_json(const json& j, const std::string& path) { return ratfn_from_json(j, path); }

std::string q_exponent(int e) {
    if (e == 0) return "";
    if (e == 2) return "q";
    if (e % 2 == 0) return "q^" + std::to_string(e / 2);
    return "q^(" + std::to_string(e) + "/2)";
}

std::string q_string(const RationalFn& f) {
    if (f.nvars() != 1) throw Error("q display needs a univariate function");
    return render(f.reduced(), q_exponent);
}

std::string x_string(const RationalFn& f, const std::string& var) {
    if (f.nvars() != 1) return f.str();
    return render(f.reduced(), [&](int e) {
        if (e == 0) return std::string();
        if (e == 1) return var;
        return var + "^" + std::to_string(e);
    });
}

CurveLattice lattice_from_json(const json& j, const CohRing* R, const std::string& path) {
    CurveLattice lat;
    lat.H = exp_from_json(field(j, "H", path), at(path, "H"));
    lat.c1 = exp_from_json(field(j, "c1", path), at(path, "c1"));
    if (j.contains("curves")) {
        if (!R) throw SchemaError(at(path, "curves"), "curve classes need a ring");
        const json& c = j["curves"];
        if (!c.is_array()) throw SchemaError(at(path, "curves"), "expected an array of classes");
        for (size_t i = 0; i < c.size(); ++i) lat.curves.push_back(class_from_json(c[i], *R, at(at(path, "curves"), i)));
    }
    try {
        lat.validate();
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
    return lat;
}

WCInput wcinput_from_json(const json& j, const CohRing& R) {
    WCInput in;
    in.lattice = lattice_from_json(field(j, "lattice", ""), &R, "/lattice");
    in.beta = exp_from_json(field(j, "beta", ""), "/beta");
    const json& D = field(j, "D", "");
    if (!D.is_string()) throw SchemaError("/D", "expected a descendent expression");
    try {
        in.D = parse_expr(D.get<std::string>(), R);
    } catch (const Error& e) {
        throw SchemaError("/D", e.what());
    }
    if (j.contains("M")) {
        if (!j["M"].is_object()) throw SchemaError("/M", "expected an object keyed by curve class");
        for (const auto& [key, val] : j["M"].items()) {
            std::string p = "/M/" + key;
            QuasiFunctional F;
            F.degree = degree_field(val, 2, p);
            F.sheaf_supported = bool_or(val, "sheaf_supported", true, p);
            F.symmetric = bool_or(val, "symmetric", false, p);
            const json& vals = field(val, "values", p);
            if (!vals.is_object()) throw SchemaError(at(p, "values"), "expected an object keyed by monomial");
            for (const auto& [mono, qp] : vals.items())
                F.table.insert_or_assign(mono_from_json(mono, R, at(at(p, "values"), mono)), qp_from_json(qp, at(at(p, "values"), mono)));
            in.M.insert_or_assign(exp_from_key(key, p), F);
        }
    }
    if (j.contains("L")) {
        if (!j["L"].is_object()) throw SchemaError("/L", "expected an object keyed by curve class");
        for (const auto& [key, val] : j["L"].items()) {
            std::string p = "/L/" + key;
            Functional base;
            base.degree = degree_field(val, std::nullopt, p);
            base.sheaf_supported = bool_or(val, "sheaf_supported", false, p);
            base.pt_normalized = bool_or(val, "pt_normalized", false, p);
            const json& vals = field(val, "values", p);
            if (!vals.is_object()) throw SchemaError(at(p, "values"), "expected an object keyed by m");
            std::map<int, Functional> tab;
            for (const auto& [m, entries] : vals.items()) {
                std::string q = at(at(p, "values"), m);
                Rat n0 = 2 * rat_from_json(json(m), q);
                if (n0.get_den() != 1) throw SchemaError(q, "m must be a half-integer");
                Functional F = base;
                if (!entries.is_object()) throw SchemaError(q, "expected an object keyed by monomial");
                for (const auto& [mono, v] : entries.items())
                    F.table[mono_from_json(mono, R, at(q, mono))] = rat_from_json(v, at(q, mono));
                tab.emplace(static_cast<int>(n0.get_num().get_si()), F);
            }
            in.L[exp_from_key(key, p)] = tab;
        }
    }
    in.l_symmetric = bool_or(j, "l_symmetric", false, "");
    return in;
}

CohRing document_ring(const json& j) {
    if (j.is_object() && j.contains("ring")) return ring_from_json(j["ring"], "/ring");
    return projective_space(3);
}

NovikovSeries novikov_from_json(const json& entries, const json& truncation, const std::string& path) {
    const std::string tp = "/truncation";
    Exp beta_max = exp_from_json(field(truncation, "beta_max", tp), tp + "/beta_max");
    int n = truncation.contains("insertions") ? int_from_json(truncation["insertions"], tp + "/insertions") : 0;
    int t_max = truncation.contains("t_max") ? int_from_json(truncation["t_max"], tp + "/t_max") : 0;
    NovikovSeries z = [&] {
        try {
            return NovikovSeries(beta_max, n, t_max);
        } catch (const Error& e) {
            throw SchemaError(tp, e.what());
        }
    }();
    if (!entries.is_array()) throw SchemaError(path, "expected an array of {beta, t, value}");
    for (size_t i = 0; i < entries.size(); ++i) {
        std::string p = at(path, i);
        NovikovSeries::Key k{exp_from_json(field(entries[i], "beta", p), at(p, "beta")),
                             entries[i].contains("t") ? exp_from_json(entries[i]["t"], at(p, "t")) : Exp(n, 0)};
        if (!z.in_range(k)) throw SchemaError(p, "term outside the truncation");
        z.add(k, value_from_json(field(entries[i], "value", p), at(p, "value")));
    }
    return z;
}

json to_json(const NovikovSeries& z) {
    json out = json::array();
    for (const auto& [k, c] : z.terms())
        out.push_back({{"beta", k.beta}, {"t", k.t}, {"value", q_string(c)}, {"rational_function", to_json(c)}});
    return out;
}

}  // namespace cw
