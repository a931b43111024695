#include "conewall/commands.hpp"

#include "conewall/expr.hpp"

#include <algorithm>

namespace cw {

namespace {

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

json series_json(const LaurentSeries& s, bool in_q) {
    json out = json::array();
    for (const auto& [e, c] : s.coeffs()) {
        if (c.is_zero()) continue;
        json key;
        if (s.nvars() != 1)
            key = e;
        else if (in_q)
            key = to_string(ratio(e[0], 2));
        else
            key = e[0];
        out.push_back({key, c.is_rational() ? json(to_string(c.rational())) : json(c.str())});
    }
    return out;
}

int order_field(const json& in, std::optional<int> flag, int dflt) {
    int order = dflt;
    if (flag)
        order = *flag;
    else if (in.contains("order")) {
        if (!in["order"].is_number_integer()) throw SchemaError("/order", "expected an integer");
        order = in["order"].get<int>();
    }
    if (order > max_order())
        throw SchemaError("/order", "order " + std::to_string(order) + " above the limit " + std::to_string(max_order()) +
                                        " (CONEWALL_MAX_ORDER)");
    return order;
}

CohClass chern_from_json(const json& j, const CohRing& R, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected {rank, divisor, curve, m}");
    Rat rank = j.contains("rank") ? rat_from_json(j["rank"], path + "/rank") : Rat(0);
    CohClass D = j.contains("divisor") ? class_from_json(j["divisor"], R, path + "/divisor") : R.zero();
    CohClass b = j.contains("curve") ? class_from_json(j["curve"], R, path + "/curve") : R.zero();
    Rat m = j.contains("m") ? rat_from_json(j["m"], path + "/m") : Rat(0);
    return chern_char(R, rank, D, b, m);
}

// with the specialization applied when the problem has one
RationalFn problem_series(const WeightedConeProblem& p) {
    RationalFn z = weighted_qp_series(p);
    if (p.specialization) z = specialize(z, *p.specialization).cancelled();
    return z;
}

}  // namespace

Outcome run_cone_series(const json& in, std::optional<int> order_flag) {
    WeightedConeProblem p = problem_from_json(in);
    const int order = order_field(in, order_flag, 10);
    RationalFn z = problem_series(p);
    Outcome out;
    bool uni = z.nvars() == 1;
    out.report["closed_form"] = uni ? x_string(z, "q") : z.str();
    LaurentSeries s = uni ? series_expand(z, order) : series_expand(z, order, expansion_grading(p.cone));
    out.report["series"] = series_json(s, false);
    out.report["order"] = order;
    ReciprocityReport rec = check_reciprocity(p);
    out.report["reciprocity"] = verdict(rec.pass);
    if (uni) {
        json poles = json::array();
        for (const auto& e : pole_report(z)) poles.push_back({{"N", e.N}, {"angle", to_string(e.angle)}, {"mult", e.mult}});
        out.report["poles"] = poles;
    }
    if (in.value("brute_force", false)) {
        LaurentSeries b = brute_force_series(p, order);
        bool same = true;
        for (const auto& [e, c] : b.coeffs()) same = same && s.coeff(e) == c;
        for (const auto& [e, c] : s.coeffs()) same = same && b.coeff(e) == c;
        out.report["brute_force"] = verdict(same);
        if (!same) out.status = 1;
    }
    if (!rec.pass) out.status = 1;
    return out;
}

Outcome run_reciprocity(const json& in) {
    WeightedConeProblem p = problem_from_json(in);
    ReciprocityReport r = in.contains("claimed_dual")
                              ? check_reciprocity(p, weight_from_json(in["claimed_dual"], p.cone.dim(), "/claimed_dual"))
                              : check_reciprocity(p);
    Outcome out;
    out.report = {{"reciprocity", verdict(r.pass)}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()},
                  {"dual_weight", to_json(dual_weight(p.weight))}};
    out.status = r.pass ? 0 : 1;
    return out;
}

Outcome run_wallcross(const json& in) {
    CohRing R = document_ring(in);
    WCInput w = wcinput_from_json(in, R);
    PTSeries pt = assemble_pt(build_assembly(w, R));
    const int order = order_field(in, std::nullopt, 6);
    Outcome out;
    const bool fe = check_functional_equation(pt.z, pt.parity);
    const bool within = poles_within(pt.z, w.lattice, w.beta);
    out.report["closed_form"] = q_string(pt.z);
    out.report["rational_function"] = to_json(pt.z);
    out.report["parity"] = pt.parity;
    out.report["functional_equation"] = verdict(fe);
    out.report["poles"] = minus_q_orders(pt.z);
    out.report["pole_containment"] = verdict(within);
    out.report["coefficients"] = series_json(series_expand(pt.z, order), true);
    out.status = fe && within ? 0 : 1;
    return out;
}

Outcome run_invert(const json& in) {
    RationalFn z(1);
    int d_beta = 0;
    int period = 0;
    if (in.contains("pt")) {
        z = ratfn_from_json(in["pt"], "/pt");
        if (!in.contains("d_beta")) throw SchemaError("/d_beta", "missing field");
        if (!in["d_beta"].is_number_integer()) throw SchemaError("/d_beta", "expected an integer");
        d_beta = in["d_beta"].get<int>();
    } else if (in.contains("input")) {
        const json& doc = in["input"];
        CohRing R = document_ring(doc);
        WCInput w = wcinput_from_json(doc, R);
        z = assemble_pt(build_assembly(w, R)).z;
        d_beta = static_cast<int>(w.lattice.d(w.beta));
        period = static_cast<int>(lcm(2, w.lattice.h_degree(w.beta)));
    } else {
        throw SchemaError("/pt", "need \"pt\" (a rational function in u) or \"input\" (a wall-crossing input)");
    }
    if (!in.contains("window") || !in["window"].is_array() || in["window"].size() != 2)
        throw SchemaError("/window", "expected [m_min, m_max]");
    Rat lo = rat_from_json(in["window"][0], "/window/0"), hi = rat_from_json(in["window"][1], "/window/1");
    if (!in.contains("degree_bound") || !in["degree_bound"].is_number_integer())
        throw SchemaError("/degree_bound", "expected an integer");
    if (in.contains("period")) {
        if (!in["period"].is_number_integer()) throw SchemaError("/period", "expected an integer");
        period = in["period"].get<int>();
    }
    if (period == 0) throw SchemaError("/period", "missing field");
    ExtractResult r = extract_L(z, d_beta, lo, hi, in["degree_bound"].get<int>(), period);
    Outcome out;
    json L = json::object();
    for (const auto& [m, v] : r.L) L[to_string(m)] = to_string(v);
    out.report["L"] = L;
    out.report["bracket"] = to_json(r.bracket);
    return out;
}

Outcome run_primary(const json& in) {
    Outcome out;
    if (in.contains("tuple_identity")) {
        const json& t = in["tuple_identity"];
        int k_max = t.value("k_max", 4);
        if (k_max < 0 || k_max > 6) throw SchemaError("/tuple_identity/k_max", "expected 0..6");
        json rows = json::array();
        for (int k = 0; k <= k_max; ++k) {
            RationalFn z = primary_tuple_series(k);
            bool ok = rf_equal(z, primary_tuple_closed_form(k));
            rows.push_back({{"k", k}, {"series", q_string(z)}, {"identity", verdict(ok)}});
            if (!ok) out.status = 1;
        }
        out.report["tuple_identity"] = rows;
        return out;
    }
    const json& trunc = in.contains("truncation") ? in["truncation"] : throw SchemaError("/truncation", "missing field");
    if (!in.contains("lattice")) throw SchemaError("/lattice", "missing field");
    CurveLattice lat = lattice_from_json(in["lattice"], nullptr, "/lattice");
    NovikovSeries zm = novikov_from_json(in.value("Zm", json::array()), trunc, "/Zm");
    NovikovSeries zl = novikov_from_json(in.value("Zl", json::array()), trunc, "/Zl");
    if (zl.constant_term().is_zero()) {
        NovikovSeries::Key one{Exp(zl.beta_max().size(), 0), Exp(zl.n_insertions(), 0)};
        zl.add(one, RationalFn::constant(1, 1));
    }
    NovikovSeries pt = primary_exp(zm, zl, lat);
    NovikovSeries conn = connected_log(pt);
    const bool round = novikov_exp(conn) == pt;
    out.report["Zpt"] = to_json(pt);
    out.report["connected"] = to_json(conn);
    out.report["log_exp_roundtrip"] = verdict(round);
    json rat = json::array();
    for (const auto& [k, c] : conn.terms()) {
        long d = lat.d(k.beta);
        if (d < 1) continue;
        RationalityReport r = strong_rationality_check(c, static_cast<int>(d));
        rat.push_back({{"beta", k.beta}, {"t", k.t}, {"d_beta", d}, {"strong_rationality", verdict(r.pass)},
                       {"gv_divisible", r.gv_divisible}});
    }
    out.report["rationality"] = rat;
    out.status = round ? 0 : 1;
    return out;
}

Outcome run_descendent(const json& in) {
    CohRing R = document_ring(in);
    if (!in.contains("D") || !in["D"].is_string()) throw SchemaError("/D", "expected a descendent expression");
    std::vector<std::string> warnings;
    Descendent D;
    try {
        D = parse_expr(in["D"].get<std::string>(), R, &warnings);
    } catch (const Error& e) {
        throw SchemaError("/D", e.what());
    }
    const std::string op = in.value("op", std::string("normal_form"));
    auto s_field = [&] {
        if (!in.contains("s") || !in["s"].is_number_integer()) throw SchemaError("/s", "expected an integer");
        return in["s"].get<int>();
    };
    Outcome out;
    out.report["D"] = to_string(D, R);
    if (op == "normal_form") {
        out.report["result"] = to_string(D, R);
    } else if (op == "delta_star") {
        out.report["result"] = to_string(delta_star(D), R);
    } else if (op == "r_minus1") {
        out.report["result"] = to_string(r_minus1(D), R);
    } else if (op == "sigma_star") {
        out.report["result"] = to_string(sigma_star(D), R);
    } else if (op == "delta_s") {
        int s = s_field();
        if (in.contains("reduce")) {
            const json& red = in["reduce"];
            if (!red.is_object() || !red.contains("left") || !red.contains("right"))
                throw SchemaError("/reduce", "expected {left, right}");
            ThetaClasses theta(R, chern_from_json(red["left"], R, "/reduce/left"), chern_from_json(red["right"], R, "/reduce/right"));
            out.report["result"] = to_string(delta_s(s, D, theta), R);
        } else {
            out.report["result"] = to_string(delta_s(s, D, R), R);
        }
    } else if (op == "parity_check") {
        int s = s_field();
        ThetaClasses theta(R);
        TensorDescendent lhs = delta_star(delta_s(s, D, theta));
        TensorDescendent rhs = delta_s(s, delta_star(D), theta);
        bool ok = lhs == ((s + 1) % 2 ? rhs.scaled(-1) : rhs);
        out.report["parity"] = verdict(ok);
        out.status = ok ? 0 : 1;
    } else if (op == "bracket_point") {
        if (!in.contains("alpha")) throw SchemaError("/alpha", "missing field");
        CohClass alpha = chern_from_json(in["alpha"], R, "/alpha");
        bool sheaf = in.value("sheaf_supported", true);
        out.report["result"] = to_string(bracket_form(alpha, sheaf, point_functional(R), D, R), R);
    } else {
        throw SchemaError("/op", "unknown op \"" + op +
                                     "\"; expected normal_form, delta_star, r_minus1, sigma_star, delta_s, parity_check or bracket_point");
    }
    if (!warnings.empty()) out.report["warnings"] = warnings;
    return out;
}

namespace {

Outcome check_golden() {
    Outcome o = run_wallcross(fixture("p3-lines-ch7"));
    RationalFn z = ratfn_from_json(o.report["rational_function"], "");
    bool closed = rf_equal(z, golden_p3_closed_form());
    LaurentSeries s = series_expand(z, 2);
    bool coeffs = s.coeff(-2) == CycNum(ratio(-1, 9)) && s.coeff(0) == CycNum(ratio(5, 18)) && s.coeff(2) == CycNum(ratio(11, 9));
    bool fe = check_functional_equation(z, 1);
    o.report["golden_closed_form"] = verdict(closed);
    o.report["golden_coefficients"] = verdict(coeffs);
    o.report["golden_sign"] = verdict(fe && o.report["parity"] == 1);
    if (!closed || !coeffs || !fe) o.status = 1;
    return o;
}

Outcome check_ring() {
    CohRing R = ring_from_json(fixture("p3-ring"), "");
    Outcome o;
    const CohClass& H = R.hyperplane();
    bool top = R.integrate(R.power(H, 3)) == 1;
    bool c1 = R.c1() == R.scale(H, 4);
    // td from c(TP^3) = (1+H)^4: 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24
    CohClass c1c = R.scale(H, 4), c2 = R.scale(R.power(H, 2), 6);
    CohClass td = R.unit();
    td = R.add(td, R.scale(c1c, Rat(1, 2)));
    td = R.add(td, R.scale(R.add(R.mul(c1c, c1c), c2), Rat(1, 12)));
    td = R.add(td, R.scale(R.mul(c1c, c2), Rat(1, 24)));
    bool tdok = R.td() == td && td == CohClass{1, 2, ratio(11, 6), 1};
    bool same = R.td() == projective_space(3).td() && R.integrate(R.pt()) == 1;
    o.report = {{"integral_H3", verdict(top)}, {"c1", verdict(c1)}, {"td", verdict(tdok)}, {"builtin_agrees", verdict(same)}};
    o.status = top && c1 && tdok && same ? 0 : 1;
    return o;
}

}  // namespace

Outcome run_selftest(const std::string& name) {
    if (name == "all") {
        Outcome all;
        for (const auto& n : fixture_names()) {
            Outcome o = run_selftest(n);
            all.report[n] = {{"status", verdict(o.status == 0)}, {"report", o.report}};
            all.status = std::max(all.status, o.status);
        }
        return all;
    }
    if (name == "p3-lines-ch7" || name == "golden-p3-lines") return check_golden();
    if (name == "p3-ring") return check_ring();
    if (name == "chain-ord-k3") {
        json f = fixture(name);
        Outcome o = run_reciprocity(f);
        o.report.erase("lhs");
        o.report.erase("rhs");
        Outcome c = run_cone_series(f, 25);
        o.report["closed_form"] = c.report["closed_form"];
        LaurentSeries b = brute_force_series(problem_from_json(f), 25);
        LaurentSeries s = series_expand(problem_series(problem_from_json(f)), 25);
        bool same = true;
        for (int e = 0; e <= 25; ++e) same = same && b.coeff(e) == s.coeff(e);
        o.report["brute_force"] = verdict(same);
        o.status = std::max(o.status, same ? 0 : 1);
        return o;
    }
    if (name == "primary-exp-identity") return run_primary(fixture(name));
    fixture(name);
    throw Error("no self-test for \"" + name + "\"");
}

}  // namespace cw
