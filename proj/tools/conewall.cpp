#include "conewall/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cw;

namespace {

// a path, "-" for stdin, inline JSON, or fixture:<name>
json load(const std::string& src) {
    if (src.rfind("fixture:", 0) == 0) return fixture(src.substr(8));
    std::string text;
    if (src == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!src.empty() && (src[0] == '{' || src[0] == '[')) {
        text = src;
    } else {
        std::ifstream f(src);
        if (!f) throw Error("cannot read " + src);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

void print_text(const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
        return;
    }
    std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted cone series and wall-crossing assembly"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string input;
    std::optional<int> order;
    bool invert = false;
    std::string name = "all";

    auto* cone = app.add_subcommand("cone-series", "closed form, series and reciprocity of a weighted cone problem");
    cone->add_option("input", input, "problem JSON: path, -, inline or fixture:<name>")->required();
    cone->add_option("--order", order, "series truncation");
    auto* rec = app.add_subcommand("reciprocity-check", "Z(1/x) against the dual weight and dual quasi-polynomial");
    rec->add_option("input", input)->required();
    auto* wc = app.add_subcommand("wallcross", "assemble the PT series from M and L data");
    wc->add_option("input", input)->required();
    wc->add_flag("--invert", invert, "recover L values and the bracket from a closed form");
    auto* prim = app.add_subcommand("primary", "exponential formula for primary insertions");
    prim->add_option("input", input)->required();
    auto* desc = app.add_subcommand("descendent", "descendent algebra operations");
    desc->add_option("input", input)->required();
    auto* self = app.add_subcommand("selftest", "run the shipped fixtures");
    self->add_option("name", name, "fixture name, golden-p3-lines or all");
    auto* fix = app.add_subcommand("fixture", "print a shipped fixture");
    fix->add_option("name", name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Outcome out;
        if (*cone)
            out = run_cone_series(load(input), order);
        else if (*rec)
            out = run_reciprocity(load(input));
        else if (*wc)
            out = invert ? run_invert(load(input)) : run_wallcross(load(input));
        else if (*prim)
            out = run_primary(load(input));
        else if (*desc)
            out = run_descendent(load(input));
        else if (*self)
            out = run_selftest(name);
        else if (*fix)
            out.report = fixture(name);
        if (format == "json")
            std::cout << out.report.dump(2) << "\n";
        else
            print_text(out.report, "");
        return out.status;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
