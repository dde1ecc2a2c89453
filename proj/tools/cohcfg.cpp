#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohcfg/analysis.hpp"
#include "cohcfg/cartan.hpp"
#include "cohcfg/json_io.hpp"
#include "cohcfg/lie.hpp"
#include "cohcfg/recognition.hpp"
#include "cohcfg/util.hpp"
#include "cohcfg/wl.hpp"

using nlohmann::json;
using namespace cohcfg;

namespace {

// exit codes: 0 positive, 1 negative but valid, 2 budget or input error
constexpr int kOk = 0, kNegative = 1, kError = 2;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        json_to_file(j, out_path);
}

struct Options {
    std::string input, input2, out;
    std::uint32_t q = 0;
    std::string group = "sl2";
    std::string family;
    unsigned l = 0;
    std::uint64_t lie_q = 0;
    std::vector<std::size_t> points;
    int m = 2;
    std::size_t cap = 5;
    bool trace = false;
    bool all = false;
    unsigned threads = 1;
};

int run(const std::string& cmd, const Options& opt) {
    if (cmd == "build-cartan") {
        const auto bundle = cartan_scheme(opt.q, opt.group);
        emit(to_json(bundle), opt.out);
        return kOk;
    }
    if (cmd == "wl-close") {
        const auto g = graph_from_file(opt.input);
        const auto closure = wl_closure(g);
        json j = to_json(closure.config);
        if (opt.trace) j["trace"] = to_json(closure.trace);
        emit(j, opt.out);
        return kOk;
    }
    if (cmd == "extend") {
        const auto g = graph_from_file(opt.input);
        auto verified = verify_coherence(g, opt.threads);
        if (auto* v = std::get_if<ViolationReport>(&verified)) {
            emit(json{{"error", "input is not coherent"}, {"violation", to_json(*v)}}, opt.out);
            return kError;
        }
        const auto ext = point_extension(std::get<CoherentConfiguration>(verified), opt.points);
        emit(to_json(ext), opt.out);
        return kOk;
    }
    if (cmd == "m-extend") {
        const auto x = require_coherent(graph_from_file(opt.input));
        emit(to_json(m_extension(x, opt.m)), opt.out);
        return kOk;
    }
    if (cmd == "analyze") {
        const auto g = graph_from_file(opt.input);
        auto verified = verify_coherence(g, opt.threads);
        if (auto* v = std::get_if<ViolationReport>(&verified)) {
            emit(json{{"error", "input is not coherent"}, {"violation", to_json(*v)}}, opt.out);
            return kError;
        }
        emit(to_json(criterion_report(std::get<CoherentConfiguration>(verified))), opt.out);
        return kOk;
    }
    if (cmd == "base-number") {
        const auto x = require_coherent(graph_from_file(opt.input));
        const auto b = base_number(x, opt.cap);
        json j{{"cap", opt.cap}};
        j["base_number"] = b ? json(*b) : json(nullptr);
        emit(j, opt.out);
        return b ? kOk : kNegative;
    }
    if (cmd == "recognize") {
        const auto rep = recognize_cartan(graph_from_file(opt.input));
        emit(to_json(rep), opt.out);
        return rep.accepted ? kOk : kNegative;
    }
    if (cmd == "iso") {
        const auto result = iso_graphs(graph_from_file(opt.input), graph_from_file(opt.input2));
        json j{{"algebraically_isomorphic", result.algebraically_isomorphic},
               {"count", result.isomorphisms.size()}};
        if (!result.algebraically_isomorphic) j["incompatibility"] = result.incompatibility;
        json maps = json::array();
        for (const auto& f : result.isomorphisms) {
            maps.push_back(to_json(f));
            if (!opt.all) break;
        }
        j["isomorphisms"] = std::move(maps);
        emit(j, opt.out);
        return result.isomorphisms.empty() ? kNegative : kOk;
    }
    if (cmd == "aut") {
        const auto x = require_coherent(graph_from_file(opt.input));
        emit(to_json(aut_group(x)), opt.out);
        return kOk;
    }
    if (cmd == "lie-bound") {
        const auto rep = lie_bound_check(lie_family_from_name(opt.family), opt.l, opt.lie_q);
        emit(to_json(rep), opt.out);
        return rep.holds ? kOk : kNegative;
    }
    std::cerr << "unknown subcommand\n";
    return kError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent configurations: construction, WL closure, structure analysis, recognition"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--threads", opt.threads, "worker cap for the coherence sweep")->check(CLI::PositiveNumber);

    auto* build = app.add_subcommand("build-cartan", "Cartan scheme for parameter q");
    build->add_option("--q", opt.q, "field order, 4 <= q <= 32, prime power")->required();
    build->add_option("--group", opt.group, "matrix realization: sl2 | psl2");
    build->add_option("--out", opt.out, "output file (default stdout)");

    auto* close = app.add_subcommand("wl-close", "coherent closure of a colored graph");
    close->add_option("input", opt.input, "graph json")->required();
    close->add_option("--out", opt.out, "output file");
    close->add_flag("--trace", opt.trace, "include the refinement trace");

    auto* extend = app.add_subcommand("extend", "point extension of a configuration");
    extend->add_option("input", opt.input, "configuration json")->required();
    extend->add_option("--points", opt.points, "points to individualize")->required()->delimiter(',');
    extend->add_option("--out", opt.out, "output file");

    auto* mext = app.add_subcommand("m-extend", "m-extension of a configuration (m = 2)");
    mext->add_option("input", opt.input, "configuration json")->required();
    mext->add_option("--m", opt.m, "extension dimension (only 2)");
    mext->add_option("--out", opt.out, "output file");

    auto* analyze = app.add_subcommand("analyze", "structure report with the 2c(k-1) < n criterion");
    analyze->add_option("input", opt.input, "configuration json")->required();
    analyze->add_option("--out", opt.out, "output file");

    auto* base = app.add_subcommand("base-number", "smallest complete-extension point set");
    base->add_option("input", opt.input, "configuration json")->required();
    base->add_option("--cap", opt.cap, "search size cap (default 5)");
    base->add_option("--out", opt.out, "output file");

    auto* rec = app.add_subcommand("recognize", "Cartan scheme recognition pipeline");
    rec->add_option("input", opt.input, "graph json")->required();
    rec->add_option("--out", opt.out, "output file");

    auto* iso = app.add_subcommand("iso", "isomorphisms between two colored graphs");
    iso->add_option("first", opt.input, "graph json")->required();
    iso->add_option("second", opt.input2, "graph json")->required();
    iso->add_flag("--all", opt.all, "list every isomorphism (default: first only)");
    iso->add_option("--out", opt.out, "output file");

    auto* aut = app.add_subcommand("aut", "automorphism group of a configuration");
    aut->add_option("input", opt.input, "configuration json")->required();
    aut->add_option("--out", opt.out, "output file");

    auto* lie = app.add_subcommand("lie-bound", "exact class-size inequality check");
    lie->add_option("--family", opt.family, "A 2A B C D 2D E6 2E6 E7 E8 F4 G2 3D4 2F4 2G2 2B2")->required();
    lie->add_option("--l", opt.l, "rank")->required();
    lie->add_option("--q", opt.lie_q, "field order")->required();
    lie->add_option("--out", opt.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const BudgetExceeded& e) {
        std::cout << json{{"error", e.what()}, {"required_budget", e.required}}.dump(2) << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << '\n';
        return kError;
    }
}
