#include "cohcfg/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cohcfg {

using nlohmann::json;

json to_json(const ColoredGraph& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g.color(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", g.size()}, {"colors", std::move(rows)}};
}

ColoredGraph colored_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("colors"))
        throw std::invalid_argument("graph json: need object with \"n\" and \"colors\"");
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("colors");
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("graph json: \"colors\" must be an n-row array");
    std::vector<Color> colors;
    colors.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("graph json: each row must have n entries");
        for (const auto& v : row) colors.push_back(v.get<Color>());
    }
    return ColoredGraph(n, std::move(colors));
}

json to_json(const CoherentConfiguration& x) {
    json j = to_json(x.graph());
    j["rank"] = x.rank();
    j["transpose"] = x.transpose_map();
    j["diagonal_colors"] = x.diagonal_colors();
    return j;
}

CoherentConfiguration config_from_json(const json& j) {
    CoherentConfiguration x = require_coherent(colored_graph_from_json(j));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != x.rank())
        throw std::invalid_argument("config json: stated rank disagrees with the graph");
    if (j.contains("transpose") && j.at("transpose").get<std::vector<Color>>() != x.transpose_map())
        throw std::invalid_argument("config json: stated transpose map disagrees with the graph");
    if (j.contains("diagonal_colors") &&
        j.at("diagonal_colors").get<std::vector<Color>>() != x.diagonal_colors())
        throw std::invalid_argument("config json: stated diagonal colors disagree with the graph");
    return x;
}

json to_json(const ViolationReport& v) {
    json j{{"axiom", ViolationReport::axiom_name(v.axiom)}, {"detail", v.detail}};
    if (v.triple) j["triple"] = *v.triple;
    return j;
}

json to_json(const RefinementTrace& t) {
    json names = json::array();
    for (std::uint64_t h : t.canonical_names) {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        names.push_back(buf);
    }
    return json{{"rounds", t.rounds}, {"history", t.history}, {"canonical_names", std::move(names)}};
}

json to_json(const Permutation& p) { return json(p.images()); }

json to_json(const PermutationGroup& g) {
    json gens = json::array();
    for (const auto& p : g.generators()) gens.push_back(to_json(p));
    return json{{"degree", g.degree()}, {"order", g.order()}, {"generators", std::move(gens)}};
}

json to_json(const CartanSchemeBundle& b) {
    return json{{"q", b.q},
                {"variant", b.variant},
                {"n", b.n},
                {"k", b.k},
                {"group_order", b.group_order},
                {"base_point", b.base_point},
                {"scheme", to_json(b.scheme)},
                {"subgroups",
                 json{{"H", b.H}, {"B", b.B}, {"N", b.N}, {"U", b.U}, {"V", b.V}}},
                {"tags", json{{"s1", b.s1}, {"si", b.si}, {"su", b.su}, {"sv", b.sv}}}};
}

json to_json(const StructureReport& r) {
    json j{{"n", r.n},
           {"rank", r.rank},
           {"k", r.k},
           {"c", r.c},
           {"inequality_2c_k_minus_1_lt_n", r.inequality_holds},
           {"smax_connected", r.smax_connected},
           {"salpha_connected_per_point", r.salpha_connected_per_point},
           {"checks_run", r.checks_run},
           {"findings", r.findings}};
    if (r.base_number) j["base_number"] = *r.base_number;
    if (!r.one_regular_extensions.empty()) j["one_regular_extensions"] = r.one_regular_extensions;
    return j;
}

namespace {
std::string rational_str(const BigRational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}
} // namespace

json to_json(const LieBoundReport& r) {
    return json{{"family", r.family},
                {"l", r.l},
                {"q", r.q},
                {"exceptional", r.exceptional},
                {"m_used", r.m_used},
                {"m0", rational_str(r.m0)},
                {"m", rational_str(r.m)},
                {"r_m", rational_str(r.r_m)},
                {"k", r.k.str()},
                {"w", r.w.str()},
                {"lhs", rational_str(r.lhs)},
                {"rhs", rational_str(r.rhs)},
                {"holds", r.holds},
                {"in_class", r.in_class},
                {"note", r.note}};
}

json to_json(const RecognitionReport& r) {
    json j{{"accepted", r.accepted},
           {"n", r.n},
           {"rank", r.rank},
           {"group_order", r.group_order},
           {"socle_order", r.socle_order},
           {"caveats", r.caveats}};
    if (!r.accepted) {
        j["stage_failed"] = r.stage_failed;
        j["reason"] = r.reason;
    }
    if (r.base_pair) j["base_pair"] = json::array({r.base_pair->first, r.base_pair->second});
    json cands = json::array();
    for (const auto& c : r.candidate_families)
        cands.push_back(json{{"family", lie_family_name(c.family)},
                             {"l", c.l},
                             {"q", c.q},
                             {"characteristic", c.characteristic}});
    j["candidate_families"] = std::move(cands);
    if (r.accepted_family)
        j["accepted_family"] = json{{"family", lie_family_name(r.accepted_family->family)},
                                    {"l", r.accepted_family->l},
                                    {"q", r.accepted_family->q},
                                    {"characteristic", r.accepted_family->characteristic}};
    if (r.accepted) {
        j["H_order"] = r.H_order;
        j["P_order"] = r.P_order;
        j["B_order"] = r.B_order;
        j["N_order"] = r.N_order;
    }
    return j;
}

json to_json(const SeparabilityCertificate& c) {
    json j{{"m", c.m}, {"regular_points", c.regular_points}};
    if (c.witness_point) j["witness_point"] = *c.witness_point;
    return j;
}

json json_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

ColoredGraph graph_from_file(const std::string& path) {
    return colored_graph_from_json(json_from_file(path));
}

void json_to_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace cohcfg
