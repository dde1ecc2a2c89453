#pragma once

#include <string>

#include <json.hpp>

#include "cohcfg/analysis.hpp"
#include "cohcfg/cartan.hpp"
#include "cohcfg/coherent_configuration.hpp"
#include "cohcfg/colored_graph.hpp"
#include "cohcfg/lie.hpp"
#include "cohcfg/perm.hpp"
#include "cohcfg/recognition.hpp"
#include "cohcfg/wl.hpp"

namespace cohcfg {

// Wire formats. Graphs: {"n": int, "colors": [[int; n]; n]}, row major.
// Configurations add {"rank", "transpose", "diagonal_colors"}; the derived
// fields are validated against the graph on input. All emitted objects have
// sorted keys and fixed array orders, so equal values serialize bytewise
// equal.

nlohmann::json to_json(const ColoredGraph& g);
ColoredGraph colored_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoherentConfiguration& x);
CoherentConfiguration config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ViolationReport& v);
nlohmann::json to_json(const RefinementTrace& t);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const PermutationGroup& g);
nlohmann::json to_json(const CartanSchemeBundle& b);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const LieBoundReport& r);
nlohmann::json to_json(const RecognitionReport& r);
nlohmann::json to_json(const SeparabilityCertificate& c);

/// Parses either a bare colored graph or a serialized configuration, as the
/// CLI accepts both.
ColoredGraph graph_from_file(const std::string& path);
nlohmann::json json_from_file(const std::string& path);
void json_to_file(const nlohmann::json& j, const std::string& path);

} // namespace cohcfg
