#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohcfg/coherent_configuration.hpp"

namespace cohcfg {

/// Indistinguishing numbers: c(r) = sum_s c_{s s*}^r, cross-checked against
/// the direct count of {gamma : r(gamma,alpha) = r(gamma,beta)} for a
/// representative pair of each class. Requires a homogeneous configuration.
struct IndistinguishingNumbers {
    std::vector<std::size_t> per_class; // c(r) for every class, incl. the diagonal
    std::size_t c_max;                  // c(X) = max over non-diagonal classes (0 if rank 1)
};
IndistinguishingNumbers indistinguishing_numbers(const CoherentConfiguration& x);

/// S_max and the union relation s_max (symmetric). S_max consists of the
/// non-diagonal classes of maximal valency.
struct SmaxRelation {
    std::vector<Color> classes;                   // S_max
    std::size_t k;                                // the maximal valency
    bool connected;                               // of the graph (Omega, s_max)
    std::vector<std::uint32_t> component_of;      // point -> s_max component
};
SmaxRelation smax_relation(const CoherentConfiguration& x);

/// The side-color graph on alpha s_max: vertices beta, gamma are adjacent iff
/// the triangle over (alpha, beta, gamma) is forced, i.e.
/// c_{r(alpha,beta) r(beta,gamma)}^{r(alpha,gamma)} = 1.
struct SalphaGraph {
    std::vector<std::size_t> vertices;              // alpha s_max, ascending
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool connected;
    std::vector<std::uint32_t> component_of;        // per vertex position
};
SalphaGraph salpha_graph(const CoherentConfiguration& x, std::size_t alpha,
                         const IntersectionTensor& tensor);

/// p_u(delta): pairs (beta, gamma) in alpha u x alpha u with beta != gamma
/// and r(beta,delta) = r(gamma,delta); computed both directly and via
/// sum_w c_{uw}^v (c_{uw}^v - 1), the two required equal.
std::size_t pu_profile(const CoherentConfiguration& x, std::size_t alpha, Color u, std::size_t delta,
                       const IntersectionTensor& tensor);

struct StructureReport {
    std::size_t n = 0, rank = 0, k = 0, c = 0;
    bool inequality_holds = false;       // 2c(k-1) < n
    bool smax_connected = false;
    std::vector<bool> salpha_connected_per_point;
    std::optional<std::size_t> base_number;
    std::vector<bool> one_regular_extensions;  // per point (when computed)
    bool checks_run = false;                   // theorem checks fired (hypothesis held, k >= 2)
    std::vector<std::string> findings;         // witnessed theorem-check failures, never silent
};

/// Evaluates 2c(k-1) < n and, when it holds with k >= 2, asserts the
/// consequences (s_max and every s_alpha connected, |alpha s_max| > n/2,
/// every one-point extension 1-regular, base number <= 2). Failures are
/// reported as findings, not exceptions.
StructureReport criterion_report(const CoherentConfiguration& x);

/// Smallest point set whose extension is complete, by breadth-first search
/// over subsets in lexicographic order, sizes 0..cap. nullopt: exceeds cap.
std::optional<std::size_t> base_number(const CoherentConfiguration& x, std::size_t cap = 5);

struct SeparabilityCertificate {
    int m;                                   // 1 or 2
    std::optional<std::size_t> witness_point; // for m = 2: the extension point
    std::vector<std::size_t> regular_points;  // regular points of the (extended) configuration
};

/// m = 1: the configuration itself must be 1-regular. m = 2: searches for a
/// point whose one-point extension is 1-regular. A nullopt result is
/// "not established", which is not a refutation.
std::optional<SeparabilityCertificate> separability_certificate(const CoherentConfiguration& x, int m);

} // namespace cohcfg
