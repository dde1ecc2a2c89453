#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohcfg/coherent_configuration.hpp"
#include "cohcfg/lie.hpp"
#include "cohcfg/perm.hpp"
#include "cohcfg/wl.hpp"

namespace cohcfg {

struct IsoBudget {
    std::size_t max_points = 120;  // point-count cap for the search
    std::size_t max_depth = 3;     // individualizations per branch
};

/// Iso(x, x', phi) = every point bijection f with s^f = phi(s) for all
/// classes s, by individualization-refinement: individualize a point of the
/// first smallest non-singleton fiber, mirror the candidates in x', refine
/// in lockstep, read off forced bijections at complete refinements. Every
/// returned bijection is rechecked against phi post hoc; the result is
/// sorted. Throws BudgetExceeded when the tree needs more than
/// budget.max_depth individualizations or n > budget.max_points.
std::vector<Permutation> iso_set(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                 const std::vector<Color>& phi, const IsoBudget& budget = {});

/// Aut(x) = iso(x, x, id).
PermutationGroup aut_group(const CoherentConfiguration& x, const IsoBudget& budget = {});

struct RecognitionReport {
    bool accepted = false;
    int stage_failed = 0; // 1..6 when rejected
    std::string reason;
    std::size_t n = 0;
    std::size_t rank = 0;
    std::optional<std::pair<std::size_t, std::size_t>> base_pair;
    std::uint64_t group_order = 0;
    std::uint64_t socle_order = 0;
    std::vector<LieCandidate> candidate_families;
    std::optional<LieCandidate> accepted_family;
    std::uint64_t H_order = 0, P_order = 0, B_order = 0, N_order = 0;
    std::vector<std::string> caveats;
};

/// The six-step pipeline: WL closure; search for a base pair (else b > 2);
/// automorphism group (must be transitive and simple, or an extension of a
/// unique nonabelian simple minimal normal subgroup); match the simple order
/// against the Lie order formulas over l <= 8, q <= 64; find a Sylow
/// p-subgroup with H cap P = 1, H <= N_G(P), |N_G(P)| = |H||P|; accept with
/// B = N_G(P), N = N_G(H).
RecognitionReport recognize_cartan(const ColoredGraph& d, std::size_t max_points = 120);

struct IsoGraphsResult {
    bool algebraically_isomorphic = false;
    std::string incompatibility; // set when not algebraically isomorphic
    std::vector<Permutation> isomorphisms;
};

/// Compatible closure then iso_set. An Incompatible closure certifies
/// non-isomorphism; an empty isomorphism list with a compatible closure only
/// reports that no combinatorial isomorphism exists over this algebraic one.
IsoGraphsResult iso_graphs(const ColoredGraph& d, const ColoredGraph& d2, const IsoBudget& budget = {});
IsoGraphsResult iso_graphs(const ColoredGraph& d, const ColoredGraph& d2, const std::vector<Color>& psi,
                           const IsoBudget& budget = {});

} // namespace cohcfg
