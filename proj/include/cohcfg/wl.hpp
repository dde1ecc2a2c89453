#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cohcfg/coherent_configuration.hpp"

namespace cohcfg {

/// Instrumentation of a refinement run.
struct RefinementTrace {
    std::size_t rounds = 0;                       // sweeps to fixpoint, incl. the confirming one
    std::vector<std::size_t> history;             // palette size after each sweep (history[0]: initial)
    std::vector<std::uint64_t> canonical_names;   // final color -> relabeling-invariant fingerprint hash
};

struct Closure {
    CoherentConfiguration config;
    RefinementTrace trace;
};

/// Coherent closure by two-dimensional refinement: the color of (i,j) is
/// refined by the multiset over k of ordered color pairs
/// (color(i,k), color(k,j)). The diagonal is first split off from the
/// off-diagonal colors. Output colors are canonical: machine-independent
/// and equivariant under point relabeling, diagonal classes numbered first.
Closure wl_closure(const ColoredGraph& g);

/// Smallest coherent configuration above x in which every listed point is a
/// singleton fiber. Each point's loop gets a fresh color, then the coloring
/// is closed. Extension by zero points returns x unchanged.
CoherentConfiguration point_extension(const CoherentConfiguration& x, std::span<const std::size_t> points);

inline CoherentConfiguration point_extension(const CoherentConfiguration& x,
                                             std::initializer_list<std::size_t> points) {
    return point_extension(x, std::span<const std::size_t>(points.begin(), points.size()));
}

/// 2-extension: closure on Omega^2 of the coloring that gives ((a,b),(c,d))
/// the pair (color(a,c), color(b,d)) together with the diagonal flags a==b
/// and c==d. Only m == 2 is supported; requires n^2 <= budget, otherwise
/// throws BudgetExceeded carrying the required budget.
CoherentConfiguration m_extension(const CoherentConfiguration& x, int m = 2, std::size_t budget = 1100);

/// Result of a lockstep paired refinement: the two closures and the color
/// bijection phi between them (phi[color of X] = color of X'), which
/// satisfies c_{rs}^t = c_{phi(r)phi(s)}^{phi(t)} and restricts to the given
/// palette bijection on the input classes.
struct PairedClosure {
    CoherentConfiguration x;
    CoherentConfiguration y;
    std::vector<Color> phi;
    RefinementTrace trace;
};

struct Incompatible {
    std::string reason;
    std::size_t round = 0;
};

/// Lockstep refinement of two graphs under a palette bijection psi
/// (psi[color of g] = color of g2). Incompatible means no algebraic
/// isomorphism extending psi exists between the closures.
/// Throws std::invalid_argument if psi is not a palette bijection.
std::variant<PairedClosure, Incompatible> compatible_closure(const ColoredGraph& g, const ColoredGraph& g2,
                                                             const std::vector<Color>& psi);

/// psi = identity; palette size mismatch reports Incompatible.
std::variant<PairedClosure, Incompatible> compatible_closure(const ColoredGraph& g, const ColoredGraph& g2);

namespace detail {

/// Lockstep refinement of two same-palette colorings to the joint fixpoint,
/// with shared canonical names. Returns false when the fingerprint sets
/// diverge (then no color-respecting bijection maps one onto the other).
/// Used by the individualization-refinement search.
bool refine_pair(std::vector<Color>& a, std::vector<Color>& b, std::size_t n, std::size_t& palette);

/// Refinement fixpoint of one coloring without the verification and trace
/// bookkeeping of wl_closure; used by the extension-scanning loops. The
/// palette count of the result equals the rank of the closure.
std::pair<std::vector<Color>, std::size_t> closure_colors(const ColoredGraph& g);

/// The individualized coloring point_extension feeds to the closure:
/// fresh loop colors for the listed points, compacted to a dense palette.
ColoredGraph individualized(const CoherentConfiguration& x, std::span<const std::size_t> points);

} // namespace detail

} // namespace cohcfg
