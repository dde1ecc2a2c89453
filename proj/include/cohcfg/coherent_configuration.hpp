#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cohcfg/colored_graph.hpp"

namespace cohcfg {

/// First violated axiom of the coherent configuration definition, with a
/// human-readable witness.
struct ViolationReport {
    enum class Axiom { DiagonalClosure, TransposeClosure, FiberValency, Regularity };
    Axiom axiom;
    std::string detail;
    // populated for Regularity: the triple (r, s, t) whose count differs
    // between two pairs of t
    std::optional<std::array<Color, 3>> triple;

    static const char* axiom_name(Axiom a);
};

/// Sparse table of intersection numbers c_{rs}^t, zero entries omitted.
class IntersectionTensor {
public:
    IntersectionTensor(std::size_t rank, std::unordered_map<std::uint64_t, std::uint32_t> entries)
        : rank_(rank), entries_(std::move(entries)) {}

    std::size_t rank() const { return rank_; }
    std::uint64_t key(Color r, Color s, Color t) const {
        return (static_cast<std::uint64_t>(r) * rank_ + s) * rank_ + t;
    }
    std::uint32_t value(Color r, Color s, Color t) const {
        auto it = entries_.find(key(r, s, t));
        return it == entries_.end() ? 0 : it->second;
    }
    const std::unordered_map<std::uint64_t, std::uint32_t>& entries() const { return entries_; }

private:
    std::size_t rank_;
    std::unordered_map<std::uint64_t, std::uint32_t> entries_;
};

/// A colored graph whose color classes satisfy the coherent configuration
/// axioms, together with the derived structure maps. Construct through
/// verify_coherence; instances are immutable.
class CoherentConfiguration {
public:
    const ColoredGraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.size(); }
    std::size_t rank() const { return graph_.palette_size(); }
    Color color(std::size_t i, std::size_t j) const { return graph_.color(i, j); }

    Color transpose(Color s) const { return transpose_[s]; }
    const std::vector<Color>& transpose_map() const { return transpose_; }
    bool is_diagonal(Color s) const { return diagonal_[s]; }
    const std::vector<Color>& diagonal_colors() const { return diagonal_colors_; }

    std::uint32_t fiber_of_point(std::size_t pt) const { return fiber_of_point_[pt]; }
    const std::vector<std::vector<std::size_t>>& fibers() const { return fibers_; }
    /// (source fiber, target fiber) of a color class.
    std::pair<std::uint32_t, std::uint32_t> fiber_pair(Color s) const { return fiber_pair_[s]; }

    std::size_t valency(Color s) const { return valency_[s]; }
    const std::vector<std::size_t>& valencies() const { return valency_; }
    std::size_t max_valency() const;

    bool homogeneous() const { return diagonal_colors_.size() == 1; }
    bool thin() const;

    std::vector<std::size_t> regular_points() const;
    bool is_one_regular() const { return !regular_points().empty(); }

    /// Points beta with (alpha, beta) in class s.
    std::vector<std::size_t> neighbors(std::size_t alpha, Color s) const;
    /// Some pair (i, j) of class s (row-major first).
    std::pair<std::size_t, std::size_t> representative(Color s) const;

    /// Two configurations are equal as partitions of Omega x Omega if their
    /// classes coincide regardless of color names.
    bool same_partition(const CoherentConfiguration& other) const;
    /// True if every class of this configuration is contained in a single
    /// class of `coarser`.
    bool refines(const CoherentConfiguration& coarser) const;

private:
    friend std::variant<CoherentConfiguration, ViolationReport> verify_coherence(const ColoredGraph&,
                                                                                 unsigned threads);
    explicit CoherentConfiguration(ColoredGraph g) : graph_(std::move(g)) {}

    ColoredGraph graph_;
    std::vector<Color> transpose_;
    std::vector<bool> diagonal_;
    std::vector<Color> diagonal_colors_;
    std::vector<std::uint32_t> fiber_of_point_;
    std::vector<std::vector<std::size_t>> fibers_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber_pair_;
    std::vector<std::size_t> valency_;
};

/// Checks the defining axioms exhaustively (all pairs, all classes) and on
/// success returns the configuration with its derived maps populated.
/// `threads` > 1 parallelizes the regularity sweep over pair classes; the
/// result is identical to the sequential one.
std::variant<CoherentConfiguration, ViolationReport> verify_coherence(const ColoredGraph& g,
                                                                      unsigned threads = 1);

/// Convenience wrapper: throws std::invalid_argument on violation.
CoherentConfiguration require_coherent(const ColoredGraph& g);

/// Exact intersection numbers, computed from one representative pair per
/// class and spot-verified against a second representative where one exists.
IntersectionTensor intersection_tensor(const CoherentConfiguration& x);

} // namespace cohcfg
