#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cohcfg {

using Color = std::uint32_t;

/// A complete colored digraph on n points: every ordered pair (including
/// loops) carries a color. Colors are dense: every value in
/// [0, palette_size) occurs somewhere in the matrix.
class ColoredGraph {
public:
    /// `colors` is row major of length n*n. Throws std::invalid_argument if
    /// the palette has gaps (empty color classes are rejected, not compacted).
    ColoredGraph(std::size_t n, std::vector<Color> colors);

    std::size_t size() const { return n_; }
    std::size_t palette_size() const { return palette_; }
    Color color(std::size_t i, std::size_t j) const { return colors_[i * n_ + j]; }
    const std::vector<Color>& colors() const { return colors_; }

    /// Image under a point relabeling: pair (i,j) of the result is colored
    /// like (f^-1(i), f^-1(j)), i.e. f maps this graph onto the result.
    ColoredGraph relabeled(const std::vector<std::uint32_t>& f) const;

    bool operator==(const ColoredGraph&) const = default;

    /// Diagonal one color, off-diagonal another (n >= 2).
    static ColoredGraph trivial(std::size_t n);
    /// Every pair its own color.
    static ColoredGraph complete(std::size_t n);

private:
    std::size_t n_;
    std::size_t palette_;
    std::vector<Color> colors_;
};

} // namespace cohcfg
