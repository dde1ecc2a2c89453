#include "cohcfg/colored_graph.hpp"

#include <stdexcept>
#include <string>

namespace cohcfg {

ColoredGraph::ColoredGraph(std::size_t n, std::vector<Color> colors)
    : n_(n), colors_(std::move(colors)) {
    if (n == 0) throw std::invalid_argument("ColoredGraph: empty point set");
    if (colors_.size() != n * n) throw std::invalid_argument("ColoredGraph: color matrix is not n*n");
    Color max = 0;
    for (Color c : colors_) max = std::max(max, c);
    palette_ = static_cast<std::size_t>(max) + 1;
    std::vector<bool> seen(palette_, false);
    for (Color c : colors_) seen[c] = true;
    for (std::size_t c = 0; c < palette_; ++c)
        if (!seen[c])
            throw std::invalid_argument("ColoredGraph: color " + std::to_string(c) + " has an empty class");
}

ColoredGraph ColoredGraph::relabeled(const std::vector<std::uint32_t>& f) const {
    if (f.size() != n_) throw std::invalid_argument("relabeled: wrong degree");
    std::vector<Color> out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[f[i] * n_ + f[j]] = colors_[i * n_ + j];
    return ColoredGraph(n_, std::move(out));
}

ColoredGraph ColoredGraph::trivial(std::size_t n) {
    if (n < 2) throw std::invalid_argument("trivial: need n >= 2");
    std::vector<Color> c(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) c[i * n + i] = 0;
    return ColoredGraph(n, std::move(c));
}

ColoredGraph ColoredGraph::complete(std::size_t n) {
    std::vector<Color> c(n * n);
    for (std::size_t i = 0; i < n * n; ++i) c[i] = static_cast<Color>(i);
    return ColoredGraph(n, std::move(c));
}

} // namespace cohcfg
