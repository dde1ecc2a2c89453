#include "cohcfg/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohcfg/wl.hpp"

namespace cohcfg {

namespace {

// components of an undirected graph given as adjacency lists over 0..m-1
std::pair<std::size_t, std::vector<std::uint32_t>> components(
    std::size_t m, const std::vector<std::vector<std::uint32_t>>& adj) {
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(m, kUnset);
    std::uint32_t count = 0;
    std::vector<std::uint32_t> stack;
    for (std::size_t start = 0; start < m; ++start) {
        if (comp[start] != kUnset) continue;
        const std::uint32_t id = count++;
        comp[start] = id;
        stack.push_back(static_cast<std::uint32_t>(start));
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : adj[v])
                if (comp[w] == kUnset) { comp[w] = id; stack.push_back(w); }
        }
    }
    return {count, std::move(comp)};
}

// points whose row contains no repeated color
std::vector<std::size_t> regular_points_of(const std::vector<Color>& cols, std::size_t n) {
    std::vector<std::size_t> out;
    std::vector<Color> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        row.assign(cols.begin() + i * n, cols.begin() + (i + 1) * n);
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) == row.end()) out.push_back(i);
    }
    return out;
}

} // namespace

IndistinguishingNumbers indistinguishing_numbers(const CoherentConfiguration& x) {
    if (!x.homogeneous()) throw std::invalid_argument("indistinguishing_numbers: homogeneous input required");
    const auto tensor = intersection_tensor(x);
    const std::size_t rank = x.rank();
    IndistinguishingNumbers out{std::vector<std::size_t>(rank, 0), 0};
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t sum = 0;
        for (std::size_t s = 0; s < rank; ++s)
            sum += tensor.value(static_cast<Color>(s), x.transpose(static_cast<Color>(s)),
                                static_cast<Color>(r));
        // direct count over a representative pair of r
        const auto [a, b] = x.representative(static_cast<Color>(r));
        std::size_t direct = 0;
        for (std::size_t g = 0; g < x.size(); ++g)
            if (x.color(g, a) == x.color(g, b)) ++direct;
        if (direct != sum)
            throw std::logic_error("indistinguishing_numbers: tensor sum " + std::to_string(sum) +
                                   " disagrees with the direct count " + std::to_string(direct) +
                                   " for class " + std::to_string(r));
        out.per_class[r] = sum;
        if (!x.is_diagonal(static_cast<Color>(r))) out.c_max = std::max(out.c_max, sum);
    }
    return out;
}

SmaxRelation smax_relation(const CoherentConfiguration& x) {
    if (!x.homogeneous()) throw std::invalid_argument("smax_relation: homogeneous input required");
    const std::size_t n = x.size();
    std::size_t k = 0;
    for (std::size_t s = 0; s < x.rank(); ++s)
        if (!x.is_diagonal(static_cast<Color>(s))) k = std::max(k, x.valency(static_cast<Color>(s)));
    if (k == 0) k = 1; // rank-1 configuration
    SmaxRelation out{{}, k, false, {}};
    std::vector<char> in_smax(x.rank(), 0);
    for (std::size_t s = 0; s < x.rank(); ++s)
        if (!x.is_diagonal(static_cast<Color>(s)) && x.valency(static_cast<Color>(s)) == k) {
            out.classes.push_back(static_cast<Color>(s));
            in_smax[s] = 1;
        }
    // s_max is symmetric since n_{s*} = n_s
    for (Color s : out.classes)
        if (!in_smax[x.transpose(s)]) throw std::logic_error("smax_relation: s_max is not symmetric");
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (in_smax[x.color(i, j)]) adj[i].push_back(static_cast<std::uint32_t>(j));
    auto [count, comp] = components(n, adj);
    out.connected = count <= 1;
    out.component_of = std::move(comp);
    return out;
}

SalphaGraph salpha_graph(const CoherentConfiguration& x, std::size_t alpha,
                         const IntersectionTensor& tensor) {
    if (!x.homogeneous()) throw std::invalid_argument("salpha_graph: homogeneous input required");
    const auto smax = smax_relation(x);
    std::vector<char> in_smax(x.rank(), 0);
    for (Color s : smax.classes) in_smax[s] = 1;
    SalphaGraph out{{}, {}, false, {}};
    for (std::size_t j = 0; j < x.size(); ++j)
        if (in_smax[x.color(alpha, j)]) out.vertices.push_back(j);
    const std::size_t m = out.vertices.size();
    std::vector<std::vector<std::uint32_t>> adj(m);
    for (std::size_t bi = 0; bi < m; ++bi)
        for (std::size_t gi = bi + 1; gi < m; ++gi) {
            const std::size_t beta = out.vertices[bi], gamma = out.vertices[gi];
            const Color r = x.color(alpha, beta), s = x.color(beta, gamma), t = x.color(alpha, gamma);
            if (tensor.value(r, s, t) == 1) {
                // symmetric by the valency identities; check it
                if (tensor.value(t, x.transpose(s), r) != 1)
                    throw std::logic_error("salpha_graph: edge relation is not symmetric");
                out.edges.push_back({beta, gamma});
                adj[bi].push_back(static_cast<std::uint32_t>(gi));
                adj[gi].push_back(static_cast<std::uint32_t>(bi));
            }
        }
    auto [count, comp] = components(m, adj);
    out.connected = count <= 1;
    out.component_of = std::move(comp);
    return out;
}

std::size_t pu_profile(const CoherentConfiguration& x, std::size_t alpha, Color u, std::size_t delta,
                       const IntersectionTensor& tensor) {
    const auto au = x.neighbors(alpha, u);
    std::size_t direct = 0;
    for (std::size_t beta : au)
        for (std::size_t gamma : au)
            if (beta != gamma && x.color(beta, delta) == x.color(gamma, delta)) ++direct;
    const Color v = x.color(alpha, delta);
    std::size_t via_tensor = 0;
    for (std::size_t w = 0; w < x.rank(); ++w) {
        const std::size_t c = tensor.value(u, static_cast<Color>(w), v);
        via_tensor += c * (c - (c ? 1 : 0));
    }
    if (direct != via_tensor)
        throw std::logic_error("pu_profile: direct count " + std::to_string(direct) +
                               " disagrees with the tensor formula " + std::to_string(via_tensor));
    return direct;
}

StructureReport criterion_report(const CoherentConfiguration& x) {
    if (!x.homogeneous()) throw std::invalid_argument("criterion_report: homogeneous input required");
    StructureReport rep;
    rep.n = x.size();
    rep.rank = x.rank();
    rep.k = x.max_valency();
    rep.c = indistinguishing_numbers(x).c_max;
    rep.inequality_holds = 2 * rep.c * (rep.k - 1) < rep.n;

    const auto smax = smax_relation(x);
    rep.smax_connected = smax.connected;
    const auto tensor = intersection_tensor(x);
    rep.salpha_connected_per_point.resize(rep.n);
    std::vector<std::size_t> asmax_size(rep.n);
    for (std::size_t a = 0; a < rep.n; ++a) {
        const auto sa = salpha_graph(x, a, tensor);
        rep.salpha_connected_per_point[a] = sa.connected;
        asmax_size[a] = sa.vertices.size();
    }

    if (!rep.inequality_holds || rep.k < 2) return rep;

    rep.checks_run = true;
    if (!rep.smax_connected) rep.findings.push_back("s_max is not connected");
    for (std::size_t a = 0; a < rep.n; ++a) {
        if (!rep.salpha_connected_per_point[a])
            rep.findings.push_back("s_alpha is not connected at point " + std::to_string(a));
        if (2 * asmax_size[a] <= rep.n)
            rep.findings.push_back("|alpha s_max| <= n/2 at point " + std::to_string(a));
    }
    rep.one_regular_extensions.resize(rep.n);
    for (std::size_t a = 0; a < rep.n; ++a) {
        const std::size_t pts[1] = {a};
        const auto [cols, palette] = detail::closure_colors(detail::individualized(x, pts));
        rep.one_regular_extensions[a] = !regular_points_of(cols, rep.n).empty();
        if (!rep.one_regular_extensions[a])
            rep.findings.push_back("one-point extension at " + std::to_string(a) + " is not 1-regular");
    }
    rep.base_number = base_number(x, 2);
    if (!rep.base_number)
        rep.findings.push_back("base number exceeds 2");
    return rep;
}

std::optional<std::size_t> base_number(const CoherentConfiguration& x, std::size_t cap) {
    const std::size_t n = x.size();
    auto complete = [&](const std::vector<std::size_t>& pts) {
        return detail::closure_colors(detail::individualized(x, pts)).second == n * n;
    };
    if (x.rank() == n * n) return 0;
    // subsets of each size in lexicographic order
    std::vector<std::size_t> subset;
    for (std::size_t size = 1; size <= cap; ++size) {
        subset.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) subset[i] = i;
        if (size > n) break;
        while (true) {
            if (complete(subset)) return size;
            // next lexicographic combination
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<SeparabilityCertificate> separability_certificate(const CoherentConfiguration& x, int m) {
    if (m != 1 && m != 2) throw std::invalid_argument("separability_certificate: m must be 1 or 2");
    if (m == 1) {
        auto reg = x.regular_points();
        if (reg.empty()) return std::nullopt;
        return SeparabilityCertificate{1, std::nullopt, std::move(reg)};
    }
    for (std::size_t a = 0; a < x.size(); ++a) {
        const std::size_t pts[1] = {a};
        const auto [cols, palette] = detail::closure_colors(detail::individualized(x, pts));
        auto reg = regular_points_of(cols, x.size());
        if (!reg.empty()) return SeparabilityCertificate{2, a, std::move(reg)};
    }
    return std::nullopt;
}

} // namespace cohcfg
