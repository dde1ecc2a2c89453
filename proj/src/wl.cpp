#include "cohcfg/wl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cohcfg/util.hpp"

namespace cohcfg {

namespace {

// A refinement fingerprint: previous color plus the sorted multiset over k
// of pair codes old(i,k)*palette + old(k,j). Fingerprints are compared
// exactly; the hash only buckets them. Codes are 32-bit whenever
// palette^2 fits (always except for large 2-extensions).
template <typename CodeT>
struct Fingerprint {
    Color old;
    std::vector<CodeT> codes;
};

template <typename CodeT>
std::uint64_t mix_hash(Color old, const std::vector<CodeT>& codes) {
    std::uint64_t h = 1469598103934665603ULL ^ old;
    for (CodeT v : codes) {
        h ^= v;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return h;
}

template <typename CodeT>
struct FingerprintDict {
    std::vector<Fingerprint<CodeT>> fps;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;

    std::uint32_t intern(Color old, const std::vector<CodeT>& codes) {
        auto& bucket = by_hash[mix_hash(old, codes)];
        for (std::uint32_t id : bucket)
            if (fps[id].old == old && fps[id].codes == codes) return id;
        const auto id = static_cast<std::uint32_t>(fps.size());
        fps.push_back({old, codes});
        bucket.push_back(id);
        return id;
    }

    // canonical rank per provisional id: lexicographic on (old, codes)
    std::vector<std::uint32_t> canonical_ranks() const {
        std::vector<std::uint32_t> idx(fps.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (fps[a].old != fps[b].old) return fps[a].old < fps[b].old;
            return fps[a].codes < fps[b].codes;
        });
        std::vector<std::uint32_t> rank(fps.size());
        for (std::uint32_t r = 0; r < idx.size(); ++r) rank[idx[r]] = r;
        return rank;
    }
};

// One sweep of one graph; fills `prov` with provisional fingerprint ids and
// marks which ids this graph uses. Each row is presorted by color once, so
// the per-pair sort reduces to sorting within runs of equal row color; run
// lengths are bounded by the valencies.
template <typename CodeT>
void sweep(const std::vector<Color>& colors, std::size_t n, std::size_t palette,
           FingerprintDict<CodeT>& dict, std::vector<std::uint32_t>& prov, std::vector<char>& used) {
    std::vector<CodeT> codes(n);
    std::vector<Color> transposed(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) transposed[j * n + i] = colors[i * n + j];
    prov.resize(n * n);
    std::vector<std::uint32_t> order(n);
    std::vector<std::uint32_t> run_start;
    for (std::size_t i = 0; i < n; ++i) {
        const Color* row = colors.data() + i * n;
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return row[a] < row[b]; });
        run_start.clear();
        run_start.push_back(0);
        for (std::uint32_t k = 1; k < n; ++k)
            if (row[order[k]] != row[order[k - 1]]) run_start.push_back(k);
        run_start.push_back(static_cast<std::uint32_t>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const Color* col = transposed.data() + j * n;
            for (std::size_t k = 0; k < n; ++k)
                codes[k] =
                    static_cast<CodeT>(static_cast<std::uint64_t>(row[order[k]]) * palette + col[order[k]]);
            for (std::size_t r = 0; r + 1 < run_start.size(); ++r)
                if (run_start[r + 1] - run_start[r] > 1)
                    std::sort(codes.begin() + run_start[r], codes.begin() + run_start[r + 1]);
            const std::uint32_t id = dict.intern(row[j], codes);
            prov[i * n + j] = id;
            if (id >= used.size()) used.resize(id + 1, 0);
            used[id] = 1;
        }
    }
}

// the palette can only grow up to n^2, so u32 codes are safe iff n^2 * n^2
// stays below 2^32
bool codes_fit_u32(std::size_t n) {
    const std::size_t nn = n * n;
    return nn <= 65536;
}

template <typename CodeT>
bool lockstep_impl(std::vector<Color>& a, std::vector<Color>& b, std::size_t n, std::size_t& palette,
                   RefinementTrace* trace) {
    std::vector<std::uint32_t> prov_a, prov_b;
    while (true) {
        FingerprintDict<CodeT> dict;
        std::vector<char> used_a, used_b;
        sweep(a, n, palette, dict, prov_a, used_a);
        sweep(b, n, palette, dict, prov_b, used_b);
        if (trace) {
            ++trace->rounds;
            trace->history.push_back(dict.fps.size());
        }
        used_a.resize(dict.fps.size(), 0);
        used_b.resize(dict.fps.size(), 0);
        if (used_a != used_b) return false;
        const auto rank = dict.canonical_ranks();
        const bool stable = dict.fps.size() == palette;
        for (std::size_t p = 0; p < n * n; ++p) {
            a[p] = rank[prov_a[p]];
            b[p] = rank[prov_b[p]];
        }
        palette = dict.fps.size();
        if (stable) return true;
    }
}

bool lockstep_to_fixpoint(std::vector<Color>& a, std::vector<Color>& b, std::size_t n,
                          std::size_t& palette, RefinementTrace* trace) {
    return codes_fit_u32(n) ? lockstep_impl<std::uint32_t>(a, b, n, palette, trace)
                            : lockstep_impl<std::uint64_t>(a, b, n, palette, trace);
}

// Initial canonical split: key (off-diagonal?, input color); diagonal keys
// sort first so diagonal classes get the smaller numbers, an order the
// fingerprint sort then preserves across every later round.
std::vector<std::uint64_t> split_keys(const std::vector<Color>& colors, std::size_t n) {
    std::vector<std::uint64_t> keys(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            keys[i * n + j] = (i == j ? 0ull : 1ull) << 32 | colors[i * n + j];
    return keys;
}

std::vector<Color> apply_key_ranks(const std::vector<std::uint64_t>& keys,
                                   const std::vector<std::uint64_t>& sorted_distinct) {
    std::vector<Color> out(keys.size());
    for (std::size_t p = 0; p < keys.size(); ++p) {
        const auto it = std::lower_bound(sorted_distinct.begin(), sorted_distinct.end(), keys[p]);
        out[p] = static_cast<Color>(it - sorted_distinct.begin());
    }
    return out;
}

struct RefinerState {
    std::vector<Color> colors;
    std::size_t palette;
};

// Runs one graph to its fixpoint.
template <typename CodeT>
Closure close_single_impl(const ColoredGraph& g) {
    const std::size_t n = g.size();
    auto keys = split_keys(g.colors(), n);
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    RefinerState st{apply_key_ranks(keys, distinct), distinct.size()};

    RefinementTrace trace;
    trace.history.push_back(st.palette);
    std::vector<std::uint32_t> prov;
    std::vector<char> used;
    std::vector<std::uint64_t> final_names;
    while (true) {
        FingerprintDict<CodeT> dict;
        used.clear();
        sweep(st.colors, n, st.palette, dict, prov, used);
        ++trace.rounds;
        trace.history.push_back(dict.fps.size());
        const auto rank = dict.canonical_ranks();
        const bool stable = dict.fps.size() == st.palette;
        for (std::size_t p = 0; p < n * n; ++p) st.colors[p] = rank[prov[p]];
        st.palette = dict.fps.size();
        if (stable) {
            final_names.assign(st.palette, 0);
            for (std::uint32_t id = 0; id < dict.fps.size(); ++id)
                final_names[rank[id]] = mix_hash(dict.fps[id].old, dict.fps[id].codes);
            break;
        }
    }
    trace.canonical_names = std::move(final_names);

    auto verified = verify_coherence(ColoredGraph(n, std::move(st.colors)));
    if (auto* v = std::get_if<ViolationReport>(&verified))
        throw std::logic_error(std::string("wl_closure fixpoint is not coherent (") +
                               ViolationReport::axiom_name(v->axiom) + "): " + v->detail);
    return Closure{std::get<CoherentConfiguration>(std::move(verified)), std::move(trace)};
}

} // namespace

Closure wl_closure(const ColoredGraph& g) {
    return codes_fit_u32(g.size()) ? close_single_impl<std::uint32_t>(g)
                                   : close_single_impl<std::uint64_t>(g);
}

CoherentConfiguration point_extension(const CoherentConfiguration& x, std::span<const std::size_t> points) {
    if (points.empty()) return x;
    auto out = wl_closure(detail::individualized(x, points)).config;
    if (!out.refines(x))
        throw std::logic_error("point_extension: result does not refine the input");
    return out;
}

CoherentConfiguration m_extension(const CoherentConfiguration& x, int m, std::size_t budget) {
    if (m != 2) throw std::invalid_argument("m_extension: only m = 2 is supported");
    const std::size_t n = x.size();
    const std::size_t nn = n * n;
    if (nn > budget)
        throw BudgetExceeded("m_extension: n^2 = " + std::to_string(nn) + " exceeds budget " +
                                 std::to_string(budget),
                             nn);
    const std::uint64_t rank = x.rank();
    std::vector<std::uint64_t> keys(nn * nn);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const std::uint64_t base =
                        static_cast<std::uint64_t>(x.color(a, c)) * rank + x.color(b, d);
                    keys[(a * n + b) * nn + (c * n + d)] = base << 2 | (a == b ? 2u : 0u) | (c == d ? 1u : 0u);
                }
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto colors = apply_key_ranks(keys, distinct);
    return wl_closure(ColoredGraph(nn, std::move(colors))).config;
}

std::variant<PairedClosure, Incompatible> compatible_closure(const ColoredGraph& g, const ColoredGraph& g2) {
    if (g.palette_size() != g2.palette_size())
        return Incompatible{"palette sizes differ: " + std::to_string(g.palette_size()) + " vs " +
                                std::to_string(g2.palette_size()),
                            0};
    std::vector<Color> psi(g.palette_size());
    std::iota(psi.begin(), psi.end(), 0);
    return compatible_closure(g, g2, psi);
}

std::variant<PairedClosure, Incompatible> compatible_closure(const ColoredGraph& g, const ColoredGraph& g2,
                                                             const std::vector<Color>& psi) {
    if (g.size() != g2.size())
        return Incompatible{"point counts differ: " + std::to_string(g.size()) + " vs " +
                                std::to_string(g2.size()),
                            0};
    const std::size_t n = g.size();
    const std::size_t palette0 = g.palette_size();
    if (psi.size() != palette0 || g2.palette_size() != palette0)
        throw std::invalid_argument("compatible_closure: psi is not a palette bijection");
    std::vector<Color> inv_psi(palette0, static_cast<Color>(-1));
    for (std::size_t c = 0; c < palette0; ++c) {
        if (psi[c] >= palette0 || inv_psi[psi[c]] != static_cast<Color>(-1))
            throw std::invalid_argument("compatible_closure: psi is not a palette bijection");
        inv_psi[psi[c]] = static_cast<Color>(c);
    }

    // pull g2 onto g's palette, then refine both in lockstep with shared names
    std::vector<Color> cols2(n * n);
    for (std::size_t p = 0; p < n * n; ++p) cols2[p] = inv_psi[g2.colors()[p]];

    auto keys1 = split_keys(g.colors(), n);
    auto keys2 = split_keys(cols2, n);
    std::vector<std::uint64_t> distinct;
    distinct.reserve(keys1.size() + keys2.size());
    distinct.insert(distinct.end(), keys1.begin(), keys1.end());
    distinct.insert(distinct.end(), keys2.begin(), keys2.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    {
        auto d1 = keys1, d2 = keys2;
        std::sort(d1.begin(), d1.end());
        d1.erase(std::unique(d1.begin(), d1.end()), d1.end());
        std::sort(d2.begin(), d2.end());
        d2.erase(std::unique(d2.begin(), d2.end()), d2.end());
        if (d1 != d2)
            return Incompatible{"initial colorings split differently across the diagonal", 0};
    }
    RefinerState a{apply_key_ranks(keys1, distinct), distinct.size()};
    RefinerState b{apply_key_ranks(keys2, distinct), distinct.size()};

    RefinementTrace trace;
    trace.history.push_back(a.palette);
    if (!lockstep_to_fixpoint(a.colors, b.colors, n, a.palette, &trace))
        return Incompatible{"refinement fingerprints diverge", trace.rounds};
    b.palette = a.palette;

    auto va = verify_coherence(ColoredGraph(n, std::move(a.colors)));
    auto vb = verify_coherence(ColoredGraph(n, std::move(b.colors)));
    if (std::holds_alternative<ViolationReport>(va) || std::holds_alternative<ViolationReport>(vb))
        throw std::logic_error("compatible_closure: fixpoint is not coherent");
    PairedClosure out{std::get<CoherentConfiguration>(std::move(va)),
                      std::get<CoherentConfiguration>(std::move(vb)),
                      {},
                      std::move(trace)};
    out.phi.resize(out.x.rank());
    std::iota(out.phi.begin(), out.phi.end(), 0);

    // matched names carry matched intersection numbers; check it anyway
    const auto ta = intersection_tensor(out.x), tb = intersection_tensor(out.y);
    if (ta.entries() != tb.entries())
        throw std::logic_error("compatible_closure: matched closures have different tensors");
    return out;
}

namespace detail {

bool refine_pair(std::vector<Color>& a, std::vector<Color>& b, std::size_t n, std::size_t& palette) {
    return lockstep_to_fixpoint(a, b, n, palette, nullptr);
}

namespace {

template <typename CodeT>
std::pair<std::vector<Color>, std::size_t> closure_colors_impl(const ColoredGraph& g) {
    const std::size_t n = g.size();
    auto keys = split_keys(g.colors(), n);
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    RefinerState st{apply_key_ranks(keys, distinct), distinct.size()};
    std::vector<std::uint32_t> prov;
    std::vector<char> used;
    while (true) {
        FingerprintDict<CodeT> dict;
        used.clear();
        sweep(st.colors, n, st.palette, dict, prov, used);
        const auto rank = dict.canonical_ranks();
        const bool stable = dict.fps.size() == st.palette;
        for (std::size_t p = 0; p < n * n; ++p) st.colors[p] = rank[prov[p]];
        st.palette = dict.fps.size();
        if (stable) break;
        if (st.palette == n * n) break; // complete: every class a singleton pair
    }
    return {std::move(st.colors), st.palette};
}

} // namespace

std::pair<std::vector<Color>, std::size_t> closure_colors(const ColoredGraph& g) {
    return codes_fit_u32(g.size()) ? closure_colors_impl<std::uint32_t>(g)
                                   : closure_colors_impl<std::uint64_t>(g);
}

ColoredGraph individualized(const CoherentConfiguration& x, std::span<const std::size_t> points) {
    const std::size_t n = x.size();
    std::vector<char> chosen(n, 0);
    for (std::size_t pt : points) {
        if (pt >= n) throw std::invalid_argument("point_extension: point out of range");
        if (chosen[pt]) throw std::invalid_argument("point_extension: duplicate point");
        chosen[pt] = 1;
    }
    // fresh color per listed point, then compact to a dense palette
    std::vector<std::uint64_t> keys(x.graph().colors().begin(), x.graph().colors().end());
    std::uint64_t fresh = x.rank();
    for (std::size_t pt : points) keys[pt * n + pt] = fresh++;
    auto distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return ColoredGraph(n, apply_key_ranks(keys, distinct));
}

} // namespace detail

} // namespace cohcfg
