#include "cohcfg/coherent_configuration.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace cohcfg {

const char* ViolationReport::axiom_name(Axiom a) {
    switch (a) {
        case Axiom::DiagonalClosure: return "diagonal";
        case Axiom::TransposeClosure: return "transpose";
        case Axiom::FiberValency: return "fiber-valency";
        case Axiom::Regularity: return "regularity";
    }
    return "?";
}

namespace {

// Sorted multiset of codes r*palette+s over the middle point k; two pairs of
// one class are consistent iff these multisets coincide.
void pair_profile(const ColoredGraph& g, std::size_t i, std::size_t j, std::vector<std::uint64_t>& codes) {
    const std::size_t n = g.size();
    const std::uint64_t palette = g.palette_size();
    codes.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        codes[k] = static_cast<std::uint64_t>(g.color(i, k)) * palette + g.color(k, j);
    std::sort(codes.begin(), codes.end());
}

struct RegularityViolation {
    std::size_t class_index;
    std::size_t pair_rank; // position of the offending pair within its class
    ViolationReport report;
};

} // namespace

std::variant<CoherentConfiguration, ViolationReport> verify_coherence(const ColoredGraph& g,
                                                                      unsigned threads) {
    const std::size_t n = g.size();
    const std::size_t palette = g.palette_size();

    // 1_Omega must be a union of classes: no color both on and off the diagonal.
    std::vector<char> on_diag(palette, 0), off_diag(palette, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            (i == j ? on_diag : off_diag)[g.color(i, j)] = 1;
    for (std::size_t c = 0; c < palette; ++c)
        if (on_diag[c] && off_diag[c])
            return ViolationReport{ViolationReport::Axiom::DiagonalClosure,
                                   "color " + std::to_string(c) + " occurs both on and off the diagonal",
                                   std::nullopt};

    // S* = S: color(j,i) must be a function of color(i,j).
    constexpr Color kUnset = static_cast<Color>(-1);
    std::vector<Color> transpose(palette, kUnset);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Color c = g.color(i, j), ct = g.color(j, i);
            if (transpose[c] == kUnset)
                transpose[c] = ct;
            else if (transpose[c] != ct)
                return ViolationReport{ViolationReport::Axiom::TransposeClosure,
                                       "class " + std::to_string(c) + " has reversed pairs in classes " +
                                           std::to_string(transpose[c]) + " and " + std::to_string(ct),
                                       std::nullopt};
        }

    // Fibers are the diagonal classes; each class must join one source fiber
    // to one target fiber with constant out-degree on the source.
    std::vector<std::uint32_t> fiber_index(palette, 0);
    std::vector<Color> diag_colors;
    for (std::size_t c = 0; c < palette; ++c)
        if (on_diag[c]) {
            fiber_index[c] = static_cast<std::uint32_t>(diag_colors.size());
            diag_colors.push_back(static_cast<Color>(c));
        }
    std::vector<std::uint32_t> fiber_of_point(n);
    for (std::size_t i = 0; i < n; ++i) fiber_of_point[i] = fiber_index[g.color(i, i)];
    std::vector<std::vector<std::size_t>> fibers(diag_colors.size());
    for (std::size_t i = 0; i < n; ++i) fibers[fiber_of_point[i]].push_back(i);

    constexpr std::uint32_t kNoFiber = static_cast<std::uint32_t>(-1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber_pair(palette, {kNoFiber, kNoFiber});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Color c = g.color(i, j);
            const std::pair<std::uint32_t, std::uint32_t> fp{fiber_of_point[i], fiber_of_point[j]};
            if (fiber_pair[c].first == kNoFiber)
                fiber_pair[c] = fp;
            else if (fiber_pair[c] != fp)
                return ViolationReport{ViolationReport::Axiom::FiberValency,
                                       "class " + std::to_string(c) + " meets two distinct fiber pairs",
                                       std::nullopt};
        }

    std::vector<std::size_t> valency(palette, 0);
    {
        std::vector<std::size_t> row_count(palette);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(row_count.begin(), row_count.end(), 0);
            for (std::size_t j = 0; j < n; ++j) ++row_count[g.color(i, j)];
            for (std::size_t c = 0; c < palette; ++c) {
                if (row_count[c] == 0) continue;
                if (fiber_pair[c].first != fiber_of_point[i]) continue;
                if (valency[c] == 0)
                    valency[c] = row_count[c];
                else if (valency[c] != row_count[c])
                    return ViolationReport{
                        ViolationReport::Axiom::FiberValency,
                        "class " + std::to_string(c) + " has out-degrees " + std::to_string(valency[c]) +
                            " and " + std::to_string(row_count[c]) + " on its source fiber",
                        std::nullopt};
            }
        }
        // points of the source fiber that miss the class entirely
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(row_count.begin(), row_count.end(), 0);
            for (std::size_t j = 0; j < n; ++j) ++row_count[g.color(i, j)];
            for (std::size_t c = 0; c < palette; ++c)
                if (fiber_pair[c].first == fiber_of_point[i] && row_count[c] == 0)
                    return ViolationReport{
                        ViolationReport::Axiom::FiberValency,
                        "class " + std::to_string(c) + " misses point " + std::to_string(i) +
                            " of its source fiber",
                        std::nullopt};
        }
    }

    // Regularity: all pairs of a class share the same middle-point profile.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs_of(palette);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairs_of[g.color(i, j)].push_back({i, j});

    auto check_class = [&](std::size_t t) -> std::optional<RegularityViolation> {
        const auto& pairs = pairs_of[t];
        std::vector<std::uint64_t> ref, prof;
        pair_profile(g, pairs[0].first, pairs[0].second, ref);
        for (std::size_t idx = 1; idx < pairs.size(); ++idx) {
            pair_profile(g, pairs[idx].first, pairs[idx].second, prof);
            if (prof == ref) continue;
            // locate a differing code for the witness triple
            std::uint64_t code = 0;
            for (std::size_t a = 0, b = 0; a < ref.size() || b < prof.size();) {
                if (b == prof.size() || (a < ref.size() && ref[a] < prof[b])) { code = ref[a]; break; }
                if (a == ref.size() || prof[b] < ref[a]) { code = prof[b]; break; }
                ++a, ++b;
            }
            const Color r = static_cast<Color>(code / palette);
            const Color s0 = static_cast<Color>(code % palette);
            ViolationReport rep{
                ViolationReport::Axiom::Regularity,
                "c_(r=" + std::to_string(r) + ",s=" + std::to_string(s0) + ")^(t=" +
                    std::to_string(t) + ") differs between pairs (" + std::to_string(pairs[0].first) + "," +
                    std::to_string(pairs[0].second) + ") and (" + std::to_string(pairs[idx].first) + "," +
                    std::to_string(pairs[idx].second) + ")",
                std::array<Color, 3>{r, s0, static_cast<Color>(t)}};
            return RegularityViolation{t, idx, std::move(rep)};
        }
        return std::nullopt;
    };

    std::optional<RegularityViolation> found;
    const unsigned workers = std::min<unsigned>(std::max(1u, threads), std::thread::hardware_concurrency());
    if (workers <= 1 || palette < 4) {
        for (std::size_t t = 0; t < palette && !found; ++t) found = check_class(t);
    } else {
        std::vector<std::future<std::optional<RegularityViolation>>> futs;
        for (unsigned w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&, w]() {
                std::optional<RegularityViolation> best;
                for (std::size_t t = w; t < palette; t += workers)
                    if (auto v = check_class(t); v && (!best || v->class_index < best->class_index)) best = v;
                return best;
            }));
        for (auto& f : futs)
            if (auto v = f.get(); v && (!found || v->class_index < found->class_index ||
                                        (v->class_index == found->class_index && v->pair_rank < found->pair_rank)))
                found = v;
    }
    if (found) return found->report;

    CoherentConfiguration x(g);
    x.transpose_ = std::move(transpose);
    x.diagonal_.assign(on_diag.begin(), on_diag.end());
    x.diagonal_colors_ = std::move(diag_colors);
    x.fiber_of_point_ = std::move(fiber_of_point);
    x.fibers_ = std::move(fibers);
    x.fiber_pair_ = std::move(fiber_pair);
    x.valency_ = std::move(valency);
    return x;
}

CoherentConfiguration require_coherent(const ColoredGraph& g) {
    auto r = verify_coherence(g);
    if (auto* v = std::get_if<ViolationReport>(&r))
        throw std::invalid_argument(std::string("not a coherent configuration (") +
                                    ViolationReport::axiom_name(v->axiom) + "): " + v->detail);
    return std::get<CoherentConfiguration>(std::move(r));
}

std::size_t CoherentConfiguration::max_valency() const {
    std::size_t k = 0;
    for (std::size_t s = 0; s < rank(); ++s) k = std::max(k, valency_[s]);
    return k;
}

bool CoherentConfiguration::thin() const {
    if (!homogeneous()) return false;
    for (std::size_t s = 0; s < rank(); ++s)
        if (valency_[s] != 1) return false;
    return true;
}

std::vector<std::size_t> CoherentConfiguration::regular_points() const {
    const std::size_t n = size();
    std::vector<std::size_t> out;
    std::vector<char> seen(rank());
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        bool regular = true;
        for (std::size_t j = 0; j < n && regular; ++j) {
            const Color c = color(i, j);
            if (seen[c]) regular = false;
            seen[c] = 1;
        }
        if (regular) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> CoherentConfiguration::neighbors(std::size_t alpha, Color s) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (color(alpha, j) == s) out.push_back(j);
    return out;
}

std::pair<std::size_t, std::size_t> CoherentConfiguration::representative(Color s) const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (color(i, j) == s) return {i, j};
    throw std::logic_error("empty color class");
}

bool CoherentConfiguration::same_partition(const CoherentConfiguration& other) const {
    if (size() != other.size() || rank() != other.rank()) return false;
    const std::size_t n = size();
    std::vector<std::size_t> first_a(rank(), SIZE_MAX), first_b(rank(), SIZE_MAX);
    for (std::size_t p = 0; p < n * n; ++p) {
        const Color a = graph_.colors()[p], b = other.graph_.colors()[p];
        if (first_a[a] == SIZE_MAX) first_a[a] = p;
        if (first_b[b] == SIZE_MAX) first_b[b] = p;
        if (first_a[a] != first_b[b]) return false;
    }
    return true;
}

bool CoherentConfiguration::refines(const CoherentConfiguration& coarser) const {
    if (size() != coarser.size()) return false;
    const std::size_t n = size();
    constexpr Color kUnset = static_cast<Color>(-1);
    std::vector<Color> image(rank(), kUnset);
    for (std::size_t p = 0; p < n * n; ++p) {
        const Color mine = graph_.colors()[p], theirs = coarser.graph_.colors()[p];
        if (image[mine] == kUnset)
            image[mine] = theirs;
        else if (image[mine] != theirs)
            return false;
    }
    return true;
}

IntersectionTensor intersection_tensor(const CoherentConfiguration& x) {
    const std::size_t n = x.size();
    const std::size_t rank = x.rank();
    // first and (when present) second representative pair per class
    std::vector<std::array<std::size_t, 4>> reps(rank, {SIZE_MAX, 0, SIZE_MAX, 0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& r = reps[x.color(i, j)];
            if (r[0] == SIZE_MAX) { r[0] = i; r[1] = j; }
            else if (r[2] == SIZE_MAX) { r[2] = i; r[3] = j; }
        }

    std::unordered_map<std::uint64_t, std::uint32_t> entries;
    entries.reserve(rank * 4);
    std::unordered_map<std::uint64_t, std::uint32_t> counts, counts2;
    for (std::size_t t = 0; t < rank; ++t) {
        counts.clear();
        for (std::size_t k = 0; k < n; ++k)
            ++counts[static_cast<std::uint64_t>(x.color(reps[t][0], k)) * rank + x.color(k, reps[t][1])];
        if (reps[t][2] != SIZE_MAX) {
            counts2.clear();
            for (std::size_t k = 0; k < n; ++k)
                ++counts2[static_cast<std::uint64_t>(x.color(reps[t][2], k)) * rank + x.color(k, reps[t][3])];
            if (counts2 != counts)
                throw std::logic_error("intersection_tensor: representative pairs of class " +
                                       std::to_string(t) + " disagree");
        }
        for (const auto& [rs, c] : counts)
            entries[rs * rank + t] = c;
    }
    return IntersectionTensor(rank, std::move(entries));
}

} // namespace cohcfg
