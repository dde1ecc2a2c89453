#include "cohcfg/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cohcfg/util.hpp"

namespace cohcfg {

namespace {

struct IsoSearch {
    const CoherentConfiguration& x;
    const CoherentConfiguration& y;
    const std::vector<Color>& phi;
    const IsoBudget& budget;
    std::size_t n;
    std::vector<Permutation> found;

    // fibers keyed by loop color
    static std::map<Color, std::vector<std::uint32_t>> fibers_of(const std::vector<Color>& cols,
                                                                 std::size_t n) {
        std::map<Color, std::vector<std::uint32_t>> out;
        for (std::uint32_t i = 0; i < n; ++i) out[cols[i * n + i]].push_back(i);
        return out;
    }

    void recurse(std::vector<Color> ca, std::vector<Color> cb, std::size_t palette, std::size_t depth) {
        if (!detail::refine_pair(ca, cb, n, palette)) return;
        const auto fx = fibers_of(ca, n), fy = fibers_of(cb, n);
        if (fx.size() != fy.size()) return;

        // first smallest non-singleton fiber
        const std::vector<std::uint32_t>* branch_x = nullptr;
        const std::vector<std::uint32_t>* branch_y = nullptr;
        for (const auto& [col, pts] : fx) {
            const auto it = fy.find(col);
            if (it == fy.end() || it->second.size() != pts.size()) return;
            if (pts.size() > 1 && (!branch_x || pts.size() < branch_x->size())) {
                branch_x = &pts;
                branch_y = &it->second;
            }
        }
        if (!branch_x) {
            // complete refinement: the bijection is forced by loop colors
            std::vector<std::uint32_t> img(n);
            for (const auto& [col, pts] : fx) img[pts[0]] = fy.at(col)[0];
            Permutation f(std::move(img));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (phi[x.color(i, j)] != y.color(f(static_cast<std::uint32_t>(i)),
                                                      f(static_cast<std::uint32_t>(j))))
                        return; // post hoc soundness recheck
            found.push_back(std::move(f));
            return;
        }
        if (depth >= budget.max_depth)
            throw BudgetExceeded("iso_set: search needs more than " + std::to_string(budget.max_depth) +
                                     " individualizations",
                                 depth + 1);
        const std::uint32_t p = branch_x->front();
        for (const std::uint32_t p2 : *branch_y) {
            std::vector<Color> na = ca, nb = cb;
            na[std::size_t{p} * n + p] = static_cast<Color>(palette);
            nb[std::size_t{p2} * n + p2] = static_cast<Color>(palette);
            recurse(std::move(na), std::move(nb), palette + 1, depth + 1);
        }
    }
};

} // namespace

std::vector<Permutation> iso_set(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                 const std::vector<Color>& phi, const IsoBudget& budget) {
    const std::size_t n = x.size();
    if (y.size() != n) return {};
    if (n > budget.max_points)
        throw BudgetExceeded("iso_set: " + std::to_string(n) + " points exceed the budget",
                             n);
    if (x.rank() != y.rank() || phi.size() != x.rank())
        throw std::invalid_argument("iso_set: phi must be a rank bijection");
    std::vector<Color> inv_phi(x.rank(), static_cast<Color>(-1));
    for (std::size_t c = 0; c < phi.size(); ++c) {
        if (phi[c] >= x.rank() || inv_phi[phi[c]] != static_cast<Color>(-1))
            throw std::invalid_argument("iso_set: phi must be a rank bijection");
        inv_phi[phi[c]] = static_cast<Color>(c);
    }

    // pull y onto x's color names through phi
    std::vector<Color> cb(n * n);
    for (std::size_t p = 0; p < n * n; ++p) cb[p] = inv_phi[y.graph().colors()[p]];

    IsoSearch search{x, y, phi, budget, n, {}};
    search.recurse(x.graph().colors(), std::move(cb), x.rank(), 0);
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

PermutationGroup aut_group(const CoherentConfiguration& x, const IsoBudget& budget) {
    std::vector<Color> id(x.rank());
    std::iota(id.begin(), id.end(), 0);
    auto elements = iso_set(x, x, id, budget);
    return PermutationGroup::from_elements(x.size(), std::move(elements));
}

namespace {

PermutationGroup conjugate_subgroup(const PermutationGroup& P, const Permutation& g) {
    const Permutation gi = g.inverse();
    std::vector<Permutation> gens;
    for (const auto& x : P.generators()) gens.push_back(gi * x * g);
    return PermutationGroup(P.degree(), std::move(gens), P.order());
}

std::size_t intersection_size(const PermutationGroup& A, const PermutationGroup& B) {
    std::size_t out = 0;
    for (const auto& a : A.elements())
        if (B.index_of(a)) ++out;
    return out;
}

} // namespace

RecognitionReport recognize_cartan(const ColoredGraph& d, std::size_t max_points) {
    RecognitionReport rep;
    rep.n = d.size();
    if (d.size() > max_points)
        throw BudgetExceeded("recognize_cartan: " + std::to_string(d.size()) + " points exceed the budget",
                             d.size());

    // Step 1: coherent closure
    const CoherentConfiguration X = wl_closure(d).config;
    rep.rank = X.rank();
    const std::size_t n = X.size();

    // Step 2: find a base pair
    for (std::size_t a = 0; a < n && !rep.base_pair; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (point_extension(X, {a, b}).rank() == n * n) {
                rep.base_pair = {a, b};
                break;
            }
    if (!rep.base_pair) {
        rep.stage_failed = 2;
        rep.reason = "no two-point extension is complete (base number exceeds 2)";
        return rep;
    }

    // Step 3: automorphism group; simple, or a small extension of a unique
    // nonabelian simple minimal normal subgroup
    PermutationGroup G(1, {});
    try {
        G = aut_group(X);
    } catch (const BudgetExceeded& e) {
        rep.stage_failed = 3;
        rep.reason = std::string("automorphism search exceeded its budget: ") + e.what();
        return rep;
    }
    rep.group_order = G.order();
    if (!G.transitive()) {
        rep.stage_failed = 3;
        rep.reason = "automorphism group is not transitive";
        return rep;
    }
    std::uint64_t socle_order = G.order();
    if (G.is_simple()) {
        rep.socle_order = G.order();
    } else {
        const auto minimal = G.minimal_normal_subgroups();
        if (minimal.size() != 1 || minimal[0].is_abelian() || !minimal[0].is_simple()) {
            rep.stage_failed = 3;
            rep.reason = "automorphism group is not simple (and has no unique nonabelian simple minimal "
                         "normal subgroup)";
            return rep;
        }
        socle_order = minimal[0].order();
        rep.socle_order = socle_order;
        rep.caveats.push_back("automorphism group of order " + std::to_string(G.order()) +
                              " is not simple; its unique minimal normal subgroup of order " +
                              std::to_string(socle_order) + " (index " +
                              std::to_string(G.order() / socle_order) + ") drives the order analysis");
    }

    // Step 4: match the simple order against the Lie order formulas
    rep.candidate_families = lie_order_matches(BigInt(socle_order));
    if (rep.candidate_families.empty()) {
        rep.stage_failed = 4;
        rep.reason = "no simple group of Lie type in the search box has order " +
                     std::to_string(socle_order);
        return rep;
    }

    // Step 5: Sylow subgroup with the Borel conditions
    const PermutationGroup H = G.point_stabilizer(0);
    for (const auto& cand : rep.candidate_families) {
        const std::uint64_t p = cand.characteristic;
        if (G.order() % p != 0) continue;
        const PermutationGroup P0 = G.sylow_subgroup(p);
        const PermutationGroup NP0 = G.normalizer(P0);
        // one Sylow subgroup per coset of the normalizer
        std::vector<char> seen(G.order(), 0);
        for (std::size_t gi = 0; gi < G.order(); ++gi) {
            if (seen[gi]) continue;
            const Permutation& g = G.elements()[gi];
            for (const auto& nelt : NP0.elements()) seen[*G.index_of(nelt * g)] = 1;
            const PermutationGroup P = conjugate_subgroup(P0, g);
            if (intersection_size(H, P) != 1) continue;
            bool h_normalizes = true;
            for (const auto& h : H.elements()) {
                const Permutation hi = h.inverse();
                for (const auto& pg : P.generators())
                    if (!P.index_of(hi * pg * h)) { h_normalizes = false; break; }
                if (!h_normalizes) break;
            }
            if (!h_normalizes) continue;
            const PermutationGroup B = G.normalizer(P);
            if (B.order() != H.order() * P.order()) continue;
            // Step 6: accept
            rep.accepted = true;
            rep.accepted_family = cand;
            rep.H_order = H.order();
            rep.P_order = P.order();
            rep.B_order = B.order();
            rep.N_order = G.normalizer(H).order();
            rep.caveats.push_back("N computed as N_G(H); the finitely many exceptional groups with "
                                  "N != N_G(H) are not distinguished");
            return rep;
        }
    }
    rep.stage_failed = 5;
    rep.reason = "no Sylow subgroup satisfies H cap P = 1, H <= N_G(P), |N_G(P)| = |H||P| for any "
                 "candidate characteristic";
    return rep;
}

IsoGraphsResult iso_graphs(const ColoredGraph& d, const ColoredGraph& d2, const IsoBudget& budget) {
    auto closed = compatible_closure(d, d2);
    if (auto* inc = std::get_if<Incompatible>(&closed))
        return IsoGraphsResult{false, inc->reason, {}};
    auto& pc = std::get<PairedClosure>(closed);
    return IsoGraphsResult{true, "", iso_set(pc.x, pc.y, pc.phi, budget)};
}

IsoGraphsResult iso_graphs(const ColoredGraph& d, const ColoredGraph& d2, const std::vector<Color>& psi,
                           const IsoBudget& budget) {
    auto closed = compatible_closure(d, d2, psi);
    if (auto* inc = std::get_if<Incompatible>(&closed))
        return IsoGraphsResult{false, inc->reason, {}};
    auto& pc = std::get<PairedClosure>(closed);
    return IsoGraphsResult{true, "", iso_set(pc.x, pc.y, pc.phi, budget)};
}

} // namespace cohcfg
