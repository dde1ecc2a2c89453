#include "cohcfg/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "cohcfg/util.hpp"

namespace cohcfg {

namespace {

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        return fnv1a(p.images().data(), p.images().size() * sizeof(std::uint32_t));
    }
};

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t out = 1;
    while (n % p == 0) { n /= p; out *= p; }
    return out;
}

} // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (std::uint32_t v : img_) {
        if (v >= img_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::uint32_t> img(degree());
    for (std::size_t x = 0; x < degree(); ++x) img[x] = other.img_[img_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> img(degree());
    for (std::uint32_t x = 0; x < degree(); ++x) img[img_[x]] = x;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::uint32_t x = 0; x < degree(); ++x)
        if (img_[x] != x) return false;
    return true;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::size_t budget)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != degree) throw std::invalid_argument("PermutationGroup: generator degree mismatch");
    std::unordered_set<Permutation, PermHash> seen;
    std::queue<Permutation> frontier;
    auto id = Permutation::identity(degree);
    seen.insert(id);
    frontier.push(std::move(id));
    while (!frontier.empty()) {
        const Permutation cur = std::move(frontier.front());
        frontier.pop();
        for (const auto& g : generators_) {
            Permutation next = cur * g;
            if (seen.contains(next)) continue;
            if (seen.size() >= budget)
                throw BudgetExceeded("PermutationGroup: closure exceeds " + std::to_string(budget) +
                                         " elements",
                                     budget + 1);
            frontier.push(next);
            seen.insert(std::move(next));
        }
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
}

PermutationGroup PermutationGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermutationGroup g;
    g.degree_ = degree;
    g.elements_ = std::move(elements);
    g.generators_ = g.elements_;
    if (g.elements_.empty() || !g.elements_.front().is_identity() ||
        g.elements_.front().degree() != degree)
        throw std::invalid_argument("from_elements: missing identity");
    if (g.elements_.size() > 4096)
        throw std::invalid_argument("from_elements: too large to verify closure; use the generator ctor");
    for (const auto& a : g.elements_) {
        if (!g.index_of(a.inverse()))
            throw std::invalid_argument("from_elements: not closed under inverse");
        for (const auto& b : g.elements_)
            if (!g.index_of(a * b)) throw std::invalid_argument("from_elements: not closed under product");
    }
    return g;
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::vector<std::uint32_t>> PermutationGroup::orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t start = 0; start < degree_; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> orbit{start};
        seen[start] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& g : generators_) {
                const std::uint32_t img = g(orbit[i]);
                if (!seen[img]) { seen[img] = 1; orbit.push_back(img); }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool PermutationGroup::transitive() const { return orbits().size() == 1; }

PermutationGroup PermutationGroup::point_stabilizer(std::uint32_t alpha) const {
    PermutationGroup out;
    out.degree_ = degree_;
    for (const auto& g : elements_)
        if (g(alpha) == alpha) out.elements_.push_back(g);
    out.generators_ = out.elements_;
    return out;
}

std::vector<std::vector<std::size_t>> PermutationGroup::conjugacy_classes() const {
    const std::size_t m = elements_.size();
    std::vector<char> assigned(m, 0);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < m; ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> cls{i};
        assigned[i] = 1;
        for (std::size_t k = 0; k < cls.size(); ++k)
            for (const auto& g : generators_) {
                const Permutation conj = g.inverse() * elements_[cls[k]] * g;
                const auto idx = index_of(conj);
                if (!idx) throw std::logic_error("conjugacy_classes: conjugate escaped the element list");
                if (!assigned[*idx]) { assigned[*idx] = 1; cls.push_back(*idx); }
            }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

PermutationGroup PermutationGroup::centralizer(const Permutation& x) const {
    PermutationGroup out;
    out.degree_ = degree_;
    for (const auto& g : elements_)
        if (g * x == x * g) out.elements_.push_back(g);
    out.generators_ = out.elements_;
    return out;
}

PermutationGroup PermutationGroup::normalizer(const PermutationGroup& K) const {
    PermutationGroup out;
    out.degree_ = degree_;
    for (const auto& g : elements_) {
        const Permutation gi = g.inverse();
        bool ok = true;
        for (const auto& k : K.generators_)
            if (!K.index_of(gi * k * g)) { ok = false; break; }
        if (ok) out.elements_.push_back(g);
    }
    out.generators_ = out.elements_;
    return out;
}

bool PermutationGroup::contains_subgroup(const PermutationGroup& K) const {
    for (const auto& k : K.elements_)
        if (!index_of(k)) return false;
    return true;
}

bool PermutationGroup::is_simple() const {
    if (order() <= 1) return false;
    const auto classes = conjugacy_classes();
    for (const auto& cls : classes) {
        if (cls.size() == 1 && elements_[cls[0]].is_identity()) continue;
        std::vector<Permutation> gens;
        gens.reserve(cls.size());
        for (std::size_t idx : cls) gens.push_back(elements_[idx]);
        if (PermutationGroup(degree_, std::move(gens), order()).order() != order()) return false;
    }
    return true;
}

std::vector<PermutationGroup> PermutationGroup::minimal_normal_subgroups() const {
    const auto classes = conjugacy_classes();
    std::vector<PermutationGroup> closures;
    for (const auto& cls : classes) {
        if (cls.size() == 1 && elements_[cls[0]].is_identity()) continue;
        std::vector<Permutation> gens;
        for (std::size_t idx : cls) gens.push_back(elements_[idx]);
        PermutationGroup n(degree_, std::move(gens), order());
        if (n.order() == order()) continue;
        if (std::none_of(closures.begin(), closures.end(),
                         [&](const PermutationGroup& o) { return o.elements_ == n.elements_; }))
            closures.push_back(std::move(n));
    }
    std::vector<PermutationGroup> minimal;
    for (const auto& n : closures) {
        bool is_min = true;
        for (const auto& o : closures)
            if (o.order() < n.order() && n.contains_subgroup(o)) { is_min = false; break; }
        if (is_min) minimal.push_back(n);
    }
    std::sort(minimal.begin(), minimal.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return minimal;
}

bool PermutationGroup::is_abelian() const {
    for (const auto& a : generators_)
        for (const auto& b : generators_)
            if (!(a * b == b * a)) return false;
    return true;
}

PermutationGroup PermutationGroup::sylow_subgroup(std::uint64_t p) const {
    if (p < 2 || order() % p != 0)
        throw std::invalid_argument("sylow_subgroup: p does not divide the group order");
    const std::uint64_t target = p_part(order(), p);

    auto element_order = [&](const Permutation& x) {
        std::uint64_t ord = 1;
        Permutation pow = x;
        while (!pow.is_identity()) { pow = pow * x; ++ord; }
        return ord;
    };

    // seed with the first p-element of maximal p-power order
    const Permutation* seed = nullptr;
    std::uint64_t best = 1;
    for (const auto& x : elements_) {
        const std::uint64_t ord = element_order(x);
        if (ord > best && is_p_power(ord, p)) { best = ord; seed = &x; }
    }
    std::vector<Permutation> gens;
    if (seed) gens.push_back(*seed);
    PermutationGroup P(degree_, gens, order());

    while (P.order() < target) {
        const PermutationGroup N = normalizer(P);
        bool grown = false;
        for (const auto& x : N.elements()) {
            if (P.index_of(x)) continue;
            if (!is_p_power(element_order(x), p)) continue;
            auto try_gens = gens;
            try_gens.push_back(x);
            PermutationGroup Q(degree_, try_gens, order());
            if (is_p_power(Q.order(), p)) {
                gens = std::move(try_gens);
                P = std::move(Q);
                grown = true;
                break;
            }
        }
        if (!grown) throw std::logic_error("sylow_subgroup: failed to grow a p-subgroup");
    }
    return P;
}

CoherentConfiguration inv_config(const PermutationGroup& G) {
    const std::size_t n = G.degree();
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> orbit_id(n * n, kUnset);
    const auto& gens = G.generators().empty() ? G.elements() : G.generators();
    std::uint32_t next = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (orbit_id[i * n + j] != kUnset) continue;
            const std::uint32_t id = next++;
            orbit_id[i * n + j] = id;
            stack.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                for (const auto& g : gens) {
                    const std::uint32_t x = g(a), y = g(b);
                    if (orbit_id[x * n + y] == kUnset) {
                        orbit_id[x * n + y] = id;
                        stack.push_back({x, y});
                    }
                }
            }
        }
    // diagonal classes first, each group in discovery order
    std::vector<std::uint32_t> remap(next, kUnset);
    std::uint32_t assigned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t id = orbit_id[i * n + i];
        if (remap[id] == kUnset) remap[id] = assigned++;
    }
    for (std::size_t p = 0; p < n * n; ++p)
        if (remap[orbit_id[p]] == kUnset) remap[orbit_id[p]] = assigned++;
    std::vector<Color> colors(n * n);
    for (std::size_t p = 0; p < n * n; ++p) colors[p] = remap[orbit_id[p]];
    return require_coherent(ColoredGraph(n, std::move(colors)));
}

CosetAction coset_action(const PermutationGroup& G, const std::vector<std::size_t>& subgroup_elements,
                         std::size_t degree_budget) {
    const auto& elems = G.elements();
    std::vector<Permutation> H;
    for (std::size_t idx : subgroup_elements) H.push_back(elems[idx]);
    if (H.empty() || G.order() % H.size() != 0)
        throw std::invalid_argument("coset_action: subgroup size does not divide the group order");
    const std::size_t n_cosets = G.order() / H.size();
    if (n_cosets > degree_budget)
        throw BudgetExceeded("coset_action: degree " + std::to_string(n_cosets) + " exceeds budget",
                             n_cosets);

    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> coset_of(G.order(), kUnset);
    std::vector<std::size_t> coset_reps;
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        if (coset_of[idx] != kUnset) continue;
        const auto coset = static_cast<std::uint32_t>(coset_reps.size());
        coset_reps.push_back(idx);
        for (const auto& h : H) {
            const auto member = G.index_of(h * elems[idx]);
            if (!member) throw std::logic_error("coset_action: product escaped the group");
            coset_of[*member] = coset;
        }
    }
    if (coset_reps.size() != n_cosets)
        throw std::logic_error("coset_action: cosets do not partition the group");

    std::vector<Permutation> images;
    images.reserve(elems.size());
    for (const auto& g : elems) {
        std::vector<std::uint32_t> img(n_cosets);
        for (std::size_t c = 0; c < n_cosets; ++c) {
            const auto prod = G.index_of(elems[coset_reps[c]] * g);
            img[c] = coset_of[*prod];
        }
        images.push_back(Permutation(std::move(img)));
    }
    std::vector<Permutation> uniq = images;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<Permutation> action_gens;
    for (const auto& g : G.generators()) {
        const auto gi = G.index_of(g);
        action_gens.push_back(images[*gi]);
    }
    if (action_gens.empty()) action_gens.push_back(Permutation::identity(n_cosets));
    PermutationGroup action(n_cosets, action_gens);
    if (action.order() != uniq.size())
        throw std::logic_error("coset_action: induced group order mismatch");
    std::vector<std::uint32_t> action_of(elems.size());
    for (std::size_t idx = 0; idx < elems.size(); ++idx)
        action_of[idx] = static_cast<std::uint32_t>(*action.index_of(images[idx]));
    return CosetAction{G, subgroup_elements, std::move(coset_reps), std::move(coset_of), std::move(action),
                       std::move(action_of)};
}

std::vector<std::vector<std::size_t>> double_cosets(const PermutationGroup& G,
                                                    const std::vector<std::size_t>& H) {
    const auto& elems = G.elements();
    std::vector<char> assigned(elems.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        if (assigned[idx]) continue;
        std::unordered_set<std::size_t> members;
        for (std::size_t h1 : H) {
            const Permutation left = elems[h1] * elems[idx];
            for (std::size_t h2 : H) {
                const auto m = G.index_of(left * elems[h2]);
                if (!m) throw std::logic_error("double_cosets: product escaped the group");
                members.insert(*m);
            }
        }
        std::vector<std::size_t> coset(members.begin(), members.end());
        std::sort(coset.begin(), coset.end());
        for (std::size_t m : coset) assigned[m] = 1;
        out.push_back(std::move(coset));
    }
    return out;
}

std::vector<std::vector<std::size_t>> relation_coset_bijection(const CoherentConfiguration& x,
                                                               const PermutationGroup& G,
                                                               const std::vector<std::size_t>& H,
                                                               std::uint32_t alpha) {
    if (x.size() != G.degree()) throw std::invalid_argument("relation_coset_bijection: degree mismatch");
    std::vector<std::vector<std::size_t>> D(x.rank());
    const auto& elems = G.elements();
    for (std::size_t idx = 0; idx < elems.size(); ++idx)
        D[x.color(alpha, elems[idx](alpha))].push_back(idx);
    // consistency: D_{1_alpha} = H and |D_s| = n_s |H|
    std::vector<std::size_t> h_sorted = H;
    std::sort(h_sorted.begin(), h_sorted.end());
    if (D[x.color(alpha, alpha)] != h_sorted)
        throw std::logic_error("relation_coset_bijection: D_{s_1} != H");
    for (std::size_t s = 0; s < x.rank(); ++s) {
        const auto [src, dst] = x.fiber_pair(s);
        if (src != x.fiber_of_point(alpha)) continue;
        if (D[s].size() != x.valency(s) * H.size())
            throw std::logic_error("relation_coset_bijection: |D_s| != n_s |H| for s=" + std::to_string(s));
    }
    return D;
}

std::size_t permutation_character(const PermutationGroup& G, const Permutation& x) {
    if (x.degree() != G.degree()) throw std::invalid_argument("permutation_character: degree mismatch");
    return fix_set(x).size();
}

std::vector<std::uint32_t> fix_set(const Permutation& x) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < x.degree(); ++i)
        if (x(i) == i) out.push_back(i);
    return out;
}

ChiFormulaResult chi_via_formula(const PermutationGroup& G, std::uint32_t alpha, const Permutation& x,
                                 const PermutationGroup& N) {
    const PermutationGroup H = G.point_stabilizer(alpha);
    if (!N.contains_subgroup(H) || !G.normalizer(H).contains_subgroup(N))
        throw std::invalid_argument("chi_via_formula: need H <= N <= N_G(H)");

    // fusion hypothesis, checked exhaustively: G-conjugate elements of H are
    // N-conjugate
    const auto classes = G.conjugacy_classes();
    std::vector<std::size_t> class_of(G.order());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t idx : classes[c]) class_of[idx] = c;
    for (const auto& h1 : H.elements())
        for (const auto& h2 : H.elements()) {
            if (class_of[*G.index_of(h1)] != class_of[*G.index_of(h2)]) continue;
            bool n_conj = false;
            for (const auto& n : N.elements())
                if (n.inverse() * h1 * n == h2) { n_conj = true; break; }
            if (!n_conj)
                throw FusionHypothesisError("chi_via_formula: G-conjugate stabilizer elements not N-conjugate",
                                            h1, h2);
        }

    // x = h0^g0 with h0 in H
    std::optional<Permutation> h0, g0;
    for (const auto& h : H.elements()) {
        if (class_of[*G.index_of(h)] != class_of[*G.index_of(x)]) continue;
        for (const auto& g : G.elements())
            if (g.inverse() * h * g == x) { h0 = h; g0 = g; break; }
        if (h0) break;
    }
    if (!h0) return {0, {}}; // x^G does not meet H, so Fix(x) is empty

    const PermutationGroup C = G.centralizer(*h0);
    std::size_t c_cap_n = 0;
    for (const auto& c : C.elements())
        if (N.index_of(c)) ++c_cap_n;
    const std::size_t class_size = classes[class_of[*G.index_of(x)]].size();
    const std::size_t numerator = (N.order() / c_cap_n) * G.degree();
    if (numerator % class_size != 0)
        throw std::logic_error("chi_via_formula: non-integral character value");
    const std::size_t chi = numerator / class_size;

    std::vector<char> in_fix(G.degree(), 0);
    for (const auto& n : N.elements())
        for (const auto& c : C.elements()) {
            const Permutation g = n * c * *g0;
            in_fix[g(alpha)] = 1;
        }
    ChiFormulaResult out{chi, {}};
    for (std::uint32_t pt = 0; pt < G.degree(); ++pt)
        if (in_fix[pt]) out.fix.push_back(pt);
    return out;
}

} // namespace cohcfg
