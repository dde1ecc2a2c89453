#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cohcfg/coherent_configuration.hpp"

namespace cohcfg {

/// A permutation of {0..n-1}, acting on the right: x^g = images[x].
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> images);
    static Permutation identity(std::size_t n);

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// x^(a*b) = (x^a)^b.
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> img_;
};

/// A finite permutation group materialized as its full, lexicographically
/// sorted element list (closed under product and inverse). Desk scale only:
/// closure is breadth-first multiplication with an element budget.
class PermutationGroup {
public:
    /// Closure of the generators; throws BudgetExceeded past `budget` elements.
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::size_t budget = kDefaultBudget);
    /// Wraps an already-closed element list (sorted; closure is checked).
    static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

    static constexpr std::size_t kDefaultBudget = 1'000'000;

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::uint64_t order() const { return elements_.size(); }
    /// Index into elements() (they are sorted), or nullopt.
    std::optional<std::size_t> index_of(const Permutation& p) const;

    std::vector<std::vector<std::uint32_t>> orbits() const;
    bool transitive() const;
    PermutationGroup point_stabilizer(std::uint32_t alpha) const;
    /// Conjugacy classes as sorted lists of element indices, ordered by
    /// their least element index (so class 0 is always {identity}).
    std::vector<std::vector<std::size_t>> conjugacy_classes() const;
    PermutationGroup centralizer(const Permutation& x) const;
    /// Elements g with K^g = K, for a subgroup K of this group.
    PermutationGroup normalizer(const PermutationGroup& K) const;
    bool contains_subgroup(const PermutationGroup& K) const;

    /// True iff every nontrivial conjugacy class generates the whole group.
    bool is_simple() const;
    /// Normal closures of the nontrivial conjugacy classes that are proper
    /// subgroups, minimal ones first (deduplicated).
    std::vector<PermutationGroup> minimal_normal_subgroups() const;
    bool is_abelian() const;

    /// A Sylow p-subgroup, grown from a p-element of maximal order by
    /// repeatedly adjoining p-elements of the normalizer.
    PermutationGroup sylow_subgroup(std::uint64_t p) const;

private:
    PermutationGroup() = default;
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Orbits of G on ordered pairs: homogeneous iff G is transitive. Colors are
/// dense, diagonal classes first, in lexicographic discovery order.
CoherentConfiguration inv_config(const PermutationGroup& G);

/// Right-coset space of a subgroup: representatives are the least element of
/// each coset; the induced action permutes cosets by right multiplication.
struct CosetAction {
    PermutationGroup parent;
    std::vector<std::size_t> subgroup;     // element indices of H in parent
    std::vector<std::size_t> coset_reps;   // element index of each coset's least member
    std::vector<std::uint32_t> coset_of;   // parent element index -> coset index
    PermutationGroup action;               // induced group on cosets (may be unfaithful image)
    std::vector<std::uint32_t> action_of;  // parent element index -> index into action.elements()
};

CosetAction coset_action(const PermutationGroup& G, const std::vector<std::size_t>& subgroup_elements,
                         std::size_t degree_budget = 5000);

/// Double cosets H g H as sorted lists of element indices, ordered by least
/// element.
std::vector<std::vector<std::size_t>> double_cosets(const PermutationGroup& G,
                                                    const std::vector<std::size_t>& H);

/// For x = inv(G, G/H) built with base point alpha = {H}: the bijection
/// s -> D_s = {g : (alpha, alpha^g) in s}. Verifies that each D_s is a
/// double H-coset with |D_s| = n_s |H|.
std::vector<std::vector<std::size_t>> relation_coset_bijection(const CoherentConfiguration& x,
                                                               const PermutationGroup& G,
                                                               const std::vector<std::size_t>& H,
                                                               std::uint32_t alpha);

/// chi(x) = |Fix(x)| in the natural action of G.
std::size_t permutation_character(const PermutationGroup& G, const Permutation& x);
std::vector<std::uint32_t> fix_set(const Permutation& x);

struct ChiFormulaResult {
    std::size_t chi;
    std::vector<std::uint32_t> fix; // Fix(x) = {alpha^g : g in N C g0}
};

/// Thrown when the fusion hypothesis (G-conjugate elements of H are
/// N-conjugate) fails; carries a witness pair.
class FusionHypothesisError : public std::runtime_error {
public:
    FusionHypothesisError(std::string what, Permutation h1, Permutation h2)
        : std::runtime_error(std::move(what)), h1(std::move(h1)), h2(std::move(h2)) {}
    Permutation h1, h2;
};

/// Fixed-point count of x via |N:(C cap N)| |Omega| / |x^G| where
/// C = C_G(h0) and x = h0^g0 with h0 in the stabilizer of alpha. The fusion
/// hypothesis for N is verified exhaustively first. Returns chi = 0 when no
/// conjugate of x lies in the stabilizer.
ChiFormulaResult chi_via_formula(const PermutationGroup& G, std::uint32_t alpha, const Permutation& x,
                                 const PermutationGroup& N);

} // namespace cohcfg
