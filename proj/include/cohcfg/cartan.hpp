#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohcfg/coherent_configuration.hpp"
#include "cohcfg/field.hpp"
#include "cohcfg/perm.hpp"

namespace cohcfg {

/// 2x2 matrix over a small finite field, entries as field element indices.
struct Mat2 {
    std::uint32_t a, b, c, d;
    auto operator<=>(const Mat2&) const = default;
};

Mat2 mat_mul(const FiniteField& F, const Mat2& m1, const Mat2& m2);
std::uint32_t mat_det(const FiniteField& F, const Mat2& m);
Mat2 mat_inv(const FiniteField& F, const Mat2& m);
/// Projective representative: scaled so the first nonzero of (a,b,c,d) is 1.
Mat2 mat_projective(const FiniteField& F, const Mat2& m);
/// Row-major lexicographic encoding, the fixed element order of the builders.
std::uint64_t mat_encode(const FiniteField& F, const Mat2& m);

/// A matrix group over F_q with the Borel-family subgroups picked out, as
/// index lists into the sorted element list.
struct MatrixGroupData {
    FiniteField field;
    std::vector<Mat2> elements;      // sorted by mat_encode
    std::vector<std::size_t> H;      // diagonal torus
    std::vector<std::size_t> B;      // upper triangular
    std::vector<std::size_t> N;      // H together with Hi, i = [[0,-1],[1,0]]
    std::vector<std::size_t> U;      // unipotent upper triangular
    std::vector<std::size_t> V;      // unipotent lower triangular
    bool projective = false;         // elements are projective representatives
};

/// SL(2,q): all det-1 matrices. |G| = q(q+1)(q-1), |H| = q-1, |B| = q(q-1),
/// |N| = 2(q-1), |U| = |V| = q. Budget: 4 <= q <= 32.
MatrixGroupData build_sl2(std::uint32_t q);
/// PSL(2,q): SL(2,q) modulo its center, as projective representatives.
MatrixGroupData build_psl2(std::uint32_t q);
/// PGL(2,q): all invertible matrices modulo scalars. Same subgroup orders as
/// SL(2,q); for even q the three groups coincide.
MatrixGroupData build_pgl2(std::uint32_t q);

/// The Cartan scheme for parameter q: the coherent configuration of the
/// torus-coset action of the projective linear group PGL(2,q) on
/// n = q^2 + q points. For even q this is literally the SL(2,q) = PSL(2,q)
/// action on cosets of its diagonal subgroup; for odd q the SL/PSL coset
/// actions give a strictly finer configuration and it is the projective
/// action that has the Cartan parameters (rank q+4, k = q-1).
struct CartanSchemeBundle {
    std::uint32_t q = 0;
    std::string variant;     // "sl2" or "psl2" (the realization carried in `matrices`)
    std::size_t n = 0;       // q^2 + q
    std::size_t k = 0;       // max valency, = q - 1
    std::uint64_t group_order = 0; // q(q+1)(q-1)
    CoherentConfiguration scheme;
    std::size_t base_point = 0; // index of the coset {H}
    PermutationGroup action;    // the Cartan action, degree n
    // subgroup element indices into action.elements()
    std::vector<std::size_t> H, B, N, U, V;
    Color s1 = 0, si = 0, su = 0, sv = 0; // tagged relations
    MatrixGroupData matrices;             // the chosen matrix realization
};

CartanSchemeBundle cartan_scheme(std::uint32_t q, const std::string& variant = "sl2");

/// inv(G, G/H) for an arbitrary group-with-subgroup, with the base point
/// {H} tagged.
struct GenericScheme {
    CoherentConfiguration scheme;
    std::size_t base_point;
    CosetAction cosets;
};
GenericScheme generic_scheme(const PermutationGroup& G, const std::vector<std::size_t>& subgroup_elements);

/// Re-derives the s_1, s_i, s_u, s_v tags of a bundle from the double-coset
/// bijection and checks independence from the choice of unipotent entries.
/// Returns {s1, si, su, sv}.
std::array<Color, 4> tag_special_relations(const CartanSchemeBundle& bundle);

} // namespace cohcfg
