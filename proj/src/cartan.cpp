#include "cohcfg/cartan.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "cohcfg/util.hpp"

namespace cohcfg {

Mat2 mat_mul(const FiniteField& F, const Mat2& m1, const Mat2& m2) {
    return Mat2{F.add(F.mul(m1.a, m2.a), F.mul(m1.b, m2.c)),
                F.add(F.mul(m1.a, m2.b), F.mul(m1.b, m2.d)),
                F.add(F.mul(m1.c, m2.a), F.mul(m1.d, m2.c)),
                F.add(F.mul(m1.c, m2.b), F.mul(m1.d, m2.d))};
}

std::uint32_t mat_det(const FiniteField& F, const Mat2& m) {
    return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

Mat2 mat_inv(const FiniteField& F, const Mat2& m) {
    const std::uint32_t di = F.inv(mat_det(F, m));
    return Mat2{F.mul(m.d, di), F.mul(F.neg(m.b), di), F.mul(F.neg(m.c), di), F.mul(m.a, di)};
}

Mat2 mat_projective(const FiniteField& F, const Mat2& m) {
    for (std::uint32_t x : {m.a, m.b, m.c, m.d})
        if (x != 0) {
            const std::uint32_t s = F.inv(x);
            return Mat2{F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
        }
    throw std::invalid_argument("mat_projective: zero matrix");
}

std::uint64_t mat_encode(const FiniteField& F, const Mat2& m) {
    const std::uint64_t q = F.q();
    return ((static_cast<std::uint64_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
}

namespace {

constexpr std::uint32_t kMinQ = 4, kMaxQ = 32;

FiniteField checked_field(std::uint32_t q) {
    if (q < kMinQ || q > kMaxQ)
        throw std::invalid_argument("q must satisfy " + std::to_string(kMinQ) + " <= q <= " +
                                    std::to_string(kMaxQ) + " (q > 3 and |Omega| = q^2+q within budget)");
    return FiniteField::of_order(q); // rejects non prime powers
}

void fill_subgroups(MatrixGroupData& data) {
    const FiniteField& F = data.field;
    const Mat2 i_mat{0, F.neg(1), 1, 0};
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t idx = 0; idx < data.elements.size(); ++idx)
        index[mat_encode(F, data.elements[idx])] = idx;
    std::vector<std::size_t> n_extra;
    for (std::size_t idx = 0; idx < data.elements.size(); ++idx) {
        const Mat2& m = data.elements[idx];
        if (m.b == 0 && m.c == 0) {
            data.H.push_back(idx);
            Mat2 hi = mat_mul(F, m, i_mat);
            if (data.projective) hi = mat_projective(F, hi);
            n_extra.push_back(index.at(mat_encode(F, hi)));
        }
        if (m.c == 0) data.B.push_back(idx);
        if (m.c == 0 && m.a == 1 && m.d == 1) data.U.push_back(idx);
        if (m.b == 0 && m.a == 1 && m.d == 1) data.V.push_back(idx);
    }
    data.N = data.H;
    data.N.insert(data.N.end(), n_extra.begin(), n_extra.end());
    std::sort(data.N.begin(), data.N.end());
    data.N.erase(std::unique(data.N.begin(), data.N.end()), data.N.end());
}

} // namespace

MatrixGroupData build_sl2(std::uint32_t q) {
    MatrixGroupData data{checked_field(q), {}, {}, {}, {}, {}, {}, false};
    const FiniteField& F = data.field;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d)
                    if (mat_det(F, Mat2{a, b, c, d}) == 1) data.elements.push_back(Mat2{a, b, c, d});
    // the scan order is the mat_encode order, so elements are sorted
    fill_subgroups(data);
    return data;
}

MatrixGroupData build_psl2(std::uint32_t q) {
    MatrixGroupData data{checked_field(q), {}, {}, {}, {}, {}, {}, true};
    const FiniteField& F = data.field;
    std::vector<std::uint64_t> seen;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d) {
                    const Mat2 m{a, b, c, d};
                    if (mat_det(F, m) != 1) continue;
                    seen.push_back(mat_encode(F, mat_projective(F, m)));
                }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    const std::uint64_t qq = q;
    for (std::uint64_t code : seen)
        data.elements.push_back(Mat2{static_cast<std::uint32_t>(code / (qq * qq * qq)),
                                     static_cast<std::uint32_t>(code / (qq * qq) % qq),
                                     static_cast<std::uint32_t>(code / qq % qq),
                                     static_cast<std::uint32_t>(code % qq)});
    fill_subgroups(data);
    return data;
}

MatrixGroupData build_pgl2(std::uint32_t q) {
    MatrixGroupData data{checked_field(q), {}, {}, {}, {}, {}, {}, true};
    const FiniteField& F = data.field;
    std::vector<std::uint64_t> seen;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d) {
                    const Mat2 m{a, b, c, d};
                    if (mat_det(F, m) == 0) continue;
                    seen.push_back(mat_encode(F, mat_projective(F, m)));
                }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    const std::uint64_t qq = q;
    for (std::uint64_t code : seen)
        data.elements.push_back(Mat2{static_cast<std::uint32_t>(code / (qq * qq * qq)),
                                     static_cast<std::uint32_t>(code / (qq * qq) % qq),
                                     static_cast<std::uint32_t>(code / qq % qq),
                                     static_cast<std::uint32_t>(code % qq)});
    fill_subgroups(data);
    return data;
}

GenericScheme generic_scheme(const PermutationGroup& G, const std::vector<std::size_t>& subgroup_elements) {
    CosetAction cosets = coset_action(G, subgroup_elements);
    const auto id_idx = G.index_of(Permutation::identity(G.degree()));
    const std::size_t base = cosets.coset_of[*id_idx];
    CoherentConfiguration scheme = inv_config(cosets.action);
    return GenericScheme{std::move(scheme), base, std::move(cosets)};
}

CartanSchemeBundle cartan_scheme(std::uint32_t q, const std::string& variant) {
    if (variant != "sl2" && variant != "psl2")
        throw std::invalid_argument("cartan_scheme: variant must be sl2 or psl2");
    MatrixGroupData realization = variant == "psl2" ? build_psl2(q) : build_sl2(q);
    const MatrixGroupData pgl = build_pgl2(q);
    const FiniteField& F = pgl.field;

    // right cosets of the torus; scanning in element order finds each coset
    // first at its least member, which becomes the representative
    const std::size_t order = pgl.elements.size();
    std::unordered_map<std::uint64_t, std::size_t> elem_index;
    elem_index.reserve(order * 2);
    for (std::size_t idx = 0; idx < order; ++idx) elem_index[mat_encode(F, pgl.elements[idx])] = idx;
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> coset_of(order, kUnset);
    std::vector<std::size_t> coset_rep;
    for (std::size_t idx = 0; idx < order; ++idx) {
        if (coset_of[idx] != kUnset) continue;
        const auto coset = static_cast<std::uint32_t>(coset_rep.size());
        coset_rep.push_back(idx);
        for (std::size_t h : pgl.H) {
            const Mat2 m = mat_projective(F, mat_mul(F, pgl.elements[h], pgl.elements[idx]));
            coset_of[elem_index.at(mat_encode(F, m))] = coset;
        }
    }
    const std::size_t n = coset_rep.size();

    auto act_perm = [&](const Mat2& g) {
        std::vector<std::uint32_t> img(n);
        for (std::size_t c = 0; c < n; ++c) {
            const Mat2 m = mat_projective(F, mat_mul(F, pgl.elements[coset_rep[c]], g));
            img[c] = coset_of[elem_index.at(mat_encode(F, m))];
        }
        return Permutation(std::move(img));
    };

    // u, v and a torus generator generate the whole projective group
    const std::uint32_t xi = F.primitive_element();
    std::vector<Permutation> gen_perms;
    for (const Mat2& g : {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}, Mat2{xi, 0, 0, 1}})
        gen_perms.push_back(act_perm(g));
    PermutationGroup action(n, gen_perms);
    if (action.order() != order)
        throw std::logic_error("cartan_scheme: generators do not give the full projective group");

    CoherentConfiguration scheme = inv_config(action);
    const Mat2 id{1, 0, 0, 1};
    const std::size_t base_point = coset_of[elem_index.at(mat_encode(F, id))];

    auto to_action_indices = [&](const std::vector<std::size_t>& matrix_indices) {
        std::vector<std::size_t> out;
        for (std::size_t mi : matrix_indices) {
            const auto pos = action.index_of(act_perm(pgl.elements[mi]));
            if (!pos) throw std::logic_error("cartan_scheme: subgroup element escaped the action group");
            out.push_back(*pos);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::size_t> h_idx = to_action_indices(pgl.H);
    std::vector<std::size_t> b_idx = to_action_indices(pgl.B);
    std::vector<std::size_t> n_idx = to_action_indices(pgl.N);
    std::vector<std::size_t> u_idx = to_action_indices(pgl.U);
    std::vector<std::size_t> v_idx = to_action_indices(pgl.V);

    auto tag = [&](const Mat2& g) { return scheme.color(base_point, act_perm(g)(base_point)); };
    const Color s1 = scheme.color(base_point, base_point);
    const Color si = tag(Mat2{0, F.neg(1), 1, 0});
    const Color su = tag(Mat2{1, 1, 0, 1});
    const Color sv = tag(Mat2{1, 0, 1, 1});
    // the tags do not depend on the choice of nonzero unipotent entry
    if (tag(Mat2{1, 2 % q, 0, 1}) != su || tag(Mat2{1, 0, 2 % q, 1}) != sv)
        throw std::logic_error("cartan_scheme: unipotent tag depends on the entry choice");

    const std::size_t k = scheme.max_valency();
    return CartanSchemeBundle{q,
                              variant,
                              n,
                              k,
                              order,
                              std::move(scheme),
                              base_point,
                              std::move(action),
                              std::move(h_idx),
                              std::move(b_idx),
                              std::move(n_idx),
                              std::move(u_idx),
                              std::move(v_idx),
                              s1,
                              si,
                              su,
                              sv,
                              std::move(realization)};
}

std::array<Color, 4> tag_special_relations(const CartanSchemeBundle& bundle) {
    const auto& x = bundle.scheme;
    const auto& elems = bundle.action.elements();
    const std::uint32_t alpha = static_cast<std::uint32_t>(bundle.base_point);
    const auto D = relation_coset_bijection(x, bundle.action, bundle.H, alpha);

    auto class_of_coset = [&](const std::vector<std::size_t>& coset_members) {
        const Color s = x.color(alpha, elems[coset_members.front()](alpha));
        if (D[s] != coset_members)
            throw std::logic_error("tag_special_relations: D_s is not the expected double coset");
        return s;
    };

    auto double_coset_of = [&](std::size_t g) {
        std::vector<std::size_t> members;
        for (std::size_t h1 : bundle.H)
            for (std::size_t h2 : bundle.H)
                members.push_back(*bundle.action.index_of(elems[h1] * elems[g] * elems[h2]));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return members;
    };

    const Color s1 = class_of_coset(bundle.H);
    std::vector<std::size_t> n_minus_h;
    std::set_difference(bundle.N.begin(), bundle.N.end(), bundle.H.begin(), bundle.H.end(),
                        std::back_inserter(n_minus_h));
    const Color si = class_of_coset(double_coset_of(n_minus_h.front()));
    std::array<Color, 2> uv_tags{};
    int slot = 0;
    for (const auto* sub : {&bundle.U, &bundle.V}) {
        std::optional<Color> got;
        for (std::size_t g : *sub) {
            if (elems[g].is_identity()) continue;
            const Color s = class_of_coset(double_coset_of(g));
            if (got && *got != s)
                throw std::logic_error("tag_special_relations: unipotent tag depends on the choice");
            got = s;
        }
        uv_tags[slot++] = *got;
    }
    return {s1, si, uv_tags[0], uv_tags[1]};
}

} // namespace cohcfg
