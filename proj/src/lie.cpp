#include "cohcfg/lie.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "cohcfg/field.hpp"

namespace cohcfg {

namespace {

BigInt pw(std::uint64_t q, unsigned e) {
    BigInt out = 1;
    const BigInt base = q;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

std::uint64_t gcd64(std::uint64_t a, const BigInt& b) {
    return static_cast<std::uint64_t>(boost::multiprecision::gcd(BigInt(a), b));
}

bool odd_power_of(std::uint64_t q, std::uint64_t p) {
    unsigned e = 0;
    while (q % p == 0) { q /= p; ++e; }
    return q == 1 && e >= 3 && e % 2 == 1;
}

} // namespace

const char* lie_family_name(LieFamily f) {
    switch (f) {
        case LieFamily::A: return "A";
        case LieFamily::A2: return "2A";
        case LieFamily::B: return "B";
        case LieFamily::C: return "C";
        case LieFamily::D: return "D";
        case LieFamily::D2: return "2D";
        case LieFamily::E6: return "E6";
        case LieFamily::E6_2: return "2E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
        case LieFamily::F4: return "F4";
        case LieFamily::G2: return "G2";
        case LieFamily::D4_3: return "3D4";
        case LieFamily::F4_2: return "2F4";
        case LieFamily::G2_2: return "2G2";
        case LieFamily::B2_2: return "2B2";
    }
    return "?";
}

LieFamily lie_family_from_name(const std::string& name) {
    static const std::array<LieFamily, 16> all = {
        LieFamily::A,  LieFamily::A2,   LieFamily::B,    LieFamily::C,    LieFamily::D,  LieFamily::D2,
        LieFamily::E6, LieFamily::E6_2, LieFamily::E7,   LieFamily::E8,   LieFamily::F4, LieFamily::G2,
        LieFamily::D4_3, LieFamily::F4_2, LieFamily::G2_2, LieFamily::B2_2};
    for (LieFamily f : all)
        if (name == lie_family_name(f)) return f;
    throw std::invalid_argument("unknown Lie family: " + name);
}

BigInt lie_order(LieFamily family, unsigned l, std::uint64_t q) {
    const auto [p, e] = FiniteField::prime_power(static_cast<std::uint32_t>(q));
    if (p == 0) throw std::invalid_argument("lie_order: q must be a prime power");
    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(std::string("lie_order: ") + msg);
    };
    BigInt order;
    switch (family) {
        case LieFamily::A: {
            need(l >= 1, "A_l needs l >= 1");
            need(l > 1 || q >= 4, "A_1(2), A_1(3) are not simple");
            order = pw(q, l * (l + 1) / 2);
            for (unsigned i = 2; i <= l + 1; ++i) order *= pw(q, i) - 1;
            order /= gcd64(l + 1, BigInt(q) - 1);
            break;
        }
        case LieFamily::A2: {
            need(l >= 2, "2A_l needs l >= 2");
            need(l > 2 || q >= 3, "2A_2(2) is not simple");
            order = pw(q, l * (l + 1) / 2);
            for (unsigned i = 2; i <= l + 1; ++i) order *= pw(q, i) - (i % 2 == 0 ? 1 : -1);
            order /= gcd64(l + 1, BigInt(q) + 1);
            break;
        }
        case LieFamily::B:
        case LieFamily::C: {
            need(family == LieFamily::B ? l >= 2 : l >= 3, "B_l needs l >= 2, C_l needs l >= 3");
            need(l > 2 || q >= 3, "B_2(2) is not simple");
            order = pw(q, l * l);
            for (unsigned i = 1; i <= l; ++i) order *= pw(q, 2 * i) - 1;
            order /= gcd64(2, BigInt(q) - 1);
            break;
        }
        case LieFamily::D: {
            need(l >= 4, "D_l needs l >= 4");
            order = pw(q, l * (l - 1)) * (pw(q, l) - 1);
            for (unsigned i = 1; i <= l - 1; ++i) order *= pw(q, 2 * i) - 1;
            order /= gcd64(4, pw(q, l) - 1);
            break;
        }
        case LieFamily::D2: {
            need(l >= 4, "2D_l needs l >= 4");
            order = pw(q, l * (l - 1)) * (pw(q, l) + 1);
            for (unsigned i = 1; i <= l - 1; ++i) order *= pw(q, 2 * i) - 1;
            order /= gcd64(4, pw(q, l) + 1);
            break;
        }
        case LieFamily::E6: {
            need(l == 6, "E6 has l = 6");
            order = pw(q, 36);
            for (unsigned i : {2, 5, 6, 8, 9, 12}) order *= pw(q, i) - 1;
            order /= gcd64(3, BigInt(q) - 1);
            break;
        }
        case LieFamily::E6_2: {
            need(l == 6, "2E6 has l = 6");
            order = pw(q, 36) * (pw(q, 2) - 1) * (pw(q, 5) + 1) * (pw(q, 6) - 1) * (pw(q, 8) - 1) *
                    (pw(q, 9) + 1) * (pw(q, 12) - 1);
            order /= gcd64(3, BigInt(q) + 1);
            break;
        }
        case LieFamily::E7: {
            need(l == 7, "E7 has l = 7");
            order = pw(q, 63);
            for (unsigned i : {2, 6, 8, 10, 12, 14, 18}) order *= pw(q, i) - 1;
            order /= gcd64(2, BigInt(q) - 1);
            break;
        }
        case LieFamily::E8: {
            need(l == 8, "E8 has l = 8");
            order = pw(q, 120);
            for (unsigned i : {2, 8, 12, 14, 18, 20, 24, 30}) order *= pw(q, i) - 1;
            break;
        }
        case LieFamily::F4: {
            need(l == 4, "F4 has l = 4");
            order = pw(q, 24);
            for (unsigned i : {2, 6, 8, 12}) order *= pw(q, i) - 1;
            break;
        }
        case LieFamily::G2: {
            need(l == 2, "G2 has l = 2");
            need(q >= 3, "G2(2) is not simple");
            order = pw(q, 6) * (pw(q, 6) - 1) * (pw(q, 2) - 1);
            break;
        }
        case LieFamily::D4_3: {
            need(l == 4, "3D4 has l = 4");
            order = pw(q, 12) * (pw(q, 8) + pw(q, 4) + 1) * (pw(q, 6) - 1) * (pw(q, 2) - 1);
            break;
        }
        case LieFamily::F4_2: {
            need(l == 4, "2F4 has l = 4");
            need(odd_power_of(q, 2), "2F4 needs q = 2^(2m+1), q >= 8");
            order = pw(q, 12) * (pw(q, 6) + 1) * (pw(q, 4) - 1) * (pw(q, 3) + 1) * (BigInt(q) - 1);
            break;
        }
        case LieFamily::G2_2: {
            need(l == 2, "2G2 has l = 2");
            need(odd_power_of(q, 3), "2G2 needs q = 3^(2m+1), q >= 27");
            order = pw(q, 3) * (pw(q, 3) + 1) * (BigInt(q) - 1);
            break;
        }
        case LieFamily::B2_2: {
            need(l == 2, "2B2 has l = 2");
            need(odd_power_of(q, 2), "2B2 needs q = 2^(2m+1), q >= 8");
            order = pw(q, 2) * (pw(q, 2) + 1) * (BigInt(q) - 1);
            break;
        }
    }
    return order;
}

std::vector<LieCandidate> lie_order_matches(const BigInt& order, unsigned l_max, std::uint64_t q_max) {
    std::vector<LieCandidate> out;
    std::vector<std::uint64_t> prime_powers;
    for (std::uint64_t q = 2; q <= q_max; ++q)
        if (FiniteField::prime_power(static_cast<std::uint32_t>(q)).first != 0) prime_powers.push_back(q);
    static const std::array<LieFamily, 16> all = {
        LieFamily::A,  LieFamily::A2,   LieFamily::B,    LieFamily::C,    LieFamily::D,  LieFamily::D2,
        LieFamily::E6, LieFamily::E6_2, LieFamily::E7,   LieFamily::E8,   LieFamily::F4, LieFamily::G2,
        LieFamily::D4_3, LieFamily::F4_2, LieFamily::G2_2, LieFamily::B2_2};
    for (LieFamily f : all)
        for (unsigned l = 1; l <= l_max; ++l)
            for (std::uint64_t q : prime_powers) {
                BigInt cand;
                try {
                    cand = lie_order(f, l, q);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (cand == order)
                    out.push_back(LieCandidate{f, l, q,
                                               FiniteField::prime_power(static_cast<std::uint32_t>(q)).first});
            }
    return out;
}

namespace {

struct ClassicalRow {
    BigRational m0, m1, r_m;
    BigInt k, w;
    unsigned l0;
    unsigned a;
    bool has_nu1; // the torus contains elements with a (dim-1)-eigenspace
};

ClassicalRow classical_row(LieFamily family, unsigned l, std::uint64_t q) {
    const BigInt qm1 = BigInt(q) - 1, qp1 = BigInt(q) + 1;
    switch (family) {
        case LieFamily::A:
            return {BigRational(pw(q, 2 * l), 2),
                    BigRational(pw(q, 4 * (l - 1)), 2),
                    BigRational(BigInt(l) * (l + 1) * qm1 * qm1, 2) - 1,
                    boost::multiprecision::pow(qm1, l),
                    factorial(l + 1),
                    7,
                    4,
                    true};
        case LieFamily::A2: {
            const unsigned half_up = (l + 1) / 2, half_down = l / 2;
            const BigInt k = boost::multiprecision::pow(qm1, half_up) *
                             boost::multiprecision::pow(qp1, half_down);
            const BigInt w = pw(2, half_up) * factorial(half_up);
            if (l % 2 == 0)
                return {BigRational(pw(q, 2 * l + 1), 2 * qp1),
                        BigRational(pw(q, 4 * l - 3), 2 * qp1),
                        BigRational(BigInt(l + 1) * qp1 * qp1, 2) + BigInt(q),
                        k, w, 6, 4, true};
            return {BigRational(pw(q, 4 * l - 3), 2 * qp1), 0, 0, k, w, 6, 4, false};
        }
        case LieFamily::B: {
            const BigInt k = boost::multiprecision::pow(qm1, l) / 2;
            const BigInt w = pw(2, l) * factorial(l);
            const bool even_case = (BigInt(l) * qm1 / 2) % 2 == 0;
            if (even_case)
                return {BigRational(pw(q, 2 * l + 1), 4 * qp1),
                        BigRational(pw(q, 4 * l - 1), 4 * qp1),
                        BigRational(BigInt(l) * (BigInt(q) - 3), 2) + 1,
                        k, w, 4, 4, true};
            return {BigRational(pw(q, 4 * l - 1), 4 * qp1), 0, 0, k, w, 4, 4, false};
        }
        case LieFamily::C:
            return {BigRational(pw(q, 4 * l - 4), 2), 0, 0, boost::multiprecision::pow(qm1, l),
                    pw(2, l) * factorial(l), 3, 4, false};
        case LieFamily::D:
            return {BigRational(pw(q, 4 * l - 3), 4 * qp1), 0, 0, boost::multiprecision::pow(qm1, l),
                    pw(2, l - 1) * factorial(l), 4, 2, false};
        case LieFamily::D2:
            return {BigRational(pw(q, 4 * l - 3), 4 * qp1), 0, 0,
                    boost::multiprecision::pow(qm1, l - 1) * qp1, pw(2, l - 1) * factorial(l), 4, 2, false};
        default:
            throw std::logic_error("classical_row: not a classical family");
    }
}

struct ExceptionalRow {
    BigRational m0;
    BigInt k, w;
    unsigned l;
};

ExceptionalRow exceptional_row(LieFamily family, std::uint64_t q) {
    const BigInt qm1 = BigInt(q) - 1, qp1 = BigInt(q) + 1;
    switch (family) {
        case LieFamily::E8:
            return {BigRational(pw(q, 112)), boost::multiprecision::pow(qm1, 8),
                    BigInt(16384) * 243 * 25 * 7, 8};
        case LieFamily::E7:
            return {BigRational(pw(q, 64), 2), boost::multiprecision::pow(qm1, 7),
                    BigInt(1024) * 81 * 5 * 7, 7};
        case LieFamily::E6:
            return {BigRational(pw(q, 30), 3), boost::multiprecision::pow(qm1, 6), BigInt(128) * 81 * 5, 6};
        case LieFamily::E6_2:
            return {BigRational(pw(q, 30), 3),
                    boost::multiprecision::pow(qm1, 4) * qp1 * qp1, BigInt(128) * 9, 6};
        case LieFamily::F4:
            return {BigRational(pw(q, 16)), boost::multiprecision::pow(qm1, 4), BigInt(128) * 9, 4};
        case LieFamily::G2:
            return {BigRational(pw(q, 4) * (pw(q, 3) - 1)), qm1 * qm1, 12, 2};
        case LieFamily::D4_3:
            return {BigRational(pw(q, 16)), qm1 * (pw(q, 3) - 1), 12, 4};
        case LieFamily::F4_2:
            return {BigRational(pw(q, 6) * qm1 * (pw(q, 3) + 1)), qm1 * qm1, 16, 4};
        case LieFamily::G2_2:
            return {BigRational(pw(q, 2) * (pw(q, 2) + q + 1)), qm1, 2, 2};
        case LieFamily::B2_2:
            return {BigRational(pw(q, 2) * qm1), qm1, 2, 2};
        default:
            throw std::logic_error("exceptional_row: not an exceptional family");
    }
}

bool is_classical(LieFamily f) {
    switch (f) {
        case LieFamily::A:
        case LieFamily::A2:
        case LieFamily::B:
        case LieFamily::C:
        case LieFamily::D:
        case LieFamily::D2: return true;
        default: return false;
    }
}

} // namespace

LieBoundReport lie_bound_check(LieFamily family, unsigned l, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("lie_bound_check: q >= 2 required");
    std::string note;

    if (is_classical(family)) {
        if (l < 1) throw std::invalid_argument("lie_bound_check: l >= 1 required");
        if (family == LieFamily::B && q % 2 == 0) {
            family = LieFamily::C;
            note = "B_l with even q treated as C_l; ";
        }
        const ClassicalRow row = classical_row(family, l, q);
        const bool use_m1 = row.has_nu1;
        const BigRational m = use_m1 ? row.m1 : row.m0;
        const BigRational lhs = BigRational(row.k) / m + row.r_m / row.m0;
        const BigRational rhs = BigRational(1) / (2 * row.w * row.k);
        const bool in_class = l >= row.l0 && q >= std::uint64_t{row.a} * l;
        if (!in_class) note += "outside class (needs l >= " + std::to_string(row.l0) + " and q >= " +
                               std::to_string(row.a) + "l); evaluated anyway";
        return LieBoundReport{lie_family_name(family), l, q, false, use_m1 ? "m1" : "m0",
                              row.m0, m, row.r_m, row.k, row.w, lhs, rhs, lhs <= rhs, in_class, note};
    }

    const ExceptionalRow row = exceptional_row(family, q);
    if (l != row.l) throw std::invalid_argument("lie_bound_check: wrong l for this family");
    bool valid_q = true;
    if (family == LieFamily::B2_2 || family == LieFamily::F4_2) valid_q = odd_power_of(q, 2);
    if (family == LieFamily::G2_2) valid_q = odd_power_of(q, 3);
    if (family == LieFamily::G2 && q < 3) valid_q = false;
    if (!valid_q) note = "q is not a valid parameter for this family; table arithmetic evaluated anyway";
    const BigRational lhs = BigRational(row.k) / row.m0;
    const BigRational rhs = BigRational(1) / (2 * row.w * row.k);
    return LieBoundReport{lie_family_name(family), l, q, true, "m0", row.m0, row.m0, 0,
                          row.k, row.w, lhs, rhs, lhs <= rhs, valid_q, note};
}

} // namespace cohcfg
