#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohcfg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Families of finite simple groups of Lie type.
enum class LieFamily { A, A2, B, C, D, D2, E6, E6_2, E7, E8, F4, G2, D4_3, F4_2, G2_2, B2_2 };

const char* lie_family_name(LieFamily f);                 // "A", "2A", ..., "2B2"
LieFamily lie_family_from_name(const std::string& name);  // throws on unknown

/// Exact order of the simple group of the given family by the standard
/// product formulas. Validates the (family, l, q) parameter range, including
/// the q shapes of the Suzuki and Ree families; throws std::invalid_argument
/// outside it.
BigInt lie_order(LieFamily family, unsigned l, std::uint64_t q);

struct LieCandidate {
    LieFamily family;
    unsigned l;
    std::uint64_t q;
    std::uint64_t characteristic;
};

/// All (family, l, q) in the box l <= l_max, q <= q_max whose simple group
/// has the given order; parameter combinations naming non-simple or
/// duplicated groups are excluded. Order coincidences yield several entries.
std::vector<LieCandidate> lie_order_matches(const BigInt& order, unsigned l_max = 8,
                                            std::uint64_t q_max = 64);

/// Exact-arithmetic check of the class-size inequality
///   k/m + r_m/m_0 <= 1/(2 w k)
/// with the table data per family: k the torus-order upper bound, w the Weyl
/// group order, m_0 (and m_1, r_m where the torus has reflection-like
/// elements) the tabulated class-size lower bounds. For exceptional families
/// the check reduces to m_0 >= 2 w k^2.
struct LieBoundReport {
    std::string family;
    unsigned l;
    std::uint64_t q;
    bool exceptional;
    std::string m_used;  // "m0" or "m1"
    BigRational m0, m, r_m;
    BigInt k, w;
    BigRational lhs, rhs; // of k/m + r_m/m0 <= 1/(2wk)
    bool holds;
    bool in_class;        // l >= l_0 and q >= a*l (always true for exceptional)
    std::string note;
};

LieBoundReport lie_bound_check(LieFamily family, unsigned l, std::uint64_t q);

} // namespace cohcfg
