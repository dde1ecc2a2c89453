#pragma once

#include <cstdint>
#include <vector>

namespace cohcfg {

/// Small finite field F_q with q = p^e. Elements are dense indices 0..q-1
/// whose base-p digits (little endian) are the coefficients of the
/// representing polynomial. Arithmetic is table driven.
///
/// Moduli for q in {4, 8, 9, 16, 25, 27} are bundled (Conway polynomials);
/// other extension fields need a caller-supplied irreducible modulus.
class FiniteField {
public:
    static FiniteField prime(std::uint32_t p);
    /// `modulus`: monic irreducible of degree e over F_p, little-endian
    /// coefficients of length e+1. Irreducibility is verified.
    static FiniteField extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
    /// Prime fields directly, bundled moduli for the prime powers above.
    static FiniteField of_order(std::uint32_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t inv(std::uint32_t a) const; // throws on a == 0

    /// Smallest generator of the multiplicative group.
    std::uint32_t primitive_element() const;

    static bool is_prime(std::uint32_t n);
    /// Returns (p, e) with n = p^e, or (0, 0) if n is not a prime power > 1.
    static std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t n);

private:
    FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

} // namespace cohcfg
