#include "cohcfg/field.hpp"

#include <map>
#include <stdexcept>

namespace cohcfg {

namespace {

using Poly = std::vector<std::uint32_t>; // little-endian, may carry trailing zeros

int degree(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d]) return d;
    return -1;
}

Poly poly_mod(Poly f, const Poly& m, std::uint32_t p) {
    const int dm = degree(m);
    for (int d = degree(f); d >= dm; d = degree(f)) {
        // m is monic
        const std::uint32_t c = f[d];
        for (int i = 0; i <= dm; ++i) {
            const std::uint32_t sub = (c * m[i]) % p;
            f[d - dm + i] = (f[d - dm + i] + p - sub % p) % p;
        }
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
    Poly r = poly_mod(f, d, p);
    return degree(r) < 0;
}

// Trial division by all monic polynomials of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, std::uint32_t p) {
    const int dm = degree(m);
    if (dm < 1) return false;
    for (int d = 1; 2 * d <= dm; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly cand(d + 1, 0);
            std::uint64_t t = v;
            for (int i = 0; i < d; ++i) { cand[i] = t % p; t /= p; }
            cand[d] = 1;
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

const std::map<std::uint32_t, std::vector<std::uint32_t>>& bundled_moduli() {
    // Conway polynomials, little-endian monic coefficients.
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {2, 2, 1}},        // x^2 + 2x + 2
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {2, 4, 1}},       // x^2 + 4x + 2
        {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
    };
    return table;
}

} // namespace

bool FiniteField::is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> FiniteField::prime_power(std::uint32_t n) {
    if (n < 2) return {0, 0};
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) { p = d; break; }
    if (p == 0) return {n, 1};
    std::uint32_t e = 0, m = n;
    while (m % p == 0) { m /= p; ++e; }
    return m == 1 ? std::pair{p, e} : std::pair{0u, 0u};
}

FiniteField FiniteField::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: " + std::to_string(p) + " is not prime");
    return FiniteField(p, 1, {0, 1});
}

FiniteField FiniteField::extension(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    if (e < 2) throw std::invalid_argument("FiniteField: extension degree must be >= 2");
    if (modulus.size() != e + 1 || modulus[e] != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree e");
    for (auto& c : modulus) c %= p;
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("FiniteField: modulus is reducible");
    return FiniteField(p, e, std::move(modulus));
}

FiniteField FiniteField::of_order(std::uint32_t q) {
    auto [p, e] = prime_power(q);
    if (p == 0) throw std::invalid_argument("FiniteField: " + std::to_string(q) + " is not a prime power");
    if (e == 1) return prime(p);
    auto it = bundled_moduli().find(q);
    if (it == bundled_moduli().end())
        throw std::invalid_argument("FiniteField: no bundled modulus for q=" + std::to_string(q) +
                                    "; supply one via FiniteField::extension");
    return FiniteField(p, e, it->second);
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q_ > 2048 / p) throw std::invalid_argument("FiniteField: order too large");
        q_ *= p;
    }
    auto to_poly = [&](std::uint32_t v) {
        Poly out(e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) { out[i] = v % p_; v /= p_; }
        return out;
    };
    auto from_poly = [&](const Poly& f) {
        std::uint32_t v = 0;
        for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + (i < f.size() ? f[i] : 0);
        return v;
    };
    add_.assign(std::size_t{q_} * q_, 0);
    mul_.assign(std::size_t{q_} * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly pa = to_poly(a);
        Poly na(e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = from_poly(na);
        for (std::uint32_t b = 0; b < q_; ++b) {
            Poly pb = to_poly(b);
            Poly s(e_, 0);
            for (std::uint32_t i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = from_poly(s);
            mul_[a * q_ + b] = from_poly(poly_mod(poly_mul(pa, pb, p_), modulus_, p_));
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return inv_[a];
}

std::uint32_t FiniteField::primitive_element() const {
    for (std::uint32_t a = 1; a < q_; ++a) {
        std::uint32_t x = a, ord = 1;
        while (x != 1) { x = mul(x, a); ++ord; }
        if (ord == q_ - 1) return a;
    }
    throw std::logic_error("FiniteField: no primitive element found");
}

} // namespace cohcfg
