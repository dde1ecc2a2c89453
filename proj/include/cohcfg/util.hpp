#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohcfg {

/// Thrown when an operation would exceed its configured budget.
/// `required` carries the budget that would have been needed, when known.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::size_t required = 0)
        : std::runtime_error(std::move(what)), required(required) {}
    std::size_t required;
};

inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a_u64(std::uint64_t v, std::uint64_t h = 1469598103934665603ULL) {
    return fnv1a(&v, sizeof v, h);
}

} // namespace cohcfg
