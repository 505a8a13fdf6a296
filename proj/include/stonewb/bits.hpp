#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace stonewb {

using Natural = std::uint64_t;

/// Subset of a small indexed universe (carrier positions, points, base indices).
using Mask = std::uint32_t;

/// Hard ceiling: tables of 2^n masks are materialized.
inline constexpr std::size_t kHardSizeLimit = 24;
inline constexpr std::size_t kDefaultSizeLimit = 16;

/// Ceiling for "for all subsets" work. WORKBENCH_SIZE_LIMIT overrides the
/// default; values above kHardSizeLimit are clamped.
std::size_t exhaustive_size_limit();

/// Throws SizeError when n exceeds exhaustive_size_limit().
void require_exhaustive(std::size_t n, std::string_view what);

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline constexpr Mask full_mask(std::size_t n) {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool contains(Mask m, std::size_t i) { return (m >> i) & 1U; }

inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

/// Positions of the set bits, ascending.
inline std::vector<std::size_t> members(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

}  // namespace stonewb
