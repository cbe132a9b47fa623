#pragma once

#include <bit>
#include <cstdint>

namespace isg {

/// Set of at most 64 element indices, one bit per element.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has(Mask m, int i) { return (m >> i) & 1U; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr Mask first_n(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Calls f(i) for every set bit i in ascending order.
template <class F>
constexpr void for_each_bit(Mask m, F&& f)
{
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        f(i);
    }
}

} // namespace isg
