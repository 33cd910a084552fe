// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random streams (Philox4x32-10). A stream is identified by a
// 64-bit key and a 64-bit stream index, so realization i of a run draws the
// same numbers no matter which thread evaluates it.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace snlink {

inline constexpr std::string_view kGeneratorName = "philox4x32-10";

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

[[nodiscard]] PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key);

class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();

    /// Uniform double in the open interval (0, 1), 53 random bits.
    double uniform();

    /// Poisson variate: inversion for small means, PTRS rejection otherwise.
    std::uint64_t poisson(double mean);

private:
    PhiloxKey key_;
    PhiloxBlock counter_;
    PhiloxBlock buffer_{};
    int used_ = 4;
};

}  // namespace snlink
