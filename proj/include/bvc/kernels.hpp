#pragma once

#include <cstdint>
#include <limits>
#include <span>

// Tally kernels over dense rank data. Every entry is the 0-based position of
// a candidate inside one vote, or kUnranked when the vote does not approve it.
// A rank r counts towards level i exactly when r < i.

namespace bvc::kernels {

using Rank = std::int16_t;
inline constexpr Rank kUnranked = std::numeric_limits<Rank>::max();

enum class Isa { Scalar, Avx2 };

namespace scalar {
std::size_t count_below(std::span<const Rank> ranks, Rank threshold);
void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts);
}  // namespace scalar

namespace avx2 {
// Callers must check supported() first.
bool supported();
std::size_t count_below(std::span<const Rank> ranks, Rank threshold);
void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts);
}  // namespace avx2

// Best variant for the running CPU, detected once.
Isa active_isa();
const char* isa_name(Isa isa);

// Pin dispatch to one variant (tests, benchmarks). Pinning Avx2 on a CPU
// without it falls back to scalar.
void pin_isa(Isa isa);
void unpin_isa();

std::size_t count_below(std::span<const Rank> ranks, Rank threshold);
void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts);

}  // namespace bvc::kernels
