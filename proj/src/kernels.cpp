#include "bvc/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define BVC_X86 1
#endif

namespace bvc::kernels {

namespace scalar {

std::size_t count_below(std::span<const Rank> ranks, Rank threshold) {
  std::size_t n = 0;
  for (Rank r : ranks) n += r < threshold ? 1 : 0;
  return n;
}

void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts) {
  for (std::size_t i = 0; i < row.size(); ++i) counts[i] += row[i] < threshold ? 1 : 0;
}

}  // namespace scalar

namespace avx2 {

#ifdef BVC_X86

bool supported() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) std::size_t count_below(std::span<const Rank> ranks,
                                                        Rank threshold) {
  const Rank* p = ranks.data();
  std::size_t n = ranks.size();
  std::size_t i = 0;
  std::size_t total = 0;
  const __m256i t = _mm256_set1_epi16(threshold);
  for (; i + 16 <= n; i += 16) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    __m256i lt = _mm256_cmpgt_epi16(t, v);
    // two mask bits per 16-bit lane
    total += static_cast<std::size_t>(__builtin_popcount(
                 static_cast<unsigned>(_mm256_movemask_epi8(lt)))) / 2;
  }
  for (; i < n; ++i) total += p[i] < threshold ? 1 : 0;
  return total;
}

__attribute__((target("avx2"))) void accumulate_below(std::span<const Rank> row, Rank threshold,
                                                      std::span<std::int32_t> counts) {
  const Rank* p = row.data();
  std::int32_t* out = counts.data();
  std::size_t n = row.size();
  std::size_t i = 0;
  const __m256i t = _mm256_set1_epi32(threshold);
  for (; i + 8 <= n; i += 8) {
    __m128i narrow = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i));
    __m256i wide = _mm256_cvtepi16_epi32(narrow);
    __m256i lt = _mm256_cmpgt_epi32(t, wide);  // -1 where counted
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi32(acc, lt));
  }
  for (; i < n; ++i) out[i] += p[i] < threshold ? 1 : 0;
}

#else

bool supported() { return false; }
std::size_t count_below(std::span<const Rank> ranks, Rank threshold) {
  return scalar::count_below(ranks, threshold);
}
void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts) {
  scalar::accumulate_below(row, threshold, counts);
}

#endif

}  // namespace avx2

namespace {

Isa detect() { return avx2::supported() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void pin_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2::supported()) isa = Isa::Scalar;
  selected().store(isa, std::memory_order_relaxed);
}

void unpin_isa() { selected().store(detect(), std::memory_order_relaxed); }

std::size_t count_below(std::span<const Rank> ranks, Rank threshold) {
  return active_isa() == Isa::Avx2 ? avx2::count_below(ranks, threshold)
                                   : scalar::count_below(ranks, threshold);
}

void accumulate_below(std::span<const Rank> row, Rank threshold, std::span<std::int32_t> counts) {
  if (active_isa() == Isa::Avx2)
    avx2::accumulate_below(row, threshold, counts);
  else
    scalar::accumulate_below(row, threshold, counts);
}

}  // namespace bvc::kernels
