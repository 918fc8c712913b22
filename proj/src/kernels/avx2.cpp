// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "variants.hpp"

namespace synchro::kernels::detail {

void image_batch_avx2(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                      std::size_t count) {
  const __m256i byte_mask = _mm256_set1_epi64x(0xff);
  const auto* base = reinterpret_cast<const long long*>(table);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i masks = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t c = 0; c < chunks; ++c) {
      const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(8 * c));
      __m256i idx = _mm256_and_si256(_mm256_srl_epi64(masks, shift), byte_mask);
      idx = _mm256_add_epi64(idx, _mm256_set1_epi64x(static_cast<long long>(c * 256)));
      acc = _mm256_or_si256(acc, _mm256_i64gather_epi64(base, idx, 8));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < count) {
    image_batch_scalar(table, chunks, in + i, out + i, count - i);
  }
}

void apply_word_u8_avx2(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes) {
  // vpshufb looks up within 128-bit halves only, so a 32-entry table is split
  // into two broadcast halves and the results are blended on bit 4 of the index.
  const __m256i fifteen = _mm256_set1_epi8(15);
  __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lanes));
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::uint8_t* row = tables + static_cast<std::size_t>(word[pos]) * transform_lanes;
    const __m256i lo = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row)));
    const __m256i hi = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + 16)));
    const __m256i from_lo = _mm256_shuffle_epi8(lo, idx);
    const __m256i from_hi = _mm256_shuffle_epi8(hi, idx);
    idx = _mm256_blendv_epi8(from_lo, from_hi, _mm256_cmpgt_epi8(idx, fifteen));
  }
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), idx);
}

}  // namespace synchro::kernels::detail
