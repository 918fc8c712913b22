#include <arm_neon.h>

#include "variants.hpp"

namespace synchro::kernels::detail {

void image_batch_neon(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                      std::size_t count) {
  // No 64-bit gather on NEON: the lookups stay scalar, the OR-reduction runs two lanes wide.
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    uint64x2_t acc = vdupq_n_u64(0);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::uint64_t* chunk = table + c * 256;
      const std::uint64_t pair[2] = {chunk[(in[i] >> (8 * c)) & 0xffU], chunk[(in[i + 1] >> (8 * c)) & 0xffU]};
      acc = vorrq_u64(acc, vld1q_u64(pair));
    }
    vst1q_u64(out + i, acc);
  }
  if (i < count) {
    image_batch_scalar(table, chunks, in + i, out + i, count - i);
  }
}

void apply_word_u8_neon(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes) {
  uint8x16_t lo_idx = vld1q_u8(lanes);
  uint8x16_t hi_idx = vld1q_u8(lanes + 16);
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::uint8_t* row = tables + static_cast<std::size_t>(word[pos]) * transform_lanes;
    const uint8x16x2_t tbl = {{vld1q_u8(row), vld1q_u8(row + 16)}};
    lo_idx = vqtbl2q_u8(tbl, lo_idx);
    hi_idx = vqtbl2q_u8(tbl, hi_idx);
  }
  vst1q_u8(lanes, lo_idx);
  vst1q_u8(lanes + 16, hi_idx);
}

}  // namespace synchro::kernels::detail
