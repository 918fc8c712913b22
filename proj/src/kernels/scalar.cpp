#include "variants.hpp"

namespace synchro::kernels::detail {

void image_batch_scalar(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                        std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t acc = 0;
    const std::uint64_t mask = in[i];
    for (std::size_t c = 0; c < chunks; ++c) {
      acc |= table[c * 256 + ((mask >> (8 * c)) & 0xffU)];
    }
    out[i] = acc;
  }
}

void apply_word_u8_scalar(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes) {
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::uint8_t* row = tables + static_cast<std::size_t>(word[pos]) * transform_lanes;
    for (std::size_t i = 0; i < transform_lanes; ++i) {
      lanes[i] = row[lanes[i]];
    }
  }
}

}  // namespace synchro::kernels::detail
