#pragma once

#include "synchro/kernels.hpp"

namespace synchro::kernels::detail {

void image_batch_scalar(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                        std::size_t count);
void apply_word_u8_scalar(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes);

#if defined(SYNCHRO_HAVE_AVX2)
void image_batch_avx2(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                      std::size_t count);
void apply_word_u8_avx2(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes);
#endif

#if defined(SYNCHRO_HAVE_NEON)
void image_batch_neon(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                      std::size_t count);
void apply_word_u8_neon(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes);
#endif

}  // namespace synchro::kernels::detail
