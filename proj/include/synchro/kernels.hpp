#pragma once

// Data-parallel inner loops of the subset searches and word runs.
//
// Each kernel has a scalar reference implementation plus vector variants
// (AVX2 on x86-64, NEON on AArch64). The active variant is chosen once at
// runtime from CPU features; SYNCHRO_ISA=scalar|avx2|neon overrides the
// choice. Every variant must produce bit-identical results to the scalar one.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "synchro/alphabet.hpp"

namespace synchro::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa) noexcept;

/// Number of lanes in a packed transformation; DFAs with at most this many
/// states can be run through apply_word_u8.
inline constexpr std::size_t transform_lanes = 32;

/// Byte-chunked image lookup for one letter of an automaton with at most 64
/// states: image(S) = OR over c of entries[c * 256 + ((S >> 8c) & 0xff)].
/// Works for DFAs and NFAs alike because images distribute over union.
struct ChunkTable {
  std::size_t chunks = 0;
  std::vector<std::uint64_t> entries;
};

struct KernelSet {
  Isa isa;
  /// out[i] = image of in[i] under the letter encoded by `table` (chunks * 256 entries).
  void (*image_batch)(const std::uint64_t* table, std::size_t chunks, const std::uint64_t* in, std::uint64_t* out,
                      std::size_t count);
  /// lanes[i] = tables[w * 32 + lanes[i]] for each letter w of the word, in order.
  /// Every lane value and table entry must be < 32.
  void (*apply_word_u8)(const std::uint8_t* tables, const Letter* word, std::size_t length, std::uint8_t* lanes);
};

const KernelSet& scalar_kernels() noexcept;
/// Variants compiled in and supported by this CPU, scalar first.
std::vector<Isa> available() noexcept;
/// nullptr when the variant is unavailable here.
const KernelSet* kernels_for(Isa isa) noexcept;
/// Variant used by the library.
const KernelSet& active() noexcept;
/// Pins the active variant. Returns false (and changes nothing) if unavailable.
bool force(Isa isa) noexcept;

}  // namespace synchro::kernels
