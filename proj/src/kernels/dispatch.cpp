#include <atomic>
#include <cstdlib>
#include <string>

#include "variants.hpp"

namespace synchro::kernels {
namespace {

constexpr KernelSet scalar_set{Isa::scalar, detail::image_batch_scalar, detail::apply_word_u8_scalar};
#if defined(SYNCHRO_HAVE_AVX2)
constexpr KernelSet avx2_set{Isa::avx2, detail::image_batch_avx2, detail::apply_word_u8_avx2};
#endif
#if defined(SYNCHRO_HAVE_NEON)
constexpr KernelSet neon_set{Isa::neon, detail::image_batch_neon, detail::apply_word_u8_neon};
#endif

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SYNCHRO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::neon:
#if defined(SYNCHRO_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelSet* pick_default() noexcept {
  if (const char* env = std::getenv("SYNCHRO_ISA")) {
    const std::string wanted(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (wanted == name(isa)) {
        if (const KernelSet* set = kernels_for(isa)) {
          return set;
        }
      }
    }
  }
  const auto isas = available();
  return kernels_for(isas.back());
}

std::atomic<const KernelSet*>& active_slot() noexcept {
  static std::atomic<const KernelSet*> slot{pick_default()};
  return slot;
}

}  // namespace

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelSet& scalar_kernels() noexcept { return scalar_set; }

const KernelSet* kernels_for(Isa isa) noexcept {
  if (!cpu_supports(isa)) {
    return nullptr;
  }
  switch (isa) {
    case Isa::scalar:
      return &scalar_set;
#if defined(SYNCHRO_HAVE_AVX2)
    case Isa::avx2:
      return &avx2_set;
#endif
#if defined(SYNCHRO_HAVE_NEON)
    case Isa::neon:
      return &neon_set;
#endif
    default:
      return nullptr;
  }
}

std::vector<Isa> available() noexcept {
  std::vector<Isa> out{Isa::scalar};
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (cpu_supports(isa)) {
      out.push_back(isa);
    }
  }
  return out;
}

const KernelSet& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

bool force(Isa isa) noexcept {
  const KernelSet* set = kernels_for(isa);
  if (set == nullptr) {
    return false;
  }
  active_slot().store(set, std::memory_order_release);
  return true;
}

}  // namespace synchro::kernels
