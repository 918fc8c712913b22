#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "synchro/dfa.hpp"
#include "synchro/kernels.hpp"
#include "synchro/nfa.hpp"
#include "synchro/sync.hpp"

namespace synchro::detail {

/// Power automaton of an automaton with at most 64 states, in mask form.
class SubsetSystem {
 public:
  explicit SubsetSystem(const Dfa& dfa);
  explicit SubsetSystem(const Nfa& nfa);

  std::size_t states() const noexcept { return n_; }
  std::size_t letters() const noexcept { return tables_.size(); }
  std::uint64_t all() const noexcept { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  /// Images of every mask in `in` under letter a, via the active kernel.
  void image(Letter a, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const;
  std::uint64_t image(std::uint64_t mask, Letter a) const;

 private:
  void build(const std::vector<std::uint64_t>& single_images, std::size_t letters);

  std::size_t n_ = 0;
  std::vector<kernels::ChunkTable> tables_;
};

struct Target {
  enum class Kind { singleton, exact };
  Kind kind;
  std::uint64_t mask = 0;

  bool matches(std::uint64_t s) const noexcept {
    return kind == Kind::singleton ? std::has_single_bit(s) : s == mask;
  }
};

/// Lexicographically least shortest word over `letters` (ascending) taking
/// `start` to a set matching `target`; nullopt if no such set is reachable.
std::optional<Word> shortest_word(const SubsetSystem& system, std::uint64_t start, Target target,
                                  std::span<const Letter> letters);

/// Throws resource_limit when an n-state automaton may not be searched.
void check_cap(std::size_t n, const SearchLimits& limits);

std::vector<Letter> all_letters(std::size_t m);

}  // namespace synchro::detail
