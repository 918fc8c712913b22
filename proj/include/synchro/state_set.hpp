#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "synchro/alphabet.hpp"

namespace synchro {

/// Subset of the states {0, ..., universe-1} of a fixed automaton.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), blocks_((universe + 63) / 64, 0) {}

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<State> states);
  /// Requires universe <= 64.
  static StateSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(State q) const noexcept { return q < universe_ && (blocks_[q / 64] >> (q % 64) & 1U) != 0; }
  void insert(State q);
  void erase(State q);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<State> to_vector() const;
  /// Requires universe <= 64.
  std::uint64_t mask() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::uint64_t bits = blocks_[b]; bits != 0; bits &= bits - 1) {
        f(static_cast<State>(b * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  StateSet& operator|=(const StateSet& other);
  friend StateSet operator|(StateSet lhs, const StateSet& rhs) { return lhs |= rhs; }
  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace synchro
