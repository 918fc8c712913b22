#pragma once

#include <optional>
#include <span>
#include <vector>

#include "synchro/alphabet.hpp"

namespace synchro {

/// Total deterministic automaton <Q, A, delta> with an optional designated zero.
///
/// The transition table is stored row-major: next(q, a) = table[q * |A| + a].
/// A declared zero must be fixed by every letter; the constructor rejects it otherwise.
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t n_states, std::vector<State> table, std::optional<State> zero = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return n_states_; }
  std::size_t letters() const noexcept { return alphabet_.size(); }
  std::optional<State> zero() const noexcept { return zero_; }

  State next(State q, Letter a) const noexcept { return table_[q * alphabet_.size() + a]; }
  std::span<const State> row(State q) const noexcept {
    return {table_.data() + q * alphabet_.size(), alphabet_.size()};
  }
  const std::vector<State>& table() const noexcept { return table_; }

  void check_state(State q) const;

 private:
  Alphabet alphabet_;
  std::size_t n_states_;
  std::vector<State> table_;
  std::optional<State> zero_;
};

}  // namespace synchro
