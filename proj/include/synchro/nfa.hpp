#pragma once

#include <optional>
#include <span>
#include <vector>

#include "synchro/alphabet.hpp"

namespace synchro {

/// Nondeterministic automaton with transition function Q x A -> 2^Q.
/// Cells may be empty. Cells are kept sorted and duplicate-free.
class Nfa {
 public:
  using Cell = std::vector<State>;

  Nfa(Alphabet alphabet, std::size_t n_states, std::vector<Cell> cells, State initial,
      std::vector<State> terminals, std::optional<State> zero = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return n_states_; }
  std::size_t letters() const noexcept { return alphabet_.size(); }
  State initial() const noexcept { return initial_; }
  const std::vector<State>& terminals() const noexcept { return terminals_; }
  std::optional<State> zero() const noexcept { return zero_; }

  std::span<const State> next(State q, Letter a) const noexcept { return cells_[q * alphabet_.size() + a]; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Whether the initial-to-terminal language contains w.
  bool accepts(const Word& w) const;

  void check_state(State q) const;

 private:
  Alphabet alphabet_;
  std::size_t n_states_;
  std::vector<Cell> cells_;
  State initial_;
  std::vector<State> terminals_;
  std::optional<State> zero_;
};

}  // namespace synchro
