#include <algorithm>

#include "synchro/dfa.hpp"
#include "synchro/error.hpp"
#include "synchro/nfa.hpp"
#include "synchro/state_set.hpp"

namespace synchro {

Dfa::Dfa(Alphabet alphabet, std::size_t n_states, std::vector<State> table, std::optional<State> zero)
    : alphabet_(std::move(alphabet)), n_states_(n_states), table_(std::move(table)), zero_(zero) {
  if (n_states_ == 0) {
    throw invalid_input("automaton needs at least one state");
  }
  if (table_.size() != n_states_ * alphabet_.size()) {
    throw invalid_input("transition table has " + std::to_string(table_.size()) + " cells, expected " +
                        std::to_string(n_states_ * alphabet_.size()));
  }
  for (State t : table_) {
    check_state(t);
  }
  if (zero_) {
    check_state(*zero_);
    for (Letter a = 0; a < alphabet_.size(); ++a) {
      if (next(*zero_, a) != *zero_) {
        throw invalid_input("declared zero " + std::to_string(*zero_) + " is not fixed by letter '" +
                            alphabet_.symbol(a) + "'");
      }
    }
  }
}

void Dfa::check_state(State q) const {
  if (q >= n_states_) {
    throw invalid_input("state " + std::to_string(q) + " out of range [0, " + std::to_string(n_states_) + ")");
  }
}

Nfa::Nfa(Alphabet alphabet, std::size_t n_states, std::vector<Cell> cells, State initial,
         std::vector<State> terminals, std::optional<State> zero)
    : alphabet_(std::move(alphabet)),
      n_states_(n_states),
      cells_(std::move(cells)),
      initial_(initial),
      terminals_(std::move(terminals)),
      zero_(zero) {
  if (n_states_ == 0) {
    throw invalid_input("automaton needs at least one state");
  }
  if (cells_.size() != n_states_ * alphabet_.size()) {
    throw invalid_input("transition table has " + std::to_string(cells_.size()) + " cells, expected " +
                        std::to_string(n_states_ * alphabet_.size()));
  }
  for (auto& cell : cells_) {
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    for (State t : cell) {
      check_state(t);
    }
  }
  check_state(initial_);
  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
  for (State t : terminals_) {
    check_state(t);
  }
  if (zero_) {
    check_state(*zero_);
    for (Letter a = 0; a < alphabet_.size(); ++a) {
      auto cell = next(*zero_, a);
      if (cell.size() != 1 || cell[0] != *zero_) {
        throw invalid_input("declared zero " + std::to_string(*zero_) + " is not absorbing on letter '" +
                            alphabet_.symbol(a) + "'");
      }
    }
  }
}

void Nfa::check_state(State q) const {
  if (q >= n_states_) {
    throw invalid_input("state " + std::to_string(q) + " out of range [0, " + std::to_string(n_states_) + ")");
  }
}

bool Nfa::accepts(const Word& w) const {
  alphabet_.check_word(w);
  StateSet current(n_states_);
  current.insert(initial_);
  for (Letter a : w) {
    StateSet next_set(n_states_);
    current.for_each([&](State q) {
      for (State t : next(q, a)) {
        next_set.insert(t);
      }
    });
    current = std::move(next_set);
  }
  return std::any_of(terminals_.begin(), terminals_.end(), [&](State t) { return current.contains(t); });
}

}  // namespace synchro
