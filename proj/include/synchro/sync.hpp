#pragma once

#include <optional>
#include <vector>

#include "synchro/dfa.hpp"
#include "synchro/nfa.hpp"
#include "synchro/state_set.hpp"

namespace synchro {

inline constexpr std::size_t default_state_cap = 24;
/// Subset searches encode state sets as 64-bit masks; no override can exceed this.
inline constexpr std::size_t max_searchable_states = 64;

/// Bounds for the searches that walk the power automaton (2^n subsets).
struct SearchLimits {
  std::size_t state_cap = default_state_cap;
};

// Transition function extended to words and sets.

State apply(const Dfa& dfa, State q, const Word& w);
StateSet image(const Dfa& dfa, const StateSet& states, const Word& w);
/// Union of the ends of every run along w; dead runs contribute nothing.
StateSet image(const Nfa& nfa, const StateSet& states, const Word& w);

/// |delta(Q, w)| == 1.
bool is_reset_word(const Dfa& dfa, const Word& w);

/// Breadth-first search over the power automaton from Q to a singleton.
/// Letters are tried in index order, so the result is the lexicographically
/// least among the shortest reset words. Returns nullopt when the automaton is
/// not synchronizing; throws resource_limit when size() > limits.state_cap.
std::optional<Word> shortest_reset_word(const Dfa& dfa, SearchLimits limits = {});

/// Pair-merging test, polynomial in the number of states.
bool is_synchronizing(const Dfa& dfa);

/// Outcome of scanning for states fixed by every letter.
struct ZeroProbe {
  std::optional<State> zero;   ///< set iff exactly one such state exists
  std::size_t fixed_states = 0;

  /// Two or more all-loop states: the automaton cannot be synchronizing.
  bool ambiguous() const noexcept { return fixed_states > 1; }
};
ZeroProbe find_zero_state(const Dfa& dfa);

/// Strong synchronization into the absorbing zero: every run of w from every
/// state that survives ends in zero, i.e. delta(Q, w) is a subset of {zero}.
/// Throws unsupported_input when the automaton has no declared zero.
bool is_strong_sync_word(const Nfa& nfa, const Word& w);
/// Shortest (lexicographically least) strong synchronizing word into zero.
std::optional<Word> shortest_strong_sync_word(const Nfa& nfa, SearchLimits limits = {});

/// Per-letter evidence behind is_proper: restricted_synchronizing[a] tells
/// whether the automaton stripped of letter a is still synchronizing.
struct ProperReport {
  std::vector<bool> restricted_synchronizing;
  bool proper() const;
};
/// Throws precondition_error when the automaton is not synchronizing.
ProperReport proper_report(const Dfa& dfa);
bool is_proper(const Dfa& dfa);

/// Sub-automaton over the listed letters, in the listed order.
Dfa restrict_letters(const Dfa& dfa, const std::vector<Letter>& keep);

}  // namespace synchro
