#pragma once

#include <vector>

#include "synchro/codeset.hpp"
#include "synchro/dfa.hpp"
#include "synchro/nfa.hpp"

namespace synchro {

/// Trie layout of the semi-flower automaton F(X).
///
/// nodes[0] is the hub (the empty prefix): initial, the only terminal, and the
/// state every cycle returns to. nodes[1..] are the nonempty proper prefixes of
/// members of X in lexicographic order, which is the depth-first order of the
/// trie. Reading a from node p leads to node(pa) when pa is a proper prefix of
/// a member and to the hub when pa is in X; both may hold at once.
struct FlowerBlueprint {
  Alphabet alphabet;
  std::vector<Word> nodes;
  std::vector<Nfa::Cell> cells;  ///< row-major, nodes.size() x |A|

  State node_of(const Word& prefix) const;  ///< throws invalid_input if absent
};

FlowerBlueprint flower_blueprint(const CodeSet& code);

/// F(X): recognizes X* with the hub as initial and only terminal state.
Nfa semi_flower(const CodeSet& code);

/// Appends a zero state, sends every empty cell to it and loops it on every
/// letter. Nonempty cells are untouched. Throws invalid_input if a zero exists.
Nfa complete_with_zero(const Nfa& nfa);

/// complete_with_zero(semi_flower(X)). The zero is the last state.
Nfa fhat(const CodeSet& code);

/// The 2k-state deterministic automaton with zero for u = a_1 ... a_k:
/// states 1..k follow u, k+1..2k-1 form the deviation chain back to 1, and 0
/// is the zero. Requires u unbordered, k >= 2 and at least two letters.
Dfa build_fhat_k_u(const Alphabet& alphabet, const Word& u);

/// n states over n-1 letters a1, ..., a{n-1} (letter index i-1 is a_i):
/// a_1 takes 1 to the zero 0, a_{i+1} swaps i and i+1, every other letter
/// loops. Its shortest reset word has length n(n-1)/2. Requires n >= 3.
Dfa build_chain_zero(std::size_t n);

}  // namespace synchro
