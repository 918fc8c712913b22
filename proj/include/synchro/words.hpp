#pragma once

#include <optional>
#include <vector>

#include "synchro/alphabet.hpp"

namespace synchro {

/// w = v_0 u v_1 u ... u v_{c-1} u v_c at the c non-overlapping occurrences of
/// an unbordered u. `parts` always holds c + 1 words, none containing u.
struct Decomposition {
  Word u;
  std::vector<Word> parts;

  std::size_t occurrences() const noexcept { return parts.empty() ? 0 : parts.size() - 1; }
  /// Index of the last inner part v_m: occurrences() - 1. Requires at least one occurrence.
  std::size_t m() const;
  Word reassemble() const;
};

/// w[begin, end), zero-based half-open. Throws invalid_input if end > |w| or begin > end.
Word slice(const Word& w, std::size_t begin, std::size_t end);

/// The 1-based inclusive factor a_i ... a_j. Empty when i > j (i <= j + 1
/// required); factor(w, 1, 0) is the empty prefix u[0]. Otherwise both indices
/// must lie in [1, |w|].
Word factor(const Word& w, std::size_t i, std::size_t j);

/// Longest proper nonempty prefix that is also a suffix; empty if none.
/// Throws invalid_input on the empty word.
Word longest_border(const Word& u);
bool is_unbordered(const Word& u);

/// Zero-based start positions of u in w, ascending, overlaps included.
/// Naive O(|w| |u|) scan. Throws invalid_input on empty u.
std::vector<std::size_t> find_occurrences(const Word& u, const Word& w);

/// Splits w at every occurrence of u. Throws precondition_error if u is bordered
/// (occurrences of a bordered word may overlap and the split is not unique).
Decomposition decompose_by(const Word& w, const Word& u);

/// a_0^{k-m+1} a_1 ... a_{m-1}: unbordered, length k, contains every letter.
/// Throws invalid_input if k < |alphabet|.
Word canonical_unbordered_with_all_letters(const Alphabet& alphabet, std::size_t k);

}  // namespace synchro
