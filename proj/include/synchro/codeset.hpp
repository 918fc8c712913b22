#pragma once

#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "synchro/alphabet.hpp"
#include "synchro/nfa.hpp"
#include "synchro/sync.hpp"
#include "synchro/words.hpp"

namespace synchro {

/// Finite set X of nonempty words over an alphabet, kept in lexicographic order.
class CodeSet {
 public:
  /// Throws invalid_input on an empty set, an empty member, a duplicate, or a
  /// letter outside the alphabet.
  CodeSet(Alphabet alphabet, std::vector<Word> words);

  /// A^k minus {u}, k = |u|.
  static CodeSet all_but(const Alphabet& alphabet, const Word& u);

  /// Text format: one word per line, '#' starts a comment, blank lines are
  /// skipped. An optional `alphabet: a b c` header line fixes the alphabet;
  /// otherwise `fallback` is used, and failing that the alphabet is the sorted
  /// set of characters that occur in the words.
  static CodeSet parse(std::string_view text, const std::optional<Alphabet>& fallback = std::nullopt);
  std::string to_text() const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t max_length() const noexcept { return max_length_; }
  bool contains(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
  std::size_t max_length_ = 0;
};

/// Completability oracle: w is a factor of some word of X* iff some run of
/// the semi-flower automaton F(X) reads w, i.e. delta(Q, w) is nonempty.
/// Holds F(X) so repeated queries do not rebuild it.
class CompletionChecker {
 public:
  explicit CompletionChecker(const CodeSet& code);

  bool completable(const Word& w) const;
  const Nfa& automaton() const noexcept { return flower_; }

 private:
  Nfa flower_;
};

bool is_completable(const Word& w, const CodeSet& code);

/// No word kills every run of F(X). Throws resource_limit past the cap on F(X)'s states.
bool is_complete_set(const CodeSet& code, SearchLimits limits = {});

/// Lexicographically least shortest incompletable word; nullopt iff X is complete.
std::optional<Word> shortest_incompletable_word(const CodeSet& code, SearchLimits limits = {});

/// (u pad)^{k-1} u, of length k^2 + k - 1. Throws invalid_input unless |u| = k >= 1.
Word restivo_word(const Word& u, Letter pad, std::size_t k);

/// No member of X is a factor of u. Throws invalid_input unless |u| = max length of X.
bool check_restivo_precondition(const Word& u, const CodeSet& code);

/// Residues of s mod k cover 1, ..., k-1. Throws invalid_input for k < 1.
bool is_k_representative(std::span<const std::size_t> values, std::size_t k);

/// Forbidden positions S_1, ..., S_{m+1} inside the occurrences of u, for X = A^k minus {u}.
struct ForbiddenSets {
  std::size_t k = 0;
  std::vector<std::set<std::size_t>> sets;  ///< sets[j - 1] is S_j

  const std::set<std::size_t>& at(std::size_t j) const { return sets.at(j - 1); }
  /// S_1 = {0, ..., k-1}.
  bool first_full() const;
  friend bool operator==(const ForbiddenSets&, const ForbiddenSets&) = default;
};

/// Backward recurrence: S_{m+1} = {0}, S_{j-1} = {0} u {(|v_{j-1}| + l) mod k : l in S_j}.
/// Requires u unbordered with |u| = k >= 2 and parts.u == u with at least two occurrences.
ForbiddenSets forbidden_sets_recurrence(const Word& u, std::size_t k, const Decomposition& parts);
/// Closed form: S_j = {0} u {(|v_j| + ... + |v_{j+t}|) mod k : 0 <= t <= m - j}.
ForbiddenSets forbidden_sets_closed_form(const Word& u, std::size_t k, const Decomposition& parts);

/// {|v_1|, |v_1| + |v_2|, ..., |v_1| + ... + |v_m|}, in order.
std::vector<std::size_t> inner_partial_sums(const Decomposition& parts);

/// Everything the incompletability criterion looked at, for reporting.
struct CriterionTrace {
  Decomposition decomposition;
  std::vector<std::size_t> partial_sums;
  std::optional<ForbiddenSets> forbidden;  ///< present when u occurs at least twice
  bool incompletable = false;
};

/// Incompletability of w in X = A^k minus {u}, decided combinatorially: u must
/// occur at least twice and the partial sums of the inner gaps must be
/// k-representative. Throws precondition_error when u is bordered, |u| < 2, or
/// the alphabet has a single letter.
bool is_incompletable_xku(const Alphabet& alphabet, const Word& w, const Word& u);
CriterionTrace incompletability_trace(const Alphabet& alphabet, const Word& w, const Word& u);

}  // namespace synchro
