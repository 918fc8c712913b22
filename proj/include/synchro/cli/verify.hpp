#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchro/alphabet.hpp"
#include "synchro/sync.hpp"

namespace synchro::cli {

enum class PointStatus { pass, fail, skipped };

struct GridPoint {
  std::vector<std::pair<std::string, std::string>> params;  ///< printed in this order
  std::optional<std::size_t> expected;
  std::optional<std::size_t> measured;
  std::string witness;  ///< display symbols; empty when there is none
  PointStatus status = PointStatus::skipped;
  std::string note;     ///< reason for a skip, or extra detail
};

/// One harness run: every grid point compares a measured quantity with the
/// value the formula predicts. pass iff expected == measured.
struct VerificationReport {
  std::string family;
  std::string quantity;  ///< what expected/measured count
  std::vector<GridPoint> points;

  std::size_t count(PointStatus status) const;
  /// 1 on any failure, else 2 on any skipped point, else 0.
  int exit_code() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// F-hat(k, u) for every k and alphabet size; u is the canonical unbordered
/// word of length k (all letters when k >= |A|, else a^{k-1} b).
VerificationReport verify_theorem2(const std::vector<std::size_t>& ks, const std::vector<std::size_t>& alphabet_sizes,
                                   SearchLimits limits);

struct Prop2Case {
  std::size_t alphabet_size;
  std::string u;
};
/// Shortest incompletable word of A^k minus {u}, k = |u|.
VerificationReport verify_prop2(const std::vector<Prop2Case>& cases, SearchLimits limits);

/// Chain automaton with zero over n - 1 letters.
VerificationReport verify_fig1(const std::vector<std::size_t>& ns, SearchLimits limits);

/// For every word of length <= max_len over the alphabet: the criterion, the
/// flower automaton of A^k minus {u} and the reset test on F-hat(k, u) agree.
/// expected is the number of words, measured the number where all three agree.
VerificationReport verify_equivalence(const Alphabet& alphabet, const std::vector<std::string>& us,
                                      std::size_t max_len);

/// Canonical unbordered word of length k over the first m letters.
Word canonical_u(const Alphabet& alphabet, std::size_t k);

}  // namespace synchro::cli
