#include "synchro/words.hpp"

#include <algorithm>

#include "synchro/error.hpp"

namespace synchro {

std::size_t Decomposition::m() const {
  if (occurrences() == 0) {
    throw precondition_error("decomposition has no occurrence of u");
  }
  return occurrences() - 1;
}

Word Decomposition::reassemble() const {
  Word w;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      w.insert(w.end(), u.begin(), u.end());
    }
    w.insert(w.end(), parts[i].begin(), parts[i].end());
  }
  return w;
}

Word slice(const Word& w, std::size_t begin, std::size_t end) {
  if (begin > end || end > w.size()) {
    throw invalid_input("slice [" + std::to_string(begin) + ", " + std::to_string(end) + ") outside word of length " +
                        std::to_string(w.size()));
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin), w.begin() + static_cast<std::ptrdiff_t>(end));
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
  if (i > j) {
    // Empty factor; only the adjacent form u[i...i-1] is accepted.
    if (i != j + 1 || j > w.size()) {
      throw invalid_input("factor [" + std::to_string(i) + "..." + std::to_string(j) + "] out of range");
    }
    return {};
  }
  if (i < 1 || j > w.size()) {
    throw invalid_input("factor [" + std::to_string(i) + "..." + std::to_string(j) + "] outside word of length " +
                        std::to_string(w.size()));
  }
  return slice(w, i - 1, j);
}

Word longest_border(const Word& u) {
  if (u.empty()) {
    throw invalid_input("borders are defined for nonempty words");
  }
  // Failure function of u; its last value is the longest border length.
  std::vector<std::size_t> fail(u.size(), 0);
  for (std::size_t i = 1, k = 0; i < u.size(); ++i) {
    while (k > 0 && u[i] != u[k]) {
      k = fail[k - 1];
    }
    if (u[i] == u[k]) {
      ++k;
    }
    fail[i] = k;
  }
  return slice(u, 0, fail.back());
}

bool is_unbordered(const Word& u) { return longest_border(u).empty(); }

std::vector<std::size_t> find_occurrences(const Word& u, const Word& w) {
  if (u.empty()) {
    throw invalid_input("cannot search for the empty word");
  }
  std::vector<std::size_t> out;
  if (u.size() > w.size()) {
    return out;
  }
  for (std::size_t pos = 0; pos + u.size() <= w.size(); ++pos) {
    if (std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
      out.push_back(pos);
    }
  }
  return out;
}

Decomposition decompose_by(const Word& w, const Word& u) {
  if (const Word border = longest_border(u); !border.empty()) {
    throw precondition_error("decomposition needs an unbordered word; u has a border of length " +
                             std::to_string(border.size()));
  }
  Decomposition d{u, {}};
  std::size_t cursor = 0;
  for (std::size_t pos : find_occurrences(u, w)) {
    d.parts.push_back(slice(w, cursor, pos));
    cursor = pos + u.size();
  }
  d.parts.push_back(slice(w, cursor, w.size()));
  return d;
}

Word canonical_unbordered_with_all_letters(const Alphabet& alphabet, std::size_t k) {
  const std::size_t m = alphabet.size();
  if (k < m) {
    throw invalid_input("length " + std::to_string(k) + " cannot contain all " + std::to_string(m) + " letters");
  }
  if (m == 1 && k > 1) {
    throw invalid_input("no unbordered word of length " + std::to_string(k) + " over a one-letter alphabet");
  }
  Word u(k - m + 1, 0);
  for (Letter a = 1; a < m; ++a) {
    u.push_back(a);
  }
  if (!is_unbordered(u)) {
    throw internal_error("canonical word " + alphabet.format(u) + " is bordered");
  }
  return u;
}

}  // namespace synchro
