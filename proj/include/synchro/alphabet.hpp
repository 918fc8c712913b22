#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synchro {

using Letter = std::uint32_t;
using State = std::uint32_t;

/// A word is a sequence of letter indices; the empty vector is the empty word.
using Word = std::vector<Letter>;

/// Ordered finite set of display symbols. Letter i is symbols()[i].
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  /// One letter per character, in the given order: from_chars("ab") = {a, b}.
  static Alphabet from_chars(std::string_view chars);
  /// The first m lowercase latin letters.
  static Alphabet first_letters(std::size_t m);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(Letter a) const;
  std::optional<Letter> find(std::string_view symbol) const;
  bool contains(Letter a) const noexcept { return a < symbols_.size(); }

  /// True when every symbol is exactly one byte; words then print without separators.
  bool single_char() const noexcept { return single_char_; }

  /// Parses a word. Single-character alphabets read one symbol per non-space
  /// character; otherwise symbols are whitespace-separated tokens.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  /// Throws invalid_input if some letter of w is not in this alphabet.
  void check_word(const Word& w) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) { return lhs.symbols_ == rhs.symbols_; }

 private:
  std::vector<std::string> symbols_;
  bool single_char_ = true;
};

}  // namespace synchro
