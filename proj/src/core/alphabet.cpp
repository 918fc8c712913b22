#include "synchro/alphabet.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "synchro/error.hpp"

namespace synchro {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw invalid_input("alphabet must contain at least one letter");
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) {
      throw invalid_input("alphabet symbols must be nonempty");
    }
    for (unsigned char ch : s) {
      if (std::isspace(ch) != 0) {
        throw invalid_input("alphabet symbol '" + s + "' contains whitespace");
      }
    }
    if (!seen.insert(s).second) {
      throw invalid_input("duplicate alphabet symbol '" + s + "'");
    }
    single_char_ = single_char_ && s.size() == 1;
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<std::string> symbols;
  for (char ch : chars) {
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) {
      symbols.emplace_back(1, ch);
    }
  }
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::first_letters(std::size_t m) {
  if (m == 0 || m > 26) {
    throw invalid_input("first_letters supports 1..26 letters, got " + std::to_string(m));
  }
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < m; ++i) {
    symbols.emplace_back(1, static_cast<char>('a' + i));
  }
  return Alphabet(std::move(symbols));
}

const std::string& Alphabet::symbol(Letter a) const {
  if (!contains(a)) {
    throw invalid_input("letter index " + std::to_string(a) + " outside alphabet of size " +
                        std::to_string(size()));
  }
  return symbols_[a];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  auto push = [&](std::string_view token) {
    auto a = find(token);
    if (!a) {
      throw invalid_input("unknown symbol '" + std::string(token) + "'");
    }
    w.push_back(*a);
  };
  if (single_char_) {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch)) == 0) {
        push(std::string_view(&ch, 1));
      }
    }
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    push(token);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) {
      out += ' ';
    }
    out += symbol(w[i]);
  }
  return out;
}

void Alphabet::check_word(const Word& w) const {
  for (Letter a : w) {
    if (!contains(a)) {
      throw invalid_input("letter index " + std::to_string(a) + " outside alphabet of size " +
                          std::to_string(size()));
    }
  }
}

}  // namespace synchro
