#include "synchro/codeset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "synchro/error.hpp"

namespace synchro {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

CodeSet::CodeSet(Alphabet alphabet, std::vector<Word> words) : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (words_.empty()) {
    throw invalid_input("code set must contain at least one word");
  }
  for (const auto& w : words_) {
    if (w.empty()) {
      throw invalid_input("code set must not contain the empty word");
    }
    alphabet_.check_word(w);
    max_length_ = std::max(max_length_, w.size());
  }
  std::sort(words_.begin(), words_.end());
  if (auto dup = std::adjacent_find(words_.begin(), words_.end()); dup != words_.end()) {
    throw invalid_input("duplicate word '" + alphabet_.format(*dup) + "' in code set");
  }
}

CodeSet CodeSet::all_but(const Alphabet& alphabet, const Word& u) {
  if (u.empty()) {
    throw invalid_input("excluded word must be nonempty");
  }
  alphabet.check_word(u);
  const std::size_t k = u.size();
  const std::size_t m = alphabet.size();
  std::vector<Word> words;
  Word w(k, 0);
  while (true) {
    if (w != u) {
      words.push_back(w);
    }
    // Odometer increment, last position fastest.
    std::size_t pos = k;
    while (pos > 0 && w[pos - 1] + 1 == m) {
      w[--pos] = 0;
    }
    if (pos == 0) {
      break;
    }
    ++w[pos - 1];
  }
  return CodeSet(alphabet, std::move(words));
}

CodeSet CodeSet::parse(std::string_view text, const std::optional<Alphabet>& fallback) {
  std::optional<Alphabet> declared;
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    constexpr std::string_view header = "alphabet:";
    if (line.substr(0, header.size()) == header) {
      if (declared || !lines.empty()) {
        throw invalid_input("alphabet header must come once, before any word");
      }
      std::istringstream symbols{std::string(line.substr(header.size()))};
      std::vector<std::string> names;
      for (std::string s; symbols >> s;) {
        names.push_back(s);
      }
      declared.emplace(std::move(names));
      continue;
    }
    lines.emplace_back(line);
  }
  if (!declared) {
    if (fallback) {
      declared = fallback;
    } else {
      std::string chars;
      for (const auto& line : lines) {
        for (char ch : line) {
          if (std::isspace(static_cast<unsigned char>(ch)) == 0 && chars.find(ch) == std::string::npos) {
            chars += ch;
          }
        }
      }
      std::sort(chars.begin(), chars.end());
      declared = Alphabet::from_chars(chars);
    }
  }
  std::vector<Word> words;
  words.reserve(lines.size());
  for (const auto& line : lines) {
    words.push_back(declared->parse(line));
  }
  return CodeSet(*declared, std::move(words));
}

std::string CodeSet::to_text() const {
  std::string out = "alphabet:";
  for (const auto& s : alphabet_.symbols()) {
    out += " " + s;
  }
  out += "\n";
  for (const auto& w : words_) {
    out += alphabet_.format(w) + "\n";
  }
  return out;
}

bool CodeSet::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

Word restivo_word(const Word& u, Letter pad, std::size_t k) {
  if (k < 1 || u.size() != k) {
    throw invalid_input("restivo word needs |u| = k >= 1, got |u| = " + std::to_string(u.size()) +
                        ", k = " + std::to_string(k));
  }
  Word w;
  w.reserve(k * k + k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    w.insert(w.end(), u.begin(), u.end());
    w.push_back(pad);
  }
  w.insert(w.end(), u.begin(), u.end());
  return w;
}

bool check_restivo_precondition(const Word& u, const CodeSet& code) {
  if (u.size() != code.max_length()) {
    throw invalid_input("u must have the maximal length " + std::to_string(code.max_length()) + " of the code set");
  }
  code.alphabet().check_word(u);
  return std::none_of(code.words().begin(), code.words().end(),
                      [&](const Word& x) { return !find_occurrences(x, u).empty(); });
}

bool is_k_representative(std::span<const std::size_t> values, std::size_t k) {
  if (k < 1) {
    throw invalid_input("modulus must be at least 1");
  }
  std::vector<bool> seen(k, false);
  for (std::size_t s : values) {
    seen[s % k] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

}  // namespace synchro
