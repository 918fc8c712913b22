#include "synchro/cli/code_argument.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <regex>
#include <set>

#include "synchro/cli/document.hpp"
#include "synchro/error.hpp"

namespace synchro::cli {
namespace {

std::vector<std::string> split(std::string_view text, std::string_view separators) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (separators.find(c) != std::string_view::npos) {
      if (!current.empty()) {
        parts.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    parts.push_back(std::move(current));
  }
  return parts;
}

std::size_t to_number(std::string_view text) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw invalid_input("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Alphabet parse_alphabet(std::string_view text) {
  if (text.find_first_of(" ,\t") != std::string_view::npos) {
    return Alphabet(split(text, " ,\t"));
  }
  return Alphabet::from_chars(text);
}

Alphabet alphabet_for(const std::optional<std::string>& given, const std::vector<std::string>& texts) {
  if (given) {
    return parse_alphabet(*given);
  }
  std::set<char> chars;
  for (const auto& t : texts) {
    for (char c : t) {
      if (c != ' ' && c != '\t' && c != ',') {
        chars.insert(c);
      }
    }
  }
  if (chars.empty()) {
    throw invalid_input("cannot infer an alphabet; pass --alphabet");
  }
  return Alphabet::from_chars(std::string(chars.begin(), chars.end()));
}

CodeSet parse_code_argument(std::string_view arg, const std::optional<std::string>& alphabet) {
  std::optional<Alphabet> given;
  if (alphabet) {
    given = parse_alphabet(*alphabet);
  }
  std::string text(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec) || text.find_first_of("/.") != std::string::npos) {
    return CodeSet::parse(read_text(text), given);
  }
  static const std::regex all_but(R"(^\s*A\s*\^\s*(\d+)\s*(?:minus|\\)\s*(\S+)\s*$)");
  std::smatch match;
  if (std::regex_match(text, match, all_but)) {
    std::size_t k = to_number(match[1].str());
    std::string u_text = match[2].str();
    Alphabet a = given ? *given : alphabet_for(std::nullopt, {u_text});
    Word u = a.parse(u_text);
    if (u.size() != k) {
      throw invalid_input("A^" + std::to_string(k) + " minus u needs |u| = " + std::to_string(k) + ", got " +
                          std::to_string(u.size()));
    }
    return CodeSet::all_but(a, u);
  }
  auto words = split(text, ", \t");
  Alphabet a = given ? *given : alphabet_for(std::nullopt, words);
  std::vector<Word> parsed;
  for (const auto& w : words) {
    parsed.push_back(a.parse(w));
  }
  return CodeSet(a, std::move(parsed));
}

std::vector<std::string> parse_word_list(std::string_view text) {
  auto words = split(text, ", \t");
  if (words.empty()) {
    throw invalid_input("empty word list");
  }
  return words;
}

std::vector<std::size_t> parse_number_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ", ")) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_number(item));
      continue;
    }
    std::size_t lo = to_number(std::string_view(item).substr(0, dots));
    std::size_t hi = to_number(std::string_view(item).substr(dots + 2));
    if (lo > hi) {
      throw invalid_input("empty range '" + item + "'");
    }
    for (std::size_t v = lo; v <= hi; ++v) {
      out.push_back(v);
    }
  }
  if (out.empty()) {
    throw invalid_input("empty number list");
  }
  return out;
}

}  // namespace synchro::cli
