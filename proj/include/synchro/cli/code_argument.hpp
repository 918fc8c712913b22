#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synchro/alphabet.hpp"
#include "synchro/codeset.hpp"

namespace synchro::cli {

/// `--alphabet` value: "ab" is one letter per character, "a1 a2" or "a1,a2"
/// are separated symbols.
Alphabet parse_alphabet(std::string_view text);

/// The given alphabet, or else the sorted set of characters in `texts`.
Alphabet alphabet_for(const std::optional<std::string>& given, const std::vector<std::string>& texts);

/// `--code` value. One of
///   - a path to a code-set file (anything containing '/' or '.', or an existing file),
///   - "A^k minus u" (also "A^k \ u"), with k = |u|,
///   - a comma- or space-separated list of words.
/// Without `alphabet` the letters are inferred from the text.
CodeSet parse_code_argument(std::string_view arg, const std::optional<std::string>& alphabet);

/// Comma- or space-separated words, kept as text.
std::vector<std::string> parse_word_list(std::string_view text);

/// "2..6", "2,3", "4" or mixtures such as "2..4,7"; ascending order is kept as written.
std::vector<std::size_t> parse_number_list(std::string_view text);

}  // namespace synchro::cli
