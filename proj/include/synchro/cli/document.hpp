#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synchro/dfa.hpp"
#include "synchro/nfa.hpp"

namespace synchro::cli {

enum class AutomatonKind { dfa, nfa };

/// JSON interchange form of an automaton:
///
///   {"kind": "dfa" | "nfa", "alphabet": [...], "states": n,
///    "initial": id?, "finals": [id, ...]?, "zero": id?,
///    "transitions": [[cell, ...], ...]}
///
/// A dfa cell is a state id, an nfa cell a (possibly empty) list of ids.
/// Keys are written in the order above.
struct AutomatonDocument {
  AutomatonKind kind = AutomatonKind::dfa;
  std::vector<std::string> alphabet;
  std::size_t states = 0;
  std::optional<State> initial;
  std::optional<std::vector<State>> finals;
  std::optional<State> zero;
  std::vector<std::vector<std::vector<State>>> transitions;  ///< [state][letter] -> targets
};

using Automaton = std::variant<Dfa, Nfa>;

AutomatonDocument to_document(const Dfa& dfa);
AutomatonDocument to_document(const Nfa& nfa);
AutomatonDocument to_document(const Automaton& automaton);

/// Validates shape, ids and the zero's absorbing property; throws invalid_input.
Automaton to_automaton(const AutomatonDocument& doc);

std::string write_json(const AutomatonDocument& doc);
/// Throws invalid_input on malformed JSON or a document that does not validate.
AutomatonDocument read_json(std::string_view text);

Automaton load_automaton(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace synchro::cli
