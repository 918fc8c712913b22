#include "synchro/cli/document.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "synchro/error.hpp"

namespace synchro::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

State as_state(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    throw invalid_input(std::string(what) + " must be a non-negative integer");
  }
  return j.get<State>();
}

}  // namespace

AutomatonDocument to_document(const Dfa& dfa) {
  AutomatonDocument doc;
  doc.kind = AutomatonKind::dfa;
  doc.alphabet = dfa.alphabet().symbols();
  doc.states = dfa.size();
  doc.zero = dfa.zero();
  doc.transitions.resize(dfa.size());
  for (State q = 0; q < dfa.size(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      doc.transitions[q].push_back({dfa.next(q, a)});
    }
  }
  return doc;
}

AutomatonDocument to_document(const Nfa& nfa) {
  AutomatonDocument doc;
  doc.kind = AutomatonKind::nfa;
  doc.alphabet = nfa.alphabet().symbols();
  doc.states = nfa.size();
  doc.initial = nfa.initial();
  doc.finals = nfa.terminals();
  doc.zero = nfa.zero();
  doc.transitions.resize(nfa.size());
  for (State q = 0; q < nfa.size(); ++q) {
    for (Letter a = 0; a < nfa.letters(); ++a) {
      auto cell = nfa.next(q, a);
      doc.transitions[q].emplace_back(cell.begin(), cell.end());
    }
  }
  return doc;
}

AutomatonDocument to_document(const Automaton& automaton) {
  return std::visit([](const auto& a) { return to_document(a); }, automaton);
}

Automaton to_automaton(const AutomatonDocument& doc) {
  Alphabet alphabet(doc.alphabet);
  if (doc.transitions.size() != doc.states) {
    throw invalid_input("transitions has " + std::to_string(doc.transitions.size()) + " rows, expected " +
                        std::to_string(doc.states));
  }
  for (const auto& row : doc.transitions) {
    if (row.size() != alphabet.size()) {
      throw invalid_input("transition row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(alphabet.size()));
    }
  }
  if (doc.kind == AutomatonKind::dfa) {
    std::vector<State> table;
    table.reserve(doc.states * alphabet.size());
    for (const auto& row : doc.transitions) {
      for (const auto& cell : row) {
        if (cell.size() != 1) {
          throw invalid_input("dfa cells must hold exactly one state");
        }
        table.push_back(cell[0]);
      }
    }
    return Dfa(std::move(alphabet), doc.states, std::move(table), doc.zero);
  }
  std::vector<Nfa::Cell> cells;
  for (const auto& row : doc.transitions) {
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Nfa(std::move(alphabet), doc.states, std::move(cells), doc.initial.value_or(0),
             doc.finals.value_or(std::vector<State>{}), doc.zero);
}

std::string write_json(const AutomatonDocument& doc) {
  ordered_json j;
  j["kind"] = doc.kind == AutomatonKind::dfa ? "dfa" : "nfa";
  j["alphabet"] = doc.alphabet;
  j["states"] = doc.states;
  if (doc.initial) {
    j["initial"] = *doc.initial;
  }
  if (doc.finals) {
    j["finals"] = *doc.finals;
  }
  if (doc.zero) {
    j["zero"] = *doc.zero;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.transitions) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) {
      if (doc.kind == AutomatonKind::dfa) {
        cells.push_back(cell.at(0));
      } else {
        cells.push_back(cell);
      }
    }
    rows.push_back(std::move(cells));
  }
  // One transition row per line keeps large tables readable.
  std::string text = "{\n";
  for (const auto& [key, value] : j.items()) {
    text += "  " + ordered_json(key).dump() + ": " + value.dump() + ",\n";
  }
  text += "  \"transitions\": [";
  for (std::size_t q = 0; q < rows.size(); ++q) {
    text += (q == 0 ? "\n    " : ",\n    ") + rows[q].dump();
  }
  text += rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return text;
}

AutomatonDocument read_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw invalid_input("automaton document must be a JSON object");
  }
  for (const char* key : {"kind", "alphabet", "states", "transitions"}) {
    if (!j.contains(key)) {
      throw invalid_input(std::string("automaton document lacks \"") + key + "\"");
    }
  }
  AutomatonDocument doc;
  const auto& kind = j["kind"];
  if (kind == "dfa") {
    doc.kind = AutomatonKind::dfa;
  } else if (kind == "nfa") {
    doc.kind = AutomatonKind::nfa;
  } else {
    throw invalid_input("\"kind\" must be \"dfa\" or \"nfa\"");
  }
  if (!j["alphabet"].is_array()) {
    throw invalid_input("\"alphabet\" must be an array of strings");
  }
  for (const auto& s : j["alphabet"]) {
    if (!s.is_string()) {
      throw invalid_input("\"alphabet\" must be an array of strings");
    }
    doc.alphabet.push_back(s.get<std::string>());
  }
  doc.states = as_state(j["states"], "\"states\"");
  if (j.contains("initial")) {
    doc.initial = as_state(j["initial"], "\"initial\"");
  }
  if (j.contains("finals")) {
    if (!j["finals"].is_array()) {
      throw invalid_input("\"finals\" must be an array of state ids");
    }
    std::vector<State> finals;
    for (const auto& f : j["finals"]) {
      finals.push_back(as_state(f, "final state"));
    }
    doc.finals = std::move(finals);
  }
  if (j.contains("zero")) {
    doc.zero = as_state(j["zero"], "\"zero\"");
  }
  if (!j["transitions"].is_array()) {
    throw invalid_input("\"transitions\" must be an array of rows");
  }
  for (const auto& row : j["transitions"]) {
    if (!row.is_array()) {
      throw invalid_input("\"transitions\" must be an array of rows");
    }
    std::vector<std::vector<State>> cells;
    for (const auto& cell : row) {
      if (doc.kind == AutomatonKind::dfa) {
        cells.push_back({as_state(cell, "dfa transition")});
      } else {
        if (!cell.is_array()) {
          throw invalid_input("nfa cells must be arrays of state ids");
        }
        std::vector<State> targets;
        for (const auto& t : cell) {
          targets.push_back(as_state(t, "nfa transition"));
        }
        cells.push_back(std::move(targets));
      }
    }
    doc.transitions.push_back(std::move(cells));
  }
  to_automaton(doc);  // validates
  return doc;
}

Automaton load_automaton(const std::string& path) { return to_automaton(read_json(read_text(path))); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw invalid_input("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw invalid_input("cannot write '" + path + "'");
  }
  out << text;
}

}  // namespace synchro::cli
