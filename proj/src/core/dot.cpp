#include "synchro/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace synchro {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  return out + '"';
}

using EdgeLabels = std::map<std::pair<State, State>, std::string>;

void add_label(EdgeLabels& edges, State from, State to, const std::string& symbol) {
  auto& label = edges[{from, to}];
  if (!label.empty()) {
    label += ",";
  }
  label += symbol;
}

void emit(std::ostringstream& out, const std::string& name, std::size_t n, const std::optional<State>& zero,
          const std::optional<State>& initial, const std::vector<State>& terminals, const EdgeLabels& edges) {
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  if (initial) {
    out << "  __start [shape=point];\n";
  }
  for (State q = 0; q < n; ++q) {
    out << "  " << q;
    if (zero && *zero == q) {
      out << " [shape=box, style=filled, fillcolor=lightgray]";
    } else if (std::find(terminals.begin(), terminals.end(), q) != terminals.end()) {
      out << " [shape=doublecircle]";
    }
    out << ";\n";
  }
  if (initial) {
    out << "  __start -> " << *initial << ";\n";
  }
  for (const auto& [ends, label] : edges) {
    out << "  " << ends.first << " -> " << ends.second << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
}

}  // namespace

std::string to_dot(const Dfa& dfa, const std::string& name) {
  EdgeLabels edges;
  for (State q = 0; q < dfa.size(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      add_label(edges, q, dfa.next(q, a), dfa.alphabet().symbol(a));
    }
  }
  std::ostringstream out;
  emit(out, name, dfa.size(), dfa.zero(), std::nullopt, {}, edges);
  return out.str();
}

std::string to_dot(const Nfa& nfa, const std::string& name) {
  EdgeLabels edges;
  for (State q = 0; q < nfa.size(); ++q) {
    for (Letter a = 0; a < nfa.letters(); ++a) {
      for (State t : nfa.next(q, a)) {
        add_label(edges, q, t, nfa.alphabet().symbol(a));
      }
    }
  }
  std::ostringstream out;
  emit(out, name, nfa.size(), nfa.zero(), nfa.initial(), nfa.terminals(), edges);
  return out.str();
}

}  // namespace synchro
