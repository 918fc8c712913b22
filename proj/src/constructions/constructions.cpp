#include "synchro/constructions.hpp"

#include <algorithm>

#include "synchro/error.hpp"

namespace synchro {

State FlowerBlueprint::node_of(const Word& prefix) const {
  auto it = std::lower_bound(nodes.begin() + 1, nodes.end(), prefix);
  if (prefix.empty()) {
    return 0;
  }
  if (it == nodes.end() || *it != prefix) {
    throw invalid_input("'" + alphabet.format(prefix) + "' is not a node of the semi-flower");
  }
  return static_cast<State>(it - nodes.begin());
}

FlowerBlueprint flower_blueprint(const CodeSet& code) {
  FlowerBlueprint bp{code.alphabet(), {Word{}}, {}};
  std::vector<Word> prefixes;
  for (const auto& x : code.words()) {
    for (std::size_t len = 1; len < x.size(); ++len) {
      prefixes.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len));
    }
  }
  std::sort(prefixes.begin(), prefixes.end());
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  bp.nodes.insert(bp.nodes.end(), prefixes.begin(), prefixes.end());

  const std::size_t m = code.alphabet().size();
  bp.cells.resize(bp.nodes.size() * m);
  for (State p = 0; p < bp.nodes.size(); ++p) {
    for (Letter a = 0; a < m; ++a) {
      Word extended = bp.nodes[p];
      extended.push_back(a);
      auto& cell = bp.cells[p * m + a];
      if (code.contains(extended)) {
        cell.push_back(0);
      }
      if (std::binary_search(prefixes.begin(), prefixes.end(), extended)) {
        cell.push_back(bp.node_of(extended));
      }
    }
  }
  return bp;
}

Nfa semi_flower(const CodeSet& code) {
  FlowerBlueprint bp = flower_blueprint(code);
  const std::size_t n = bp.nodes.size();
  return Nfa(std::move(bp.alphabet), n, std::move(bp.cells), 0, {0});
}

Nfa complete_with_zero(const Nfa& nfa) {
  if (nfa.zero()) {
    throw invalid_input("automaton already has a zero state");
  }
  const std::size_t n = nfa.size();
  const std::size_t m = nfa.letters();
  const auto zero = static_cast<State>(n);
  std::vector<Nfa::Cell> cells = nfa.cells();
  for (auto& cell : cells) {
    if (cell.empty()) {
      cell.push_back(zero);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    cells.push_back({zero});
  }
  return Nfa(nfa.alphabet(), n + 1, std::move(cells), nfa.initial(), nfa.terminals(), zero);
}

Nfa fhat(const CodeSet& code) { return complete_with_zero(semi_flower(code)); }

Dfa build_fhat_k_u(const Alphabet& alphabet, const Word& u) {
  const std::size_t k = u.size();
  const std::size_t m = alphabet.size();
  if (m < 2) {
    throw precondition_error("the construction needs an alphabet with at least two letters");
  }
  if (k < 2) {
    throw precondition_error("the construction needs |u| >= 2");
  }
  alphabet.check_word(u);
  if (const Word border = longest_border(u); !border.empty()) {
    throw precondition_error("u is bordered: border '" + alphabet.format(border) + "'");
  }
  // letter(i) is a_i, 1-based along u.
  auto letter = [&](std::size_t i) { return u[i - 1]; };
  const std::size_t n = 2 * k;
  std::vector<State> table(n * m);
  auto set = [&](std::size_t q, Letter a, std::size_t to) { table[q * m + a] = static_cast<State>(to); };
  for (Letter a = 0; a < m; ++a) {
    set(0, a, 0);
    for (std::size_t i = 1; i <= k - 1; ++i) {
      set(i, a, a == letter(i) ? i + 1 : k + i);
    }
    set(k, a, a == letter(k) ? 0 : 1);
    for (std::size_t i = k + 1; i <= 2 * k - 2; ++i) {
      set(i, a, i + 1);
    }
    set(2 * k - 1, a, 1);
  }
  return Dfa(alphabet, n, std::move(table), State{0});
}

Dfa build_chain_zero(std::size_t n) {
  if (n < 3) {
    throw invalid_input("chain automaton needs n >= 3, got " + std::to_string(n));
  }
  const std::size_t m = n - 1;
  std::vector<std::string> symbols;
  for (std::size_t i = 1; i <= m; ++i) {
    symbols.push_back("a" + std::to_string(i));
  }
  // a_i has letter index i - 1.
  std::vector<State> table(n * m);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < m; ++a) {
      table[q * m + a] = static_cast<State>(q);
    }
  }
  table[1 * m + 0] = 0;
  for (std::size_t i = 1; i <= n - 2; ++i) {
    table[i * m + i] = static_cast<State>(i + 1);
    table[(i + 1) * m + i] = static_cast<State>(i);
  }
  return Dfa(Alphabet(std::move(symbols)), n, std::move(table), State{0});
}

}  // namespace synchro
