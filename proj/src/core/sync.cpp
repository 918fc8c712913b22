#include "synchro/sync.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "subset_search.hpp"
#include "synchro/error.hpp"
#include "synchro/kernels.hpp"

namespace synchro {
namespace {

void check_universe(const StateSet& states, std::size_t n) {
  if (states.universe() != n) {
    throw invalid_input("state set universe " + std::to_string(states.universe()) + " does not match automaton size " +
                        std::to_string(n));
  }
}

// Pair-merging over a subset of the letters: every pair {p, q} must reach the
// diagonal. Backward BFS from the diagonal through letter preimages.
bool synchronizing_over(const Dfa& dfa, const std::vector<Letter>& letters) {
  const std::size_t n = dfa.size();
  if (n == 1) {
    return true;
  }
  if (letters.empty()) {
    return false;
  }
  std::vector<std::vector<std::vector<State>>> pre(letters.size(), std::vector<std::vector<State>>(n));
  for (std::size_t li = 0; li < letters.size(); ++li) {
    for (State q = 0; q < n; ++q) {
      pre[li][dfa.next(q, letters[li])].push_back(q);
    }
  }
  auto index = [n](State p, State q) { return p < q ? p * n + q : q * n + p; };
  std::vector<char> merged(n * n, 0);
  std::deque<std::pair<State, State>> queue;
  for (State q = 0; q < n; ++q) {
    merged[index(q, q)] = 1;
    queue.emplace_back(q, q);
  }
  std::size_t merged_pairs = 0;
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    for (std::size_t li = 0; li < letters.size(); ++li) {
      for (State pp : pre[li][p]) {
        for (State qq : pre[li][q]) {
          if (pp == qq) {
            continue;
          }
          char& flag = merged[index(pp, qq)];
          if (flag == 0) {
            flag = 1;
            ++merged_pairs;
            queue.emplace_back(pp, qq);
          }
        }
      }
    }
  }
  return merged_pairs == n * (n - 1) / 2;
}

State require_zero(const Nfa& nfa) {
  if (!nfa.zero()) {
    throw unsupported_input("strong synchronization is only supported for automata with an absorbing zero state");
  }
  return *nfa.zero();
}

}  // namespace

State apply(const Dfa& dfa, State q, const Word& w) {
  dfa.check_state(q);
  dfa.alphabet().check_word(w);
  for (Letter a : w) {
    q = dfa.next(q, a);
  }
  return q;
}

StateSet image(const Dfa& dfa, const StateSet& states, const Word& w) {
  check_universe(states, dfa.size());
  dfa.alphabet().check_word(w);
  StateSet out(dfa.size());
  states.for_each([&](State q) {
    for (Letter a : w) {
      q = dfa.next(q, a);
    }
    out.insert(q);
  });
  return out;
}

StateSet image(const Nfa& nfa, const StateSet& states, const Word& w) {
  check_universe(states, nfa.size());
  nfa.alphabet().check_word(w);
  StateSet current = states;
  for (Letter a : w) {
    StateSet next(nfa.size());
    current.for_each([&](State q) {
      for (State t : nfa.next(q, a)) {
        next.insert(t);
      }
    });
    current = std::move(next);
    if (current.empty()) {
      break;
    }
  }
  return current;
}

bool is_reset_word(const Dfa& dfa, const Word& w) {
  dfa.alphabet().check_word(w);
  const std::size_t n = dfa.size();
  if (n == 1) {
    return true;
  }
  if (n > kernels::transform_lanes) {
    return image(dfa, StateSet::full(n), w).size() == 1;
  }
  // Run all states at once as one packed transformation.
  std::vector<std::uint8_t> tables(dfa.letters() * kernels::transform_lanes, 0);
  for (Letter a = 0; a < dfa.letters(); ++a) {
    for (State q = 0; q < n; ++q) {
      tables[a * kernels::transform_lanes + q] = static_cast<std::uint8_t>(dfa.next(q, a));
    }
  }
  std::array<std::uint8_t, kernels::transform_lanes> lanes{};
  for (State q = 0; q < n; ++q) {
    lanes[q] = static_cast<std::uint8_t>(q);
  }
  kernels::active().apply_word_u8(tables.data(), w.data(), w.size(), lanes.data());
  return std::all_of(lanes.begin(), lanes.begin() + static_cast<std::ptrdiff_t>(n),
                     [&](std::uint8_t q) { return q == lanes[0]; });
}

std::optional<Word> shortest_reset_word(const Dfa& dfa, SearchLimits limits) {
  detail::check_cap(dfa.size(), limits);
  const detail::SubsetSystem system(dfa);
  const auto letters = detail::all_letters(dfa.letters());
  return detail::shortest_word(system, system.all(), {detail::Target::Kind::singleton}, letters);
}

bool is_synchronizing(const Dfa& dfa) { return synchronizing_over(dfa, detail::all_letters(dfa.letters())); }

ZeroProbe find_zero_state(const Dfa& dfa) {
  ZeroProbe probe;
  for (State q = 0; q < dfa.size(); ++q) {
    const auto row = dfa.row(q);
    if (std::all_of(row.begin(), row.end(), [q](State t) { return t == q; })) {
      if (++probe.fixed_states == 1) {
        probe.zero = q;
      }
    }
  }
  if (probe.fixed_states != 1) {
    probe.zero.reset();
  }
  return probe;
}

bool is_strong_sync_word(const Nfa& nfa, const Word& w) {
  const State zero = require_zero(nfa);
  StateSet end = image(nfa, StateSet::full(nfa.size()), w);
  end.erase(zero);
  return end.empty();
}

std::optional<Word> shortest_strong_sync_word(const Nfa& nfa, SearchLimits limits) {
  const State zero = require_zero(nfa);
  detail::check_cap(nfa.size(), limits);
  const detail::SubsetSystem system(nfa);
  const auto letters = detail::all_letters(nfa.letters());
  // zero is absorbing, so every image of Q still contains it.
  return detail::shortest_word(system, system.all(), {detail::Target::Kind::exact, std::uint64_t{1} << zero}, letters);
}

bool ProperReport::proper() const {
  return std::none_of(restricted_synchronizing.begin(), restricted_synchronizing.end(), [](bool b) { return b; });
}

ProperReport proper_report(const Dfa& dfa) {
  if (!is_synchronizing(dfa)) {
    throw precondition_error("is_proper requires a synchronizing automaton");
  }
  ProperReport report;
  for (Letter a = 0; a < dfa.letters(); ++a) {
    std::vector<Letter> rest;
    for (Letter b = 0; b < dfa.letters(); ++b) {
      if (b != a) {
        rest.push_back(b);
      }
    }
    report.restricted_synchronizing.push_back(synchronizing_over(dfa, rest));
  }
  return report;
}

bool is_proper(const Dfa& dfa) { return proper_report(dfa).proper(); }

Dfa restrict_letters(const Dfa& dfa, const std::vector<Letter>& keep) {
  std::vector<std::string> symbols;
  for (Letter a : keep) {
    symbols.push_back(dfa.alphabet().symbol(a));
  }
  std::vector<State> table;
  table.reserve(dfa.size() * keep.size());
  for (State q = 0; q < dfa.size(); ++q) {
    for (Letter a : keep) {
      table.push_back(dfa.next(q, a));
    }
  }
  return Dfa(Alphabet(std::move(symbols)), dfa.size(), std::move(table), dfa.zero());
}

}  // namespace synchro
