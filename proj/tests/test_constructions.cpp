#include <doctest.h>

#include <functional>
#include <set>

#include "support/oracles.hpp"
#include "support/property.hpp"
#include "synchro/constructions.hpp"
#include "synchro/error.hpp"
#include "synchro/sync.hpp"

using namespace synchro;

namespace {

const Alphabet ab = Alphabet::from_chars("ab");
const Alphabet abc = Alphabet::from_chars("abc");
Word w_of(const char* text) { return ab.parse(text); }

// 1-based trie numbering: hub 1 is our state 0, and so on.
State one_based(State id) { return id - 1; }
Nfa::Cell cell(std::initializer_list<State> ids) {
  Nfa::Cell c;
  for (State p : ids) {
    c.push_back(one_based(p));
  }
  std::sort(c.begin(), c.end());
  return c;
}
Nfa::Cell next(const Nfa& a, State q, Letter l) {
  auto span = a.next(q, l);
  return {span.begin(), span.end()};
}

CodeSet small_complete_code() { return CodeSet::parse("aa\nab\nba\nbb\naab\n"); }

CodeSet random_code(gen::Rng& rng, std::size_t m) {
  std::vector<Word> words;
  // At most m + m^2 + m^3 + m^4 distinct words exist; a unary alphabet has only 4.
  const std::size_t count = rng.between(1, m == 1 ? 4 : 5);
  while (words.size() < count) {
    Word w = rng.word(m, rng.between(1, 4));
    if (std::find(words.begin(), words.end(), w) == words.end()) {
      words.push_back(std::move(w));
    }
  }
  return CodeSet(Alphabet::first_letters(m), std::move(words));
}

// Labels of all simple cycles through the hub, and whether the graph minus the hub is acyclic.
std::set<Word> hub_cycle_labels(const Nfa& a, bool& acyclic_without_hub) {
  std::set<Word> labels;
  const std::size_t n = a.size();
  std::vector<int> color(n, 0);
  acyclic_without_hub = true;
  std::function<void(State)> dfs = [&](State q) {
    color[q] = 1;
    for (Letter l = 0; l < a.letters(); ++l) {
      for (State t : a.next(q, l)) {
        if (t == 0) continue;
        if (color[t] == 1) acyclic_without_hub = false;
        if (color[t] == 0) dfs(t);
      }
    }
    color[q] = 2;
  };
  for (State q = 1; q < n; ++q) {
    if (color[q] == 0) dfs(q);
  }
  Word path;
  std::function<void(State)> walk = [&](State q) {
    for (Letter l = 0; l < a.letters(); ++l) {
      for (State t : a.next(q, l)) {
        path.push_back(l);
        if (t == 0) {
          labels.insert(path);
        } else {
          walk(t);
        }
        path.pop_back();
      }
    }
  };
  if (acyclic_without_hub) walk(0);
  return labels;
}

}  // namespace

TEST_SUITE("semi_flower") {
  TEST_CASE("semi-flower of {aa, ab, ba, bb, aab}") {
    const Nfa f = semi_flower(small_complete_code());
    REQUIRE(f.size() == 4);
    CHECK(f.initial() == one_based(1));
    CHECK(f.terminals() == std::vector<State>{one_based(1)});
    CHECK_FALSE(f.zero().has_value());
    const Letter a = 0;
    const Letter b = 1;
    CHECK(next(f, one_based(1), a) == cell({2}));
    CHECK(next(f, one_based(1), b) == cell({4}));
    CHECK(next(f, one_based(2), a) == cell({1, 3}));
    CHECK(next(f, one_based(2), b) == cell({1}));
    CHECK(next(f, one_based(3), a).empty());
    CHECK(next(f, one_based(3), b) == cell({1}));
    CHECK(next(f, one_based(4), a) == cell({1}));
    CHECK(next(f, one_based(4), b) == cell({1}));
    const FlowerBlueprint bp = flower_blueprint(small_complete_code());
    CHECK(bp.nodes == std::vector<Word>{Word{}, w_of("a"), w_of("aa"), w_of("b")});
    CHECK(bp.node_of(w_of("aa")) == one_based(3));
    CHECK_THROWS_AS(bp.node_of(w_of("ab")), invalid_input);
  }

  TEST_CASE("single-letter code") {
    const Nfa f = semi_flower(CodeSet(ab, {w_of("a")}));
    REQUIRE(f.size() == 1);
    CHECK(next(f, 0, 0) == Nfa::Cell{0});
    CHECK(next(f, 0, 1).empty());
  }

  TEST_CASE("A^2 minus ab: hub plus nodes a and b, recognizes even-length words avoiding ab blocks") {
    const Nfa f = semi_flower(CodeSet::all_but(ab, w_of("ab")));
    CHECK(f.size() == 3);
    oracle::for_each_word(2, 8, [&](const Word& w) {
      bool member = w.size() % 2 == 0;
      for (std::size_t i = 0; member && i < w.size(); i += 2) {
        member = !(w[i] == 0 && w[i + 1] == 1);
      }
      REQUIRE(f.accepts(w) == member);
    });
  }

  TEST_CASE("recognizes X*: agrees with dynamic programming membership") {
    gen::Rng rng(71);
    std::vector<CodeSet> codes{small_complete_code(), CodeSet::all_but(ab, w_of("ab")), CodeSet::all_but(ab, w_of("aab")),
                               CodeSet(ab, {w_of("a")})};
    for (int i = 0; i < 24; ++i) {
      codes.push_back(random_code(rng, rng.between(1, 3)));
    }
    for (const auto& x : codes) {
      CAPTURE(x.to_text());
      const Nfa f = semi_flower(x);
      oracle::for_each_word(x.alphabet().size(), x.alphabet().size() == 3 ? 7 : 10, [&](const Word& w) {
        REQUIRE(f.accepts(w) == oracle::in_star(w, x.words()));
      });
    }
  }

  TEST_CASE("every simple cycle passes through the hub and spells a member of X") {
    gen::Rng rng(73);
    std::vector<CodeSet> codes{small_complete_code(), CodeSet::all_but(abc, abc.parse("ab"))};
    for (int i = 0; i < 30; ++i) {
      codes.push_back(random_code(rng, rng.between(1, 3)));
    }
    for (const auto& x : codes) {
      CAPTURE(x.to_text());
      bool acyclic = false;
      const auto labels = hub_cycle_labels(semi_flower(x), acyclic);
      CHECK(acyclic);
      CHECK(labels == std::set<Word>(x.words().begin(), x.words().end()));
    }
  }
}

TEST_SUITE("zero completion") {
  TEST_CASE("zero completion: one new edge plus the zero loops") {
    const Nfa f = semi_flower(small_complete_code());
    const Nfa g = complete_with_zero(f);
    REQUIRE(g.size() == 5);
    const State zero = 4;
    CHECK(g.zero() == zero);
    std::size_t changed = 0;
    for (State q = 0; q < f.size(); ++q) {
      for (Letter l = 0; l < 2; ++l) {
        if (next(f, q, l) != next(g, q, l)) {
          ++changed;
          CHECK(q == one_based(3));
          CHECK(l == 0);
          CHECK(next(g, q, l) == Nfa::Cell{zero});
        }
      }
    }
    CHECK(changed == 1);
    CHECK(next(g, zero, 0) == Nfa::Cell{zero});
    CHECK(next(g, zero, 1) == Nfa::Cell{zero});
    CHECK(g.initial() == f.initial());
    CHECK(g.terminals() == f.terminals());
  }

  TEST_CASE("no empty cells: only an isolated zero is added") {
    const Nfa f(ab, 2, {{1}, {0}, {0, 1}, {1}}, 0, {0});
    const Nfa g = complete_with_zero(f);
    CHECK(g.size() == 3);
    for (State q = 0; q < 2; ++q) {
      for (Letter l = 0; l < 2; ++l) {
        CHECK(next(g, q, l) == next(f, q, l));
      }
    }
  }

  TEST_CASE("already completed input is rejected") {
    CHECK_THROWS_AS(complete_with_zero(fhat(small_complete_code())), invalid_input);
  }

  TEST_CASE("fhat") {
    const Nfa completed = fhat(small_complete_code());
    CHECK(completed.size() == 5);
    const Nfa g = fhat(CodeSet::all_but(ab, w_of("ab")));
    CHECK(g.size() == 4);
    REQUIRE(g.zero());
    for (Letter l = 0; l < 2; ++l) {
      CHECK(next(g, *g.zero(), l) == Nfa::Cell{*g.zero()});
    }
    for (const auto& c : g.cells()) {
      CHECK_FALSE(c.empty());
    }
  }
}

TEST_SUITE("fhat(k, u)") {
  TEST_CASE("k = 2, u = ab") {
    const Dfa d = build_fhat_k_u(ab, w_of("ab"));
    REQUIRE(d.size() == 4);
    CHECK(d.zero() == State{0});
    CHECK(d.next(1, 0) == 2);
    CHECK(d.next(1, 1) == 3);
    CHECK(d.next(2, 1) == 0);
    CHECK(d.next(2, 0) == 1);
    CHECK(d.next(3, 0) == 1);
    CHECK(d.next(3, 1) == 1);
    CHECK(d.next(0, 0) == 0);
    CHECK(d.next(0, 1) == 0);
  }

  TEST_CASE("k = 3, u = aab") {
    const Dfa d = build_fhat_k_u(ab, w_of("aab"));
    CHECK(d.size() == 6);
    CHECK(d.next(3, 1) == 0);
  }

  TEST_CASE("k = 4, u = aabc over three letters") {
    const Dfa d = build_fhat_k_u(abc, abc.parse("aabc"));
    CHECK(d.size() == 8);
    CHECK(d.next(2, 1) == 6);
    CHECK(d.next(2, 0) == 3);
    CHECK(d.next(2, 2) == 6);
    CHECK(d.next(3, 1) == 4);
    CHECK(d.next(4, 2) == 0);
    CHECK(d.next(7, 2) == 1);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(build_fhat_k_u(ab, w_of("aba")), precondition_error);
    CHECK_THROWS_AS(build_fhat_k_u(ab, w_of("a")), precondition_error);
    CHECK_THROWS_AS(build_fhat_k_u(Alphabet::from_chars("a"), Word{0, 0}), precondition_error);
    CHECK_THROWS_AS(build_fhat_k_u(ab, Word{0, 2}), invalid_input);
    try {
      build_fhat_k_u(ab, w_of("aba"));
    } catch (const precondition_error& e) {
      CHECK(std::string(e.what()) == "u is bordered: border 'a'");
    }
  }

  TEST_CASE("deterministic, total, unique zero") {
    for (const char* u : {"ab", "aab", "abb", "aaab"}) {
      const Dfa d = build_fhat_k_u(ab, w_of(u));
      const ZeroProbe probe = find_zero_state(d);
      CHECK(probe.zero == State{0});
      CHECK(probe.fixed_states == 1);
    }
  }

  TEST_CASE("reset words are exactly the incompletable words of A^k minus u") {
    for (const Word& u : oracle::words_of_length(2, 2)) {
      if (!oracle::unbordered(u)) continue;
      const Dfa d = build_fhat_k_u(ab, u);
      oracle::for_each_word(2, 14, [&](const Word& w) {
        if (is_reset_word(d, w) == oracle::completable_all_but(w, u)) {
          FAIL_CHECK("mismatch on ", ab.format(w), " for u = ", ab.format(u));
        }
      });
    }
    for (const Word& u : oracle::words_of_length(2, 3)) {
      if (!oracle::unbordered(u)) continue;
      const Dfa d = build_fhat_k_u(ab, u);
      const CompletionChecker checker(CodeSet::all_but(ab, u));
      oracle::for_each_word(2, 14, [&](const Word& w) {
        if (is_reset_word(d, w) == checker.completable(w)) {
          FAIL_CHECK("mismatch on ", ab.format(w), " for u = ", ab.format(u));
        }
      });
    }
  }

  TEST_CASE("shortest reset word has length k^2+k-1 for every unbordered u, k = 2..6") {
    for (std::size_t m = 2; m <= 3; ++m) {
      const Alphabet alpha = Alphabet::first_letters(m);
      for (std::size_t k = 2; k <= 6; ++k) {
        std::size_t tried = 0;
        for (const Word& u : oracle::words_of_length(m, k)) {
          if (!oracle::unbordered(u)) continue;
          ++tried;
          const auto w = shortest_reset_word(build_fhat_k_u(alpha, u));
          REQUIRE(w);
          CHECK(w->size() == k * k + k - 1);
        }
        CHECK(tried > 0);
      }
    }
  }

  TEST_CASE("proper for |u| > |A| when u contains every letter") {
    for (auto [m, k] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
      const Alphabet alpha = Alphabet::first_letters(static_cast<std::size_t>(m));
      const Word u = canonical_unbordered_with_all_letters(alpha, static_cast<std::size_t>(k));
      const ProperReport report = proper_report(build_fhat_k_u(alpha, u));
      CHECK(report.proper());
      CHECK(report.restricted_synchronizing.size() == static_cast<std::size_t>(m));
    }
  }

  TEST_CASE("proper for every unbordered u using all letters, |u| > |A|") {
    for (auto [m, k_max] : {std::pair{2, 6}, std::pair{3, 5}}) {
      const Alphabet alpha = Alphabet::first_letters(static_cast<std::size_t>(m));
      for (std::size_t k = static_cast<std::size_t>(m) + 1; k <= static_cast<std::size_t>(k_max); ++k) {
        for (const Word& u : oracle::words_of_length(alpha.size(), k)) {
          if (!oracle::unbordered(u) || std::set<Letter>(u.begin(), u.end()).size() != alpha.size()) {
            continue;
          }
          CAPTURE(alpha.format(u));
          CHECK(is_proper(build_fhat_k_u(alpha, u)));
        }
      }
    }
  }
}

TEST_SUITE("chain automaton") {
  TEST_CASE("n = 4 transitions") {
    const Dfa d = build_chain_zero(4);
    REQUIRE(d.size() == 4);
    REQUIRE(d.letters() == 3);
    CHECK(d.alphabet().symbols() == std::vector<std::string>{"a1", "a2", "a3"});
    CHECK(d.next(1, 0) == 0);
    CHECK(d.next(1, 1) == 2);
    CHECK(d.next(2, 1) == 1);
    CHECK(d.next(2, 2) == 3);
    CHECK(d.next(3, 2) == 2);
    CHECK(d.next(3, 0) == 3);
    CHECK(d.next(1, 2) == 1);
    CHECK(d.next(2, 0) == 2);
    CHECK(d.zero() == State{0});
  }

  TEST_CASE("shortest reset length n(n-1)/2") {
    for (std::size_t n = 3; n <= 7; ++n) {
      const auto w = shortest_reset_word(build_chain_zero(n));
      REQUIRE(w);
      CHECK(w->size() == n * (n - 1) / 2);
    }
  }

  TEST_CASE("zero is fixed and n < 3 is rejected") {
    const Dfa d = build_chain_zero(5);
    for (Letter l = 0; l < d.letters(); ++l) {
      CHECK(d.next(0, l) == 0);
    }
    CHECK_THROWS_AS(build_chain_zero(2), invalid_input);
  }
}
