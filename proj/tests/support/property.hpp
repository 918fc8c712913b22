#pragma once

// Seeded random generators for property tests. Fixed seeds keep failures reproducible.

#include <random>
#include <vector>

#include "synchro/alphabet.hpp"
#include "synchro/dfa.hpp"
#include "synchro/nfa.hpp"

namespace synchro::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::uint64_t bits() { return engine_(); }

  Word word(std::size_t m, std::size_t length) {
    Word w(length);
    for (auto& a : w) {
      a = static_cast<Letter>(below(m));
    }
    return w;
  }

  Dfa dfa(std::size_t n, std::size_t m, bool with_zero = false) {
    std::vector<State> table(n * m);
    for (auto& t : table) {
      t = static_cast<State>(below(n));
    }
    if (with_zero) {
      for (std::size_t a = 0; a < m; ++a) {
        table[a] = 0;
      }
      return Dfa(Alphabet::first_letters(m), n, std::move(table), State{0});
    }
    return Dfa(Alphabet::first_letters(m), n, std::move(table));
  }

  Nfa nfa(std::size_t n, std::size_t m, double density) {
    std::vector<Nfa::Cell> cells(n * m);
    for (auto& cell : cells) {
      for (State t = 0; t < n; ++t) {
        if (coin(density)) {
          cell.push_back(t);
        }
      }
    }
    return Nfa(Alphabet::first_letters(m), n, std::move(cells), 0, {0});
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace synchro::gen
