#include "subset_search.hpp"

#include <algorithm>
#include <unordered_set>

#include "synchro/error.hpp"

namespace synchro::detail {
namespace {

// Dense visited bitmap up to 2^27 subsets (16 MiB), hashed beyond that.
constexpr std::size_t dense_visited_limit = 27;

class VisitedSet {
 public:
  explicit VisitedSet(std::size_t n) : dense_(n <= dense_visited_limit) {
    if (dense_) {
      bits_.assign(((std::size_t{1} << n) + 63) / 64, 0);
    }
  }

  /// Returns true if s was not present before.
  bool insert(std::uint64_t s) {
    if (dense_) {
      std::uint64_t& block = bits_[s / 64];
      const std::uint64_t bit = std::uint64_t{1} << (s % 64);
      if ((block & bit) != 0) {
        return false;
      }
      block |= bit;
      return true;
    }
    return sparse_.insert(s).second;
  }

 private:
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

struct Level {
  std::vector<std::uint64_t> sets;
  std::vector<std::uint32_t> parent;
  std::vector<Letter> via;
};

Word rebuild(const std::vector<Level>& levels, std::uint32_t index) {
  Word w(levels.size() - 1);
  for (std::size_t depth = levels.size() - 1; depth > 0; --depth) {
    w[depth - 1] = levels[depth].via[index];
    index = levels[depth].parent[index];
  }
  return w;
}

}  // namespace

SubsetSystem::SubsetSystem(const Dfa& dfa) : n_(dfa.size()) {
  std::vector<std::uint64_t> single(n_ * dfa.letters());
  for (State q = 0; q < n_; ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) {
      single[a * n_ + q] = std::uint64_t{1} << dfa.next(q, a);
    }
  }
  build(single, dfa.letters());
}

SubsetSystem::SubsetSystem(const Nfa& nfa) : n_(nfa.size()) {
  std::vector<std::uint64_t> single(n_ * nfa.letters(), 0);
  for (State q = 0; q < n_; ++q) {
    for (Letter a = 0; a < nfa.letters(); ++a) {
      for (State t : nfa.next(q, a)) {
        single[a * n_ + q] |= std::uint64_t{1} << t;
      }
    }
  }
  build(single, nfa.letters());
}

void SubsetSystem::build(const std::vector<std::uint64_t>& single_images, std::size_t letters) {
  if (n_ > max_searchable_states) {
    throw resource_limit("state cap exceeded: subset search supports at most " +
                         std::to_string(max_searchable_states) + " states, automaton has " + std::to_string(n_));
  }
  const std::size_t chunks = (n_ + 7) / 8;
  tables_.resize(letters);
  for (Letter a = 0; a < letters; ++a) {
    auto& table = tables_[a];
    table.chunks = chunks;
    table.entries.assign(chunks * 256, 0);
    for (std::size_t c = 0; c < chunks; ++c) {
      for (std::size_t byte = 1; byte < 256; ++byte) {
        std::uint64_t acc = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t q = c * 8 + bit;
          if ((byte >> bit & 1U) != 0 && q < n_) {
            acc |= single_images[a * n_ + q];
          }
        }
        table.entries[c * 256 + byte] = acc;
      }
    }
  }
}

void SubsetSystem::image(Letter a, std::span<const std::uint64_t> in, std::span<std::uint64_t> out) const {
  const auto& table = tables_[a];
  kernels::active().image_batch(table.entries.data(), table.chunks, in.data(), out.data(), in.size());
}

std::uint64_t SubsetSystem::image(std::uint64_t mask, Letter a) const {
  std::uint64_t out = 0;
  image(a, std::span<const std::uint64_t>(&mask, 1), std::span<std::uint64_t>(&out, 1));
  return out;
}

std::optional<Word> shortest_word(const SubsetSystem& system, std::uint64_t start, Target target,
                                  std::span<const Letter> letters) {
  if (target.matches(start)) {
    return Word{};
  }
  VisitedSet visited(system.states());
  visited.insert(start);
  std::vector<Level> levels(1);
  levels[0].sets.push_back(start);

  std::vector<std::vector<std::uint64_t>> images(letters.size());
  while (!levels.back().sets.empty()) {
    const auto& frontier = levels.back().sets;
    for (std::size_t li = 0; li < letters.size(); ++li) {
      images[li].resize(frontier.size());
      system.image(letters[li], frontier, images[li]);
    }
    Level next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t li = 0; li < letters.size(); ++li) {
        const std::uint64_t s = images[li][i];
        if (!visited.insert(s)) {
          continue;
        }
        next.sets.push_back(s);
        next.parent.push_back(static_cast<std::uint32_t>(i));
        next.via.push_back(letters[li]);
        if (target.matches(s)) {
          levels.push_back(std::move(next));
          return rebuild(levels, static_cast<std::uint32_t>(levels.back().sets.size() - 1));
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return std::nullopt;
}

void check_cap(std::size_t n, const SearchLimits& limits) {
  const std::size_t cap = std::min(limits.state_cap, max_searchable_states);
  if (n > cap) {
    throw resource_limit("state cap exceeded: automaton has " + std::to_string(n) + " states, cap is " +
                         std::to_string(cap));
  }
}

std::vector<Letter> all_letters(std::size_t m) {
  std::vector<Letter> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = static_cast<Letter>(i);
  }
  return out;
}

}  // namespace synchro::detail
