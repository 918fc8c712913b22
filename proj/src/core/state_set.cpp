#include "synchro/state_set.hpp"

#include <algorithm>

#include "synchro/error.hpp"

namespace synchro {

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  std::fill(s.blocks_.begin(), s.blocks_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0) {
    s.blocks_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<State> states) {
  StateSet s(universe);
  for (State q : states) {
    s.insert(q);
  }
  return s;
}

StateSet StateSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw invalid_input("mask form needs a universe of at most 64 states");
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw invalid_input("mask has bits outside the universe");
  }
  StateSet s(universe);
  if (universe > 0) {
    s.blocks_[0] = mask;
  }
  return s;
}

void StateSet::insert(State q) {
  if (q >= universe_) {
    throw invalid_input("state " + std::to_string(q) + " outside universe of " + std::to_string(universe_));
  }
  blocks_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
  if (q < universe_) {
    blocks_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
  }
}

std::size_t StateSet::size() const noexcept {
  std::size_t n = 0;
  for (auto b : blocks_) {
    n += static_cast<std::size_t>(std::popcount(b));
  }
  return n;
}

bool StateSet::empty() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

std::vector<State> StateSet::to_vector() const {
  std::vector<State> out;
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::uint64_t StateSet::mask() const {
  if (universe_ > 64) {
    throw invalid_input("mask form needs a universe of at most 64 states");
  }
  return blocks_.empty() ? 0 : blocks_[0];
}

StateSet& StateSet::operator|=(const StateSet& other) {
  if (other.universe_ != universe_) {
    throw invalid_input("state sets over different universes");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    blocks_[i] |= other.blocks_[i];
  }
  return *this;
}

}  // namespace synchro
