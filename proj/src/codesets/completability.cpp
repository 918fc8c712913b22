#include "../core/subset_search.hpp"
#include "synchro/codeset.hpp"
#include "synchro/constructions.hpp"

namespace synchro {

CompletionChecker::CompletionChecker(const CodeSet& code) : flower_(semi_flower(code)) {}

bool CompletionChecker::completable(const Word& w) const {
  return !image(flower_, StateSet::full(flower_.size()), w).empty();
}

bool is_completable(const Word& w, const CodeSet& code) { return CompletionChecker(code).completable(w); }

std::optional<Word> shortest_incompletable_word(const CodeSet& code, SearchLimits limits) {
  const Nfa flower = semi_flower(code);
  detail::check_cap(flower.size(), limits);
  const detail::SubsetSystem system(flower);
  const auto letters = detail::all_letters(flower.letters());
  return detail::shortest_word(system, system.all(), {detail::Target::Kind::exact, 0}, letters);
}

bool is_complete_set(const CodeSet& code, SearchLimits limits) {
  return !shortest_incompletable_word(code, limits).has_value();
}

}  // namespace synchro
