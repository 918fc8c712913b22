#include <algorithm>

#include "synchro/codeset.hpp"
#include "synchro/error.hpp"

namespace synchro {
namespace {

void check_criterion_word(const Word& u) {
  if (u.size() < 2) {
    throw precondition_error("the criterion needs |u| >= 2");
  }
  if (!is_unbordered(u)) {
    throw precondition_error("u must be unbordered");
  }
}

void check_forbidden_inputs(const Word& u, std::size_t k, const Decomposition& parts) {
  if (u.size() != k) {
    throw precondition_error("|u| must equal k");
  }
  check_criterion_word(u);
  if (parts.u != u) {
    throw precondition_error("decomposition was made for a different word");
  }
  if (parts.occurrences() < 2) {
    throw precondition_error("forbidden sets need at least two occurrences of u");
  }
}

}  // namespace

bool ForbiddenSets::first_full() const { return !sets.empty() && sets.front().size() == k; }

ForbiddenSets forbidden_sets_recurrence(const Word& u, std::size_t k, const Decomposition& parts) {
  check_forbidden_inputs(u, k, parts);
  const std::size_t m = parts.m();
  ForbiddenSets out{k, std::vector<std::set<std::size_t>>(m + 1)};
  out.sets[m] = {0};
  for (std::size_t j = m + 1; j >= 2; --j) {
    const std::size_t gap = parts.parts[j - 1].size();
    auto& prev = out.sets[j - 2];
    prev = {0};
    for (std::size_t l : out.sets[j - 1]) {
      prev.insert((gap + l) % k);
    }
  }
  return out;
}

ForbiddenSets forbidden_sets_closed_form(const Word& u, std::size_t k, const Decomposition& parts) {
  check_forbidden_inputs(u, k, parts);
  const std::size_t m = parts.m();
  ForbiddenSets out{k, std::vector<std::set<std::size_t>>(m + 1)};
  for (std::size_t j = 1; j <= m + 1; ++j) {
    auto& s = out.sets[j - 1];
    s = {0};
    std::size_t sum = 0;
    for (std::size_t t = j; t <= m; ++t) {
      sum += parts.parts[t].size();
      s.insert(sum % k);
    }
  }
  return out;
}

std::vector<std::size_t> inner_partial_sums(const Decomposition& parts) {
  std::vector<std::size_t> sums;
  std::size_t sum = 0;
  for (std::size_t i = 1; i + 1 < parts.parts.size(); ++i) {
    sum += parts.parts[i].size();
    sums.push_back(sum);
  }
  return sums;
}

CriterionTrace incompletability_trace(const Alphabet& alphabet, const Word& w, const Word& u) {
  if (alphabet.size() < 2) {
    throw precondition_error("the criterion needs an alphabet with at least two letters");
  }
  alphabet.check_word(w);
  alphabet.check_word(u);
  check_criterion_word(u);
  CriterionTrace trace{decompose_by(w, u), {}, std::nullopt, false};
  trace.partial_sums = inner_partial_sums(trace.decomposition);
  if (trace.decomposition.occurrences() >= 2) {
    trace.forbidden = forbidden_sets_recurrence(u, u.size(), trace.decomposition);
    trace.incompletable = is_k_representative(trace.partial_sums, u.size());
  }
  return trace;
}

bool is_incompletable_xku(const Alphabet& alphabet, const Word& w, const Word& u) {
  if (alphabet.size() < 2) {
    throw precondition_error("the criterion needs an alphabet with at least two letters");
  }
  alphabet.check_word(w);
  alphabet.check_word(u);
  check_criterion_word(u);
  const Decomposition d = decompose_by(w, u);
  if (d.occurrences() < 2) {
    return false;
  }
  const auto sums = inner_partial_sums(d);
  return is_k_representative(sums, u.size());
}

}  // namespace synchro
