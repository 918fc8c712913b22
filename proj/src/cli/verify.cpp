#include "synchro/cli/verify.hpp"

#include <json.hpp>
#include <sstream>

#include "synchro/codeset.hpp"
#include "synchro/constructions.hpp"
#include "synchro/error.hpp"
#include "synchro/words.hpp"

namespace synchro::cli {
namespace {

const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::pass:
      return "pass";
    case PointStatus::fail:
      return "fail";
    case PointStatus::skipped:
      return "skipped";
  }
  return "?";
}

void settle(GridPoint& p) { p.status = p.expected == p.measured ? PointStatus::pass : PointStatus::fail; }

// Runs a shortest-word search for one grid point; a cap overrun marks it skipped.
template <class Search>
void measure(GridPoint& p, const Alphabet& alphabet, Search search) {
  try {
    auto w = search();
    if (w) {
      p.measured = w->size();
      p.witness = alphabet.format(*w);
    } else {
      p.note = "no word found";
    }
    settle(p);
  } catch (const resource_limit& e) {
    p.status = PointStatus::skipped;
    p.note = e.what();
  }
}

std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::size_t VerificationReport::count(PointStatus status) const {
  std::size_t c = 0;
  for (const auto& p : points) {
    c += p.status == status;
  }
  return c;
}

int VerificationReport::exit_code() const {
  if (count(PointStatus::fail) > 0) {
    return 1;
  }
  return count(PointStatus::skipped) > 0 ? 2 : 0;
}

std::string VerificationReport::to_text() const {
  std::vector<std::string> header;
  if (!points.empty()) {
    for (const auto& [k, v] : points.front().params) {
      header.push_back(k);
    }
  }
  header.insert(header.end(), {"expected", "measured", "status", "witness"});
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : points) {
    std::vector<std::string> row;
    for (const auto& [k, v] : p.params) {
      row.push_back(v);
    }
    row.push_back(cell(p.expected));
    row.push_back(cell(p.measured));
    row.push_back(status_name(p.status));
    row.push_back(p.witness.empty() ? p.note : p.witness);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  out << family << " (" << quantity << ")\n";
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) {
    emit(row);
  }
  out << "summary: " << count(PointStatus::pass) << " pass, " << count(PointStatus::fail) << " fail, "
      << count(PointStatus::skipped) << " skipped\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family;
  j["quantity"] = quantity;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : p.params) {
      params[k] = v;
    }
    e["params"] = std::move(params);
    e["expected"] = p.expected ? nlohmann::ordered_json(*p.expected) : nlohmann::ordered_json(nullptr);
    e["measured"] = p.measured ? nlohmann::ordered_json(*p.measured) : nlohmann::ordered_json(nullptr);
    e["witness"] = p.witness;
    e["status"] = status_name(p.status);
    if (!p.note.empty()) {
      e["note"] = p.note;
    }
    arr.push_back(std::move(e));
  }
  j["points"] = std::move(arr);
  j["summary"] = {{"pass", count(PointStatus::pass)},
                  {"fail", count(PointStatus::fail)},
                  {"skipped", count(PointStatus::skipped)}};
  return j.dump(2) + "\n";
}

Word canonical_u(const Alphabet& alphabet, std::size_t k) {
  if (k >= alphabet.size()) {
    return canonical_unbordered_with_all_letters(alphabet, k);
  }
  if (alphabet.size() < 2 || k < 2) {
    throw invalid_input("no canonical unbordered word of length " + std::to_string(k));
  }
  Word u(k - 1, 0);
  u.push_back(1);
  return u;
}

VerificationReport verify_theorem2(const std::vector<std::size_t>& ks, const std::vector<std::size_t>& alphabet_sizes,
                                   SearchLimits limits) {
  VerificationReport report{"theorem2", "shortest reset word length of F-hat(k, u), n = 2k", {}};
  for (std::size_t m : alphabet_sizes) {
    Alphabet alphabet = Alphabet::first_letters(m);
    for (std::size_t k : ks) {
      Word u = canonical_u(alphabet, k);
      GridPoint p;
      std::size_t n = 2 * k;
      p.params = {{"alphabet", std::to_string(m)}, {"k", std::to_string(k)}, {"n", std::to_string(n)},
                  {"u", alphabet.format(u)}};
      // n^2/4 + n/2 - 1 with n = 2k; the k-form is asserted equal below.
      p.expected = n * n / 4 + n / 2 - 1;
      if (*p.expected != k * k + k - 1) {
        throw internal_error("theorem2 formulas disagree");
      }
      Dfa dfa = build_fhat_k_u(alphabet, u);
      measure(p, alphabet, [&] { return shortest_reset_word(dfa, limits); });
      report.points.push_back(std::move(p));
    }
  }
  return report;
}

VerificationReport verify_prop2(const std::vector<Prop2Case>& cases, SearchLimits limits) {
  VerificationReport report{"prop2", "shortest incompletable word length of A^k minus {u}", {}};
  for (const auto& c : cases) {
    Alphabet alphabet = Alphabet::first_letters(c.alphabet_size);
    Word u = alphabet.parse(c.u);
    std::size_t k = u.size();
    GridPoint p;
    p.params = {{"alphabet", std::to_string(c.alphabet_size)}, {"k", std::to_string(k)}, {"u", c.u}};
    p.expected = k * k + k - 1;
    CodeSet code = CodeSet::all_but(alphabet, u);
    measure(p, alphabet, [&] { return shortest_incompletable_word(code, limits); });
    report.points.push_back(std::move(p));
  }
  return report;
}

VerificationReport verify_fig1(const std::vector<std::size_t>& ns, SearchLimits limits) {
  VerificationReport report{"fig1", "shortest reset word length of the chain automaton", {}};
  for (std::size_t n : ns) {
    GridPoint p;
    p.params = {{"n", std::to_string(n)}, {"letters", std::to_string(n - 1)}};
    p.expected = n * (n - 1) / 2;
    Dfa dfa = build_chain_zero(n);
    measure(p, dfa.alphabet(), [&] { return shortest_reset_word(dfa, limits); });
    report.points.push_back(std::move(p));
  }
  return report;
}

VerificationReport verify_equivalence(const Alphabet& alphabet, const std::vector<std::string>& us,
                                      std::size_t max_len) {
  VerificationReport report{"equivalence", "words on which criterion, flower and F-hat reset test agree", {}};
  for (const auto& text : us) {
    Word u = alphabet.parse(text);
    CompletionChecker flower(CodeSet::all_but(alphabet, u));
    Dfa fh = build_fhat_k_u(alphabet, u);
    GridPoint p;
    p.params = {{"u", text}, {"max-len", std::to_string(max_len)}};
    std::size_t total = 0;
    std::size_t agree = 0;
    std::size_t incompletable = 0;
    Word w;
    // Odometer over all words of length 0..max_len in lexicographic order per length.
    for (std::size_t len = 0; len <= max_len; ++len) {
      w.assign(len, 0);
      while (true) {
        bool criterion = is_incompletable_xku(alphabet, w, u);
        bool oracle = !flower.completable(w);
        bool reset = is_reset_word(fh, w);
        ++total;
        if (criterion == oracle && oracle == reset) {
          ++agree;
        } else if (p.witness.empty()) {
          p.witness = alphabet.format(w);
        }
        incompletable += criterion;
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1 == alphabet.size()) {
          w[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
    }
    p.expected = total;
    p.measured = agree;
    p.note = std::to_string(incompletable) + " incompletable";
    settle(p);
    report.points.push_back(std::move(p));
  }
  return report;
}

}  // namespace synchro::cli
