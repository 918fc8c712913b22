#include "synchro/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <regex>

#include "synchro/cli/code_argument.hpp"
#include "synchro/cli/document.hpp"
#include "synchro/cli/verify.hpp"
#include "synchro/codeset.hpp"
#include "synchro/constructions.hpp"
#include "synchro/dot.hpp"
#include "synchro/error.hpp"
#include "synchro/sync.hpp"
#include "synchro/words.hpp"

namespace synchro::cli {
namespace {

using ordered_json = nlohmann::ordered_json;
using Facts = std::vector<std::pair<std::string, std::string>>;

/// Outcome of an analyze/words task before rendering.
struct Result {
  std::vector<std::string> lines;
  ordered_json json = ordered_json::object();
  Facts facts;  ///< values visible to --check; the first one is the default field
  bool truth = true;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string show(const Alphabet& alphabet, const Word& w) { return w.empty() ? "(empty word)" : alphabet.format(w); }

std::string set_text(const std::set<std::size_t>& s) {
  std::string t = "{";
  for (auto v : s) {
    t += (t.size() > 1 ? ", " : "") + std::to_string(v);
  }
  return t + "}";
}

std::optional<long long> as_number(const std::string& s) {
  static const std::regex number(R"(-?\d+)");
  if (!std::regex_match(s, number)) {
    return std::nullopt;
  }
  return std::stoll(s);
}

/// `field op value` or a bare value compared with the default field.
bool evaluate_check(const std::string& expr, const Facts& facts) {
  static const std::regex full(R"(^\s*([A-Za-z_]+)\s*(==|!=|<=|>=|<|>)\s*(\S+)\s*$)");
  static const std::regex bare(R"(^\s*(\S+)\s*$)");
  std::smatch m;
  std::string field;
  std::string op = "==";
  std::string value;
  if (std::regex_match(expr, m, full)) {
    field = m[1];
    op = m[2];
    value = m[3];
  } else if (std::regex_match(expr, m, bare)) {
    field = facts.front().first;
    value = m[1];
  } else {
    throw invalid_input("cannot parse --check expression '" + expr + "'");
  }
  auto it = std::find_if(facts.begin(), facts.end(), [&](const auto& f) { return f.first == field; });
  if (it == facts.end()) {
    std::string known;
    for (const auto& f : facts) {
      known += (known.empty() ? "" : ", ") + f.first;
    }
    throw invalid_input("unknown --check field '" + field + "' (known: " + known + ")");
  }
  const std::string& actual = it->second;
  auto a = as_number(actual);
  auto b = as_number(value);
  if (op == "==") {
    return actual == value;
  }
  if (op == "!=") {
    return actual != value;
  }
  if (!b) {
    throw invalid_input("ordering comparison needs a number, got '" + value + "'");
  }
  if (!a) {
    return false;  // e.g. length == none
  }
  if (op == "<") {
    return *a < *b;
  }
  if (op == "<=") {
    return *a <= *b;
  }
  if (op == ">") {
    return *a > *b;
  }
  return *a >= *b;
}

int render(Result r, std::ostream& out, bool json, const std::string& check) {
  std::optional<bool> matched;
  if (!check.empty()) {
    matched = evaluate_check(check, r.facts);
    r.lines.push_back("check: " + check + ": " + yes_no(*matched));
    r.json["check"] = {{"expression", check}, {"result", *matched}};
  }
  if (json) {
    out << r.json.dump(2) << '\n';
  } else {
    for (const auto& l : r.lines) {
      out << l << '\n';
    }
  }
  bool ok = matched ? *matched : r.truth;
  return ok ? 0 : 1;
}

std::size_t parse_cap(const std::string& text, const char* source) {
  static const std::regex digits(R"(\d{1,9})");
  if (!std::regex_match(text, digits)) {
    throw invalid_input(std::string(source) + " must be a positive integer, got '" + text + "'");
  }
  std::size_t cap = std::stoul(text);
  if (cap == 0) {
    throw invalid_input(std::string(source) + " must be positive");
  }
  return cap;
}

// ---- analyze ----

Result analyze_reset(const Automaton& automaton, SearchLimits limits) {
  Result r;
  r.json["task"] = "reset";
  std::optional<Word> w;
  const Alphabet* alphabet = nullptr;
  std::string label = "shortest reset word";
  if (const auto* dfa = std::get_if<Dfa>(&automaton)) {
    alphabet = &dfa->alphabet();
    w = shortest_reset_word(*dfa, limits);
  } else {
    const auto& nfa = std::get<Nfa>(automaton);
    alphabet = &nfa.alphabet();
    label = "shortest strong synchronizing word";
    w = shortest_strong_sync_word(nfa, limits);
  }
  r.truth = w.has_value();
  r.json["synchronizing"] = r.truth;
  if (w) {
    r.lines.push_back(label + ": " + show(*alphabet, *w));
    r.lines.push_back("length: " + std::to_string(w->size()));
    r.json["length"] = w->size();
    r.json["word"] = alphabet->format(*w);
    r.facts = {{"length", std::to_string(w->size())}, {"word", alphabet->format(*w)}, {"synchronizing", "true"}};
  } else {
    r.lines.push_back("not synchronizing");
    r.json["length"] = nullptr;
    r.json["word"] = nullptr;
    r.facts = {{"length", "none"}, {"word", "none"}, {"synchronizing", "false"}};
  }
  return r;
}

Result analyze_sync(const Automaton& automaton, SearchLimits limits) {
  Result r;
  r.json["task"] = "sync";
  if (const auto* dfa = std::get_if<Dfa>(&automaton)) {
    r.truth = is_synchronizing(*dfa);
  } else {
    r.truth = shortest_strong_sync_word(std::get<Nfa>(automaton), limits).has_value();
  }
  r.lines.push_back("synchronizing: " + yes_no(r.truth));
  r.json["synchronizing"] = r.truth;
  r.facts = {{"synchronizing", yes_no(r.truth)}};
  return r;
}

Result analyze_proper(const Automaton& automaton) {
  const auto* dfa = std::get_if<Dfa>(&automaton);
  if (dfa == nullptr) {
    throw unsupported_input("properness is defined for deterministic automata only");
  }
  ProperReport report = proper_report(*dfa);
  Result r;
  r.truth = report.proper();
  r.json["task"] = "proper";
  r.json["proper"] = r.truth;
  r.lines.push_back("proper: " + yes_no(r.truth));
  ordered_json restricted = ordered_json::object();
  for (Letter a = 0; a < dfa->letters(); ++a) {
    bool sync = report.restricted_synchronizing[a];
    const std::string& sym = dfa->alphabet().symbol(a);
    r.lines.push_back("without " + sym + ": " + (sync ? "synchronizing" : "not synchronizing"));
    restricted[sym] = sync;
  }
  r.json["without_letter_synchronizing"] = std::move(restricted);
  r.facts = {{"proper", yes_no(r.truth)}};
  return r;
}

Result analyze_zero(const Automaton& automaton) {
  std::optional<State> zero;
  std::size_t fixed = 0;
  if (const auto* dfa = std::get_if<Dfa>(&automaton)) {
    ZeroProbe probe = find_zero_state(*dfa);
    zero = probe.zero;
    fixed = probe.fixed_states;
  } else {
    const auto& nfa = std::get<Nfa>(automaton);
    for (State q = 0; q < nfa.size(); ++q) {
      bool absorbing = true;
      for (Letter a = 0; a < nfa.letters() && absorbing; ++a) {
        auto cell = nfa.next(q, a);
        absorbing = cell.size() == 1 && cell[0] == q;
      }
      if (absorbing) {
        ++fixed;
        zero = q;
      }
    }
    if (fixed != 1) {
      zero.reset();
    }
  }
  Result r;
  r.truth = zero.has_value();
  r.json["task"] = "zero";
  r.json["zero"] = zero ? ordered_json(*zero) : ordered_json(nullptr);
  r.json["fixed_states"] = fixed;
  if (zero) {
    r.lines.push_back("zero: " + std::to_string(*zero));
  } else if (fixed > 1) {
    r.lines.push_back("zero: none (" + std::to_string(fixed) + " states are fixed by every letter)");
  } else {
    r.lines.push_back("zero: none");
  }
  r.facts = {{"zero", zero ? std::to_string(*zero) : "none"}, {"fixed", std::to_string(fixed)}};
  return r;
}

// ---- words ----

Result words_unbordered(const Alphabet& alphabet, const Word& u) {
  Result r;
  Word border = longest_border(u);
  r.truth = border.empty();
  r.json["task"] = "unbordered";
  r.json["u"] = alphabet.format(u);
  r.json["unbordered"] = r.truth;
  r.json["border"] = alphabet.format(border);
  r.lines.push_back("unbordered: " + yes_no(r.truth));
  if (!r.truth) {
    r.lines.push_back("longest border: " + alphabet.format(border));
  }
  return r;
}

Result words_completable(const CodeSet& code, const Word& w) {
  Result r;
  r.truth = is_completable(w, code);
  r.json["task"] = "completable";
  r.json["word"] = code.alphabet().format(w);
  r.json["completable"] = r.truth;
  r.lines.push_back("completable: " + yes_no(r.truth));
  return r;
}

Result words_criterion(const Alphabet& alphabet, const Word& u, const Word& w) {
  CriterionTrace trace = incompletability_trace(alphabet, w, u);
  const Decomposition& d = trace.decomposition;
  Result r;
  r.truth = trace.incompletable;
  r.json["task"] = "incompletable-criterion";
  r.json["u"] = alphabet.format(u);
  r.json["k"] = u.size();
  r.json["word"] = alphabet.format(w);
  r.json["occurrences"] = d.occurrences();
  auto parts = ordered_json::array();
  std::string layout;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    parts.push_back(alphabet.format(d.parts[i]));
    layout += "[" + alphabet.format(d.parts[i]) + "]";
    if (i + 1 < d.parts.size()) {
      layout += " " + alphabet.format(u) + " ";
    }
  }
  r.json["parts"] = std::move(parts);
  r.json["partial_sums"] = trace.partial_sums;
  r.lines.push_back("u: " + alphabet.format(u) + " (k = " + std::to_string(u.size()) + ")");
  r.lines.push_back("word: " + show(alphabet, w));
  r.lines.push_back("occurrences of u: " + std::to_string(d.occurrences()));
  r.lines.push_back("decomposition: " + layout);
  std::string sums;
  for (auto s : trace.partial_sums) {
    sums += (sums.empty() ? "" : ", ") + std::to_string(s);
  }
  r.lines.push_back("partial sums: " + (sums.empty() ? std::string("(none)") : sums));
  if (trace.forbidden) {
    auto sets = ordered_json::array();
    for (std::size_t j = 1; j <= trace.forbidden->sets.size(); ++j) {
      r.lines.push_back("S_" + std::to_string(j) + " = " + set_text(trace.forbidden->at(j)));
      sets.push_back(trace.forbidden->at(j));
    }
    r.json["forbidden_sets"] = std::move(sets);
  } else {
    r.lines.push_back("forbidden sets: not defined (u occurs fewer than twice)");
    r.json["forbidden_sets"] = nullptr;
  }
  r.lines.push_back("incompletable: " + yes_no(r.truth));
  r.json["incompletable"] = r.truth;
  return r;
}

Result words_shortest_incompletable(const CodeSet& code, SearchLimits limits) {
  auto w = shortest_incompletable_word(code, limits);
  const Alphabet& alphabet = code.alphabet();
  Result r;
  r.truth = w.has_value();
  r.json["task"] = "shortest-incompletable";
  r.json["complete"] = !r.truth;
  if (w) {
    r.lines.push_back("shortest incompletable word: " + show(alphabet, *w));
    r.lines.push_back("length: " + std::to_string(w->size()));
    r.json["length"] = w->size();
    r.json["word"] = alphabet.format(*w);
  } else {
    r.lines.push_back("complete: every word is completable");
    r.json["length"] = nullptr;
    r.json["word"] = nullptr;
  }
  return r;
}

Result words_restivo(const Alphabet& alphabet, const Word& u, Letter pad, std::size_t k) {
  Word w = restivo_word(u, pad, k);
  Result r;
  r.json["task"] = "restivo";
  r.json["word"] = alphabet.format(w);
  r.json["length"] = w.size();
  r.lines.push_back(alphabet.format(w));
  r.lines.push_back("length: " + std::to_string(w.size()));
  return r;
}

Letter single_letter(const Alphabet& alphabet, const std::string& text) {
  Word w = alphabet.parse(text);
  if (w.size() != 1) {
    throw invalid_input("expected a single letter, got '" + text + "'");
  }
  return w[0];
}

void write_document(std::ostream& out, const Automaton& automaton, const std::string& name, const std::string& out_path,
                    const std::string& dot_path) {
  std::string json = write_json(to_document(automaton));
  if (out_path.empty() || out_path == "-") {
    out << json;
  } else {
    save_text(out_path, json);
  }
  if (!dot_path.empty()) {
    std::string dot = std::visit([&](const auto& a) { return to_dot(a, name); }, automaton);
    if (dot_path == "-") {
      out << dot;
    } else {
      save_text(dot_path, dot);
    }
  }
}

void require_grid(bool allowed, bool within, const std::string& what) {
  if (!within && !allowed) {
    throw invalid_input(what + " exceeds the default desk-scale grid; pass --allow-large to run it anyway");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing automata, semi-flower constructions and code completeness.", "synchro"};
  app.require_subcommand(1);
  std::string cap_text;
  auto* cap_opt = app.add_option("--state-cap", cap_text, "Largest automaton the subset searches accept (overrides SYNCHRO_STATE_CAP)");

  std::function<int()> action;
  auto limits = [&] {
    SearchLimits l;
    if (cap_opt->count() > 0) {
      l.state_cap = parse_cap(cap_text, "--state-cap");
    } else if (const char* env = std::getenv("SYNCHRO_STATE_CAP"); env != nullptr && *env != '\0') {
      l.state_cap = parse_cap(env, "SYNCHRO_STATE_CAP");
    }
    return l;
  };

  // build
  auto* build = app.add_subcommand("build", "Build an automaton and write its JSON document");
  build->require_subcommand(1);
  std::string out_path;
  std::string dot_path;
  std::string alphabet_text;
  std::string u_text;
  std::string code_text;
  std::size_t n = 0;
  bool complete_zero = false;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "JSON output file (default: standard output)");
    sub->add_option("--dot", dot_path, "Also write Graphviz DOT to this file ('-' for standard output)");
  };
  auto* fhat_ku = build->add_subcommand("fhat-ku", "The 2k-state automaton F-hat(k, u)");
  auto* fhat_ku_alpha = fhat_ku->add_option("--alphabet", alphabet_text, "Alphabet, e.g. ab (default: letters of u)");
  fhat_ku->add_option("--u", u_text, "Unbordered word u of length k >= 2")->required();
  add_output(fhat_ku);
  fhat_ku->callback([&] {
    action = [&] {
      std::optional<std::string> given;
      if (fhat_ku_alpha->count() > 0) {
        given = alphabet_text;
      }
      Alphabet alphabet = alphabet_for(given, {u_text});
      write_document(out, build_fhat_k_u(alphabet, alphabet.parse(u_text)), "fhat_" + u_text, out_path, dot_path);
      return 0;
    };
  });
  auto* chain = build->add_subcommand("chain", "The n-state chain automaton with zero over n-1 letters");
  chain->add_option("--n", n, "Number of states, n >= 3")->required();
  add_output(chain);
  chain->callback([&] {
    action = [&] {
      write_document(out, build_chain_zero(n), "chain_" + std::to_string(n), out_path, dot_path);
      return 0;
    };
  });
  auto code_for = [&](CLI::Option* alpha_opt) {
    std::optional<std::string> given;
    if (alpha_opt->count() > 0) {
      given = alphabet_text;
    }
    return parse_code_argument(code_text, given);
  };
  auto* semiflower = build->add_subcommand("semiflower", "The semi-flower automaton F(X) of a finite set X");
  semiflower->add_option("--code", code_text, "Code-set file, \"A^k minus u\", or a comma-separated word list")
      ->required();
  auto* semiflower_alpha = semiflower->add_option("--alphabet", alphabet_text, "Alphabet (default: inferred)");
  semiflower->add_flag("--complete-zero", complete_zero, "Send undefined transitions to a new zero state");
  add_output(semiflower);
  semiflower->callback([&] {
    action = [&] {
      Nfa flower = semi_flower(code_for(semiflower_alpha));
      write_document(out, complete_zero ? complete_with_zero(flower) : flower, "semiflower", out_path, dot_path);
      return 0;
    };
  });
  auto* fhat_x = build->add_subcommand("fhat-x", "F(X) completed with a zero state");
  fhat_x->add_option("--code", code_text, "Code-set file, \"A^k minus u\", or a comma-separated word list")->required();
  auto* fhat_x_alpha = fhat_x->add_option("--alphabet", alphabet_text, "Alphabet (default: inferred)");
  add_output(fhat_x);
  fhat_x->callback([&] {
    action = [&] {
      write_document(out, fhat(code_for(fhat_x_alpha)), "fhat_x", out_path, dot_path);
      return 0;
    };
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Analyze an automaton JSON document");
  std::string task;
  std::string in_path;
  std::string check;
  bool json = false;
  analyze->add_option("task", task, "reset | sync | proper | zero")
      ->required()
      ->check(CLI::IsMember({"reset", "sync", "proper", "zero"}));
  analyze->add_option("file", in_path, "Automaton JSON document")->required();
  analyze->add_option("--check", check, "Predicate such as 'length == 11' or 'true'; exit 0 iff it holds");
  analyze->add_flag("--json", json, "Machine-readable report");
  analyze->callback([&] {
    action = [&] {
      Automaton automaton = load_automaton(in_path);
      Result r = task == "reset"    ? analyze_reset(automaton, limits())
                 : task == "sync"   ? analyze_sync(automaton, limits())
                 : task == "proper" ? analyze_proper(automaton)
                                    : analyze_zero(automaton);
      return render(std::move(r), out, json, check);
    };
  });

  // words
  auto* words = app.add_subcommand("words", "Word and code-set computations");
  words->require_subcommand(1);
  std::string word_text;
  std::string pad_text;
  std::size_t k = 0;
  auto words_alphabet = [&](CLI::Option* opt, std::vector<std::string> texts) {
    std::optional<std::string> given;
    if (opt->count() > 0) {
      given = alphabet_text;
    }
    return alphabet_for(given, texts);
  };
  auto* unbordered = words->add_subcommand("unbordered", "Is u unbordered?");
  unbordered->add_option("--u", u_text, "The word u")->required();
  auto* unbordered_alpha = unbordered->add_option("--alphabet", alphabet_text, "Alphabet (default: letters of u)");
  unbordered->add_flag("--json", json, "Machine-readable report");
  unbordered->callback([&] {
    action = [&] {
      Alphabet a = words_alphabet(unbordered_alpha, {u_text});
      return render(words_unbordered(a, a.parse(u_text)), out, json, "");
    };
  });
  auto* completable = words->add_subcommand("completable", "Is the word a factor of some word of X*?");
  completable->add_option("--code", code_text, "Code-set file, \"A^k minus u\", or a word list")->required();
  completable->add_option("--word", word_text, "The word")->required();
  auto* completable_alpha = completable->add_option("--alphabet", alphabet_text, "Alphabet (default: inferred)");
  completable->add_flag("--json", json, "Machine-readable report");
  completable->callback([&] {
    action = [&] {
      CodeSet code = code_for(completable_alpha);
      return render(words_completable(code, code.alphabet().parse(word_text)), out, json, "");
    };
  });
  auto* criterion = words->add_subcommand("incompletable-criterion", "Decide incompletability in A^k minus {u}");
  criterion->add_option("--u", u_text, "Unbordered u, k = |u|")->required();
  criterion->add_option("--word", word_text, "The word")->required();
  auto* criterion_alpha = criterion->add_option("--alphabet", alphabet_text, "Alphabet (default: letters of u and word)");
  criterion->add_flag("--json", json, "Machine-readable report");
  criterion->callback([&] {
    action = [&] {
      Alphabet a = words_alphabet(criterion_alpha, {u_text, word_text});
      return render(words_criterion(a, a.parse(u_text), a.parse(word_text)), out, json, "");
    };
  });
  auto* shortest = words->add_subcommand("shortest-incompletable", "Shortest incompletable word of X");
  shortest->add_option("--code", code_text, "Code-set file, \"A^k minus u\", or a word list")->required();
  auto* shortest_alpha = shortest->add_option("--alphabet", alphabet_text, "Alphabet (default: inferred)");
  shortest->add_flag("--json", json, "Machine-readable report");
  shortest->callback([&] {
    action = [&] { return render(words_shortest_incompletable(code_for(shortest_alpha), limits()), out, json, ""); };
  });
  auto* restivo = words->add_subcommand("restivo", "The word (u pad)^{k-1} u");
  restivo->add_option("--u", u_text, "The word u")->required();
  restivo->add_option("--pad", pad_text, "Padding letter")->required();
  auto* restivo_k = restivo->add_option("--k", k, "Repetition parameter (default: |u|)");
  auto* restivo_alpha = restivo->add_option("--alphabet", alphabet_text, "Alphabet (default: letters of u and pad)");
  restivo->add_flag("--json", json, "Machine-readable report");
  restivo->callback([&] {
    action = [&] {
      Alphabet a = words_alphabet(restivo_alpha, {u_text, pad_text});
      Word u = a.parse(u_text);
      std::size_t reps = restivo_k->count() > 0 ? k : u.size();
      return render(words_restivo(a, u, single_letter(a, pad_text), reps), out, json, "");
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Compare measured extremal lengths with their formulas");
  verify->require_subcommand(1);
  std::string k_text = "2..6";
  std::string sizes_text = "2,3";
  std::string n_text = "3..7";
  std::string us_text;
  std::size_t max_len = 14;
  bool allow_large = false;
  auto verify_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Machine-readable report");
    sub->add_flag("--allow-large", allow_large, "Permit grids beyond the default desk-scale ranges");
  };
  auto emit_report = [&](const VerificationReport& report) {
    out << (json ? report.to_json() : report.to_text());
    return report.exit_code();
  };
  auto* theorem2 = verify->add_subcommand("theorem2", "F-hat(k, u): shortest reset word length k^2 + k - 1");
  theorem2->add_option("--k", k_text, "Values of k, e.g. 2..6");
  theorem2->add_option("--alphabet-sizes", sizes_text, "Alphabet sizes, e.g. 2,3");
  verify_common(theorem2);
  theorem2->callback([&] {
    action = [&] {
      auto ks = parse_number_list(k_text);
      auto sizes = parse_number_list(sizes_text);
      require_grid(allow_large, *std::max_element(ks.begin(), ks.end()) <= 6, "--k");
      require_grid(allow_large, *std::max_element(sizes.begin(), sizes.end()) <= 3, "--alphabet-sizes");
      return emit_report(verify_theorem2(ks, sizes, limits()));
    };
  });
  auto* prop2 = verify->add_subcommand("prop2", "A^k minus {u}: shortest incompletable word length k^2 + k - 1");
  auto* prop2_u = prop2->add_option("--u", us_text, "Comma-separated words u (default grid: ab, aab, abb over 2 letters, ab over 3)");
  auto* prop2_sizes = prop2->add_option("--alphabet-sizes", sizes_text, "Alphabet sizes");
  verify_common(prop2);
  prop2->callback([&] {
    action = [&] {
      std::vector<Prop2Case> cases;
      if (prop2_u->count() == 0 && prop2_sizes->count() == 0) {
        cases = {{2, "ab"}, {2, "aab"}, {2, "abb"}, {3, "ab"}};
      } else {
        std::string us = prop2_u->count() > 0 ? us_text : "ab,aab,abb";
        for (auto m : parse_number_list(sizes_text)) {
          for (const auto& u : parse_word_list(us)) {
            cases.push_back({m, u});
          }
        }
      }
      for (const auto& c : cases) {
        require_grid(allow_large, c.u.size() <= 3 && c.alphabet_size <= 3, "u = " + c.u);
      }
      return emit_report(verify_prop2(cases, limits()));
    };
  });
  auto* fig1 = verify->add_subcommand("fig1", "Chain automaton: shortest reset word length n(n-1)/2");
  fig1->add_option("--n", n_text, "Values of n, e.g. 3..7");
  verify_common(fig1);
  fig1->callback([&] {
    action = [&] {
      auto ns = parse_number_list(n_text);
      require_grid(allow_large, *std::max_element(ns.begin(), ns.end()) <= 7, "--n");
      return emit_report(verify_fig1(ns, limits()));
    };
  });
  auto* equivalence = verify->add_subcommand("equivalence", "Criterion, flower automaton and F-hat(k, u) agree");
  auto* equivalence_u = equivalence->add_option("--u", us_text, "Comma-separated words u (default: ab,aab)");
  auto* equivalence_alpha = equivalence->add_option("--alphabet", alphabet_text, "Alphabet (default: ab)");
  equivalence->add_option("--max-len", max_len, "Longest word length checked");
  verify_common(equivalence);
  equivalence->callback([&] {
    action = [&] {
      std::string us = equivalence_u->count() > 0 ? us_text : "ab,aab";
      Alphabet a = parse_alphabet(equivalence_alpha->count() > 0 ? alphabet_text : "ab");
      require_grid(allow_large, max_len <= 16 && a.size() <= 3, "--max-len");
      return emit_report(verify_equivalence(a, parse_word_list(us), max_len));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace synchro::cli
