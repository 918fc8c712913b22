#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "support/property.hpp"
#include "synchro/cli/code_argument.hpp"
#include "synchro/cli/commands.hpp"
#include "synchro/cli/document.hpp"
#include "synchro/cli/verify.hpp"
#include "synchro/constructions.hpp"
#include "synchro/error.hpp"
#include "synchro/sync.hpp"

using namespace synchro;
using namespace synchro::cli;

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SYNCHRO_FIXTURES) + "/" + name; }

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "synchro_test_cli";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

// Clears SYNCHRO_STATE_CAP for the test and restores nothing: tests set it explicitly.
struct CapEnv {
  explicit CapEnv(const char* value) {
    if (value) {
      setenv("SYNCHRO_STATE_CAP", value, 1);
    } else {
      unsetenv("SYNCHRO_STATE_CAP");
    }
  }
  ~CapEnv() { unsetenv("SYNCHRO_STATE_CAP"); }
};

StateSet image_of(const Automaton& a, const Word& w) {
  return std::visit(
      [&](const auto& x) { return image(x, StateSet::full(x.size()), w); }, a);
}

std::size_t letters_of(const Automaton& a) {
  return std::visit([](const auto& x) { return x.letters(); }, a);
}

void check_round_trip(const Automaton& original, gen::Rng& rng) {
  const std::string text = write_json(to_document(original));
  const Automaton reloaded = to_automaton(read_json(text));
  CHECK(write_json(to_document(reloaded)) == text);
  const std::size_t m = letters_of(original);
  for (int i = 0; i < 100; ++i) {
    const Word w = rng.word(m, rng.between(0, 12));
    REQUIRE(image_of(original, w) == image_of(reloaded, w));
  }
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("built automata reload with identical images on 100 random words") {
    gen::Rng rng(11);
    const Alphabet ab = Alphabet::from_chars("ab");
    check_round_trip(build_fhat_k_u(ab, ab.parse("aab")), rng);
    check_round_trip(build_fhat_k_u(Alphabet::from_chars("abc"), Word{0, 0, 1, 2}), rng);
    check_round_trip(build_chain_zero(6), rng);
    const CodeSet code = CodeSet::parse(read_text(fixture("codes.txt")));
    check_round_trip(semi_flower(code), rng);
    check_round_trip(fhat(code), rng);
    check_round_trip(fhat(CodeSet::all_but(ab, ab.parse("abb"))), rng);
  }

  TEST_CASE("random automata round-trip") {
    gen::Rng rng(12);
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = rng.between(1, 9);
      const std::size_t m = rng.between(1, 3);
      check_round_trip(rng.dfa(n, m, rng.coin()), rng);
      check_round_trip(rng.nfa(n, m, 0.3), rng);
    }
  }

  TEST_CASE("keys are written in a stable order") {
    const std::string text = write_json(to_document(complete_with_zero(semi_flower(CodeSet::parse("a\nab\n")))));
    const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    CHECK(pos("kind") < pos("alphabet"));
    CHECK(pos("alphabet") < pos("states"));
    CHECK(pos("states") < pos("initial"));
    CHECK(pos("initial") < pos("finals"));
    CHECK(pos("finals") < pos("zero"));
    CHECK(pos("zero") < pos("transitions"));
  }

  TEST_CASE("invalid documents are rejected") {
    const char* bad[] = {
        "not json",
        "[1, 2]",
        R"({"kind": "pda", "alphabet": ["a"], "states": 1, "transitions": [[0]]})",
        R"({"kind": "dfa", "alphabet": ["a"], "states": 2, "transitions": [[0]]})",
        R"({"kind": "dfa", "alphabet": ["a", "b"], "states": 1, "transitions": [[0]]})",
        R"({"kind": "dfa", "alphabet": ["a"], "states": 1, "transitions": [[3]]})",
        R"({"kind": "dfa", "alphabet": ["a"], "states": 1, "transitions": [[-1]]})",
        R"({"kind": "dfa", "alphabet": ["a", "a"], "states": 1, "transitions": [[0, 0]]})",
        R"({"kind": "dfa", "alphabet": ["a"], "states": 2, "zero": 0, "transitions": [[1], [1]]})",
        R"({"kind": "nfa", "alphabet": ["a"], "states": 2, "zero": 1, "transitions": [[[1]], [[0, 1]]]})",
        R"({"kind": "nfa", "alphabet": ["a"], "states": 1, "transitions": [[0]]})",
        R"({"kind": "nfa", "alphabet": ["a"], "states": 1, "initial": 4, "transitions": [[[0]]]})",
        R"({"alphabet": ["a"], "states": 1, "transitions": [[0]]})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(read_json(text), invalid_input);
    }
  }

  TEST_CASE("multi-character symbols survive") {
    const std::string text = write_json(to_document(build_chain_zero(4)));
    CHECK(text.find("\"a3\"") != std::string::npos);
    const auto a = to_automaton(read_json(text));
    CHECK(std::get<Dfa>(a).alphabet().symbol(2) == "a3");
  }
}

TEST_SUITE("arguments") {
  TEST_CASE("number lists") {
    CHECK(parse_number_list("2..6") == std::vector<std::size_t>{2, 3, 4, 5, 6});
    CHECK(parse_number_list("2,3") == std::vector<std::size_t>{2, 3});
    CHECK(parse_number_list("4") == std::vector<std::size_t>{4});
    CHECK(parse_number_list("2..3,7") == std::vector<std::size_t>{2, 3, 7});
    CHECK_THROWS_AS(parse_number_list("6..2"), invalid_input);
    CHECK_THROWS_AS(parse_number_list("x"), invalid_input);
    CHECK_THROWS_AS(parse_number_list(""), invalid_input);
  }

  TEST_CASE("code arguments") {
    const CodeSet x = parse_code_argument("A^2 minus ab", std::nullopt);
    CHECK(x.to_text() == CodeSet::parse("aa\nba\nbb\n").to_text());
    CHECK(parse_code_argument("A^2 \\ ab", std::string("abc")).words().size() == 8);
    CHECK(parse_code_argument("aa,ab, b", std::nullopt).words().size() == 3);
    CHECK(parse_code_argument(fixture("codes.txt"), std::nullopt).words().size() == 5);
    CHECK_THROWS_AS(parse_code_argument("A^3 minus ab", std::nullopt), invalid_input);
    CHECK_THROWS_AS(parse_code_argument("missing/codes.txt", std::nullopt), invalid_input);
  }

  TEST_CASE("alphabet arguments") {
    CHECK(parse_alphabet("ab").size() == 2);
    CHECK(parse_alphabet("a1 a2 a3").symbol(2) == "a3");
    CHECK(parse_alphabet("x,y").symbol(1) == "y");
    CHECK(alphabet_for(std::nullopt, {"ba", "ca"}).symbols() == std::vector<std::string>{"a", "b", "c"});
  }
}

TEST_SUITE("commands") {
  TEST_CASE("build fhat-ku writes a 4-state dfa") {
    const Outcome r = call({"build", "fhat-ku", "--alphabet", "ab", "--u", "ab"});
    CHECK(r.code == 0);
    const Automaton a = to_automaton(read_json(r.out));
    REQUIRE(std::holds_alternative<Dfa>(a));
    CHECK(std::get<Dfa>(a).size() == 4);
    CHECK(std::get<Dfa>(a).zero() == State{0});
  }

  TEST_CASE("build chain writes a 5-state, 4-letter dfa") {
    const Outcome r = call({"build", "chain", "--n", "5"});
    CHECK(r.code == 0);
    const Dfa d = std::get<Dfa>(to_automaton(read_json(r.out)));
    CHECK(d.size() == 5);
    CHECK(d.letters() == 4);
  }

  TEST_CASE("build semiflower with zero matches the library and writes DOT") {
    const fs::path json = scratch_dir() / "flower.json";
    const fs::path dot = scratch_dir() / "flower.dot";
    const Outcome r = call({"build", "semiflower", "--code", fixture("codes.txt"), "--complete-zero", "--out",
                            json.string(), "--dot", dot.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const Nfa n = std::get<Nfa>(load_automaton(json.string()));
    const Nfa expected = fhat(CodeSet::parse(read_text(fixture("codes.txt"))));
    CHECK(n.size() == 5);
    CHECK(n.cells() == expected.cells());
    CHECK(n.zero() == State{4});
    CHECK(read_text(dot.string()).rfind("digraph", 0) == 0);
  }

  TEST_CASE("build rejects invalid parameters with exit 2") {
    Outcome r = call({"build", "fhat-ku", "--alphabet", "ab", "--u", "aba"});
    CHECK(r.code == 2);
    CHECK(r.err.find("u is bordered: border 'a'") != std::string::npos);
    CHECK(call({"build", "chain", "--n", "2"}).code == 2);
    CHECK(call({"build", "chain", "--n", "five"}).code == 2);
    CHECK(call({"build", "fhat-ku", "--alphabet", "ab", "--u", "abc"}).code == 2);
    CHECK(call({"build", "fhat-ku"}).code == 2);
    CHECK(call({"build"}).code == 2);
  }

  TEST_CASE("analyze reset and proper on fhat-ku(3, aab)") {
    const fs::path path = scratch_dir() / "aab.json";
    REQUIRE(call({"build", "fhat-ku", "--alphabet", "ab", "--u", "aab", "--out", path.string()}).code == 0);
    Outcome r = call({"analyze", "reset", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "shortest reset word: aabaaabaaab\nlength: 11\n");
    r = call({"analyze", "proper", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("proper: true\n", 0) == 0);
    CHECK(r.out.find("without a: not synchronizing") != std::string::npos);
    r = call({"analyze", "zero", path.string()});
    CHECK(r.out == "zero: 0\n");
    CHECK(call({"analyze", "sync", path.string()}).out == "synchronizing: true\n");

    const auto j = nlohmann::json::parse(call({"analyze", "reset", path.string(), "--json"}).out);
    CHECK(j["length"] == 11);
    CHECK(j["word"] == "aabaaabaaab");
  }

  TEST_CASE("--check predicates") {
    const fs::path path = scratch_dir() / "ab.json";
    REQUIRE(call({"build", "fhat-ku", "--u", "ab", "--out", path.string()}).code == 0);
    CHECK(call({"analyze", "reset", path.string(), "--check", "length == 5"}).code == 0);
    CHECK(call({"analyze", "reset", path.string(), "--check", "5"}).code == 0);
    CHECK(call({"analyze", "reset", path.string(), "--check", "length < 5"}).code == 1);
    CHECK(call({"analyze", "reset", path.string(), "--check", "word == abaab"}).code == 0);
    CHECK(call({"analyze", "proper", path.string(), "--check", "false"}).code == 1);
    CHECK(call({"analyze", "zero", path.string(), "--check", "zero == 0"}).code == 0);
    CHECK(call({"analyze", "reset", path.string(), "--check", "color == red"}).code == 2);
    CHECK(call({"analyze", "reset", path.string(), "--check", "length <= many"}).code == 2);
  }

  TEST_CASE("a non-synchronizing automaton") {
    Outcome r = call({"analyze", "reset", fixture("two_sinks.json")});
    CHECK(r.out == "not synchronizing\n");
    CHECK(r.code == 1);
    r = call({"analyze", "reset", fixture("two_sinks.json"), "--check", "length == 3"});
    CHECK(r.code == 1);
    CHECK(call({"analyze", "sync", fixture("two_sinks.json")}).code == 1);
    CHECK(call({"analyze", "proper", fixture("two_sinks.json")}).code == 2);
    r = call({"analyze", "zero", fixture("two_sinks.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("2 states are fixed") != std::string::npos);
  }

  TEST_CASE("strong synchronization on an nfa with zero") {
    const fs::path path = scratch_dir() / "xab.json";
    REQUIRE(call({"build", "fhat-x", "--code", "A^2 minus ab", "--out", path.string()}).code == 0);
    const Outcome r = call({"analyze", "reset", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "shortest strong synchronizing word: abaab\nlength: 5\n");
    const fs::path complete = scratch_dir() / "complete.json";
    REQUIRE(call({"build", "fhat-x", "--code", fixture("codes.txt"), "--out", complete.string()}).code == 0);
    CHECK(call({"analyze", "sync", complete.string()}).code == 1);
    const fs::path plain = scratch_dir() / "plain.json";
    REQUIRE(call({"build", "semiflower", "--code", "A^2 minus ab", "--out", plain.string()}).code == 0);
    CHECK(call({"analyze", "reset", plain.string()}).code == 2);
  }

  TEST_CASE("state cap from the environment and the flag") {
    const fs::path path = scratch_dir() / "chain7.json";
    REQUIRE(call({"build", "chain", "--n", "7", "--out", path.string()}).code == 0);
    {
      CapEnv env("6");
      const Outcome r = call({"analyze", "reset", path.string()});
      CHECK(r.code == 2);
      CHECK(r.err.find("state cap exceeded") != std::string::npos);
      CHECK(call({"--state-cap", "7", "analyze", "reset", path.string()}).code == 0);
    }
    {
      CapEnv env("lots");
      CHECK(call({"analyze", "reset", path.string()}).code == 2);
    }
    CapEnv env(nullptr);
    CHECK(call({"--state-cap", "3", "analyze", "reset", path.string()}).code == 2);
    CHECK(call({"analyze", "reset", path.string()}).code == 0);
  }

  TEST_CASE("analyze input errors") {
    CHECK(call({"analyze", "reset", (scratch_dir() / "absent.json").string()}).code == 2);
    CHECK(call({"analyze", "color", fixture("two_sinks.json")}).code == 2);
    CHECK(call({"analyze", "reset", fixture("codes.txt")}).code == 2);
  }

  TEST_CASE("words tasks") {
    Outcome r = call({"words", "restivo", "--u", "ab", "--pad", "a"});
    CHECK(r.code == 0);
    CHECK(r.out == "abaab\nlength: 5\n");
    r = call({"words", "restivo", "--u", "aab", "--pad", "a"});
    CHECK(r.out == "aabaaabaaab\nlength: 11\n");
    r = call({"words", "shortest-incompletable", "--code", "A^2 minus ab"});
    CHECK(r.code == 0);
    CHECK(r.out == "shortest incompletable word: abaab\nlength: 5\n");
    CHECK(call({"words", "shortest-incompletable", "--code", fixture("codes.txt")}).code == 1);
    CHECK(call({"words", "unbordered", "--u", "aab"}).code == 0);
    r = call({"words", "unbordered", "--u", "abab"});
    CHECK(r.code == 1);
    CHECK(r.out == "unbordered: false\nlongest border: ab\n");
    CHECK(call({"words", "completable", "--code", "A^2 minus ab", "--word", "abab"}).code == 0);
    CHECK(call({"words", "completable", "--code", "A^2 minus ab", "--word", "abaab"}).code == 1);
    CHECK(call({"words", "restivo", "--u", "ab", "--pad", "ab"}).code == 2);
  }

  TEST_CASE("criterion trace") {
    Outcome r = call({"words", "incompletable-criterion", "--u", "ab", "--word", "abab"});
    CHECK(r.code == 1);
    CHECK(r.out.find("S_1 = {0}\n") != std::string::npos);
    CHECK(r.out.find("decomposition: [] ab [] ab []\n") != std::string::npos);
    CHECK(r.out.find("incompletable: false\n") != std::string::npos);
    r = call({"words", "incompletable-criterion", "--u", "aab", "--word", "aabaaabaaab"});
    CHECK(r.code == 0);
    CHECK(r.out.find("partial sums: 1, 2\n") != std::string::npos);
    CHECK(r.out.find("S_1 = {0, 1, 2}\n") != std::string::npos);
    r = call({"words", "incompletable-criterion", "--u", "ab", "--word", "aab"});
    CHECK(r.code == 1);
    CHECK(r.out.find("forbidden sets: not defined") != std::string::npos);
    CHECK(call({"words", "incompletable-criterion", "--u", "aba", "--word", "ab"}).code == 2);
    const auto j = nlohmann::json::parse(
        call({"words", "incompletable-criterion", "--u", "ab", "--word", "abab", "--json"}).out);
    CHECK(j["forbidden_sets"][0] == nlohmann::json::array({0}));
  }

  TEST_CASE("help and parse errors") {
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"verify", "theorem2", "--help"}).code == 0);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"words", "restivo", "--u", "ab"}).code == 2);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("F-hat reset-length grid") {
    const Outcome r = call({"verify", "theorem2", "--k", "2..6", "--alphabet-sizes", "2,3", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["pass"] == 10);
    std::vector<std::size_t> expected;
    for (const auto& p : j["points"]) {
      CHECK(p["expected"] == p["measured"]);
      if (p["params"]["alphabet"] == "2") {
        expected.push_back(p["expected"].get<std::size_t>());
      }
    }
    CHECK(expected == std::vector<std::size_t>{5, 11, 19, 29, 41});
  }

  TEST_CASE("chain, incompletable-length and equivalence grids") {
    Outcome r = call({"verify", "fig1", "--n", "3..7", "--json"});
    CHECK(r.code == 0);
    std::vector<std::size_t> expected;
    const auto report = nlohmann::json::parse(r.out);
    for (const auto& p : report["points"]) {
      expected.push_back(p["measured"].get<std::size_t>());
    }
    CHECK(expected == std::vector<std::size_t>{3, 6, 10, 15, 21});
    CHECK(call({"verify", "prop2"}).code == 0);
    CHECK(call({"verify", "prop2", "--u", "ab,aab", "--alphabet-sizes", "2"}).code == 0);
    CHECK(call({"verify", "equivalence", "--u", "ab", "--max-len", "14"}).code == 0);
  }

  TEST_CASE("large grids need --allow-large") {
    CHECK(call({"verify", "theorem2", "--k", "2..7"}).code == 2);
    CHECK(call({"verify", "fig1", "--n", "8"}).code == 2);
    CHECK(call({"verify", "equivalence", "--max-len", "20"}).code == 2);
    CHECK(call({"verify", "fig1", "--n", "8", "--allow-large"}).code == 0);
  }

  TEST_CASE("cap overruns are reported as skipped, exit 2") {
    CapEnv env(nullptr);
    const Outcome r = call({"--state-cap", "5", "verify", "fig1", "--json"});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["pass"] == 3);
    CHECK(j["summary"]["skipped"] == 2);
    CHECK(j["points"][3]["status"] == "skipped");
  }

  TEST_CASE("a mismatch exits 1") {
    VerificationReport report{"demo", "length", {}};
    GridPoint p;
    p.expected = 3;
    p.measured = 4;
    p.status = PointStatus::fail;
    report.points.push_back(p);
    CHECK(report.exit_code() == 1);
    CHECK(report.to_text().find("fail") != std::string::npos);
  }

  TEST_CASE("reports are byte-for-byte deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "theorem2"},
             {"verify", "theorem2", "--json"},
             {"verify", "prop2", "--json"},
             {"verify", "fig1"},
             {"verify", "equivalence", "--u", "aab", "--max-len", "10", "--json"},
             {"build", "fhat-x", "--code", "A^3 minus abb"},
             {"words", "incompletable-criterion", "--u", "aab", "--word", "aabaabbaab", "--json"}}) {
      const Outcome first = call(args);
      const Outcome second = call(args);
      CHECK(first.out == second.out);
      CHECK(first.code == second.code);
    }
  }
}
