#include "doctest_setup.hpp"

#include <obskit/cli.hpp>

#include <sstream>

using namespace obskit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 5 && a.substr(a.size() - 5) == ".json") a = std::string(OBSKIT_DATA_DIR) + "/" + a;
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", "g3.json", "leq", "a -> bot", "c"});
  CHECK(r.code == 0);
  CHECK(r.out == "HOLDS\n");

  r = run({"check", "g3.json", "leq", "top", "a | (a -> bot)", "--witness"});
  CHECK(r.code == 1);
  CHECK(r.out == "FAILS\nwitness: {b}\n");

  r = run({"check", "omega.json", "equiv", "(n1 -> bot) -> bot", "n1"});
  CHECK(r.code == 0);
  CHECK(r.out == "HOLDS\n");

  r = run({"check", "bb.json", "leq", "0@1 & (0@1 -> 0@2)", "0@2"});
  CHECK(r.code == 0);

  r = run({"check", "g3.json", "equiv", "a", "a | a & b", "--engine", "lattice"});
  CHECK(r.code == 0);
}

TEST_CASE("check engine override") {
  for (const char* engine : {"fan", "oracle", "auto"}) {
    auto r = run({"check", "g3.json", "leq", "top", "a | (a -> bot)", "--engine", engine});
    CHECK(r.code == 1);
  }
  auto r = run({"check", "g3.json", "leq", "a -> bot", "c", "--engine", "lattice"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  r = run({"check", "g3.json", "leq", "a", "c", "--engine", "anticlique"});
  CHECK(r.code == 2);
  r = run({"check", "omega.json", "leq", "n1", "n1", "--engine", "fan"});
  CHECK(r.code == 2);
  r = run({"check", "g3.json", "leq", "a", "c", "--engine", "magic"});
  CHECK(r.code == 2);
}

TEST_CASE("check budgets") {
  auto r = run({"check", "g3.json", "leq", "(a | b) & (b | c) & (a | c)", "a", "--max-bracket", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
  r = run({"check", "bb.json", "leq", "(0@1 | 1@2) & (1@1 | 0@2) & (0@1 | 0@2)", "0@1",
           "--max-vectors", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("normalize") {
  CHECK(run({"normalize", "g3.json", "a -> bot"}).out == "c\n");
  CHECK(run({"normalize", "omega.json", "n1 | (n1 -> bot)"}).out == "COFIN{}\n");
  CHECK(run({"normalize", "g3.json", "bot"}).out == "bot\n");
  CHECK(run({"normalize", "g3.json", "(a | b) & c"}).out == "b & c\n");
  CHECK(run({"normalize", "bb.json", "0@1 -> 0@2"}).out == "{[1: 1], [2: 0]}\n");
  CHECK(run({"normalize", "g3.json", "a -> bot", "--engine", "oracle"}).out == "{{b,c}, {c}}\n");
}

TEST_CASE("oracle") {
  CHECK(run({"oracle", "g3.json", "a & b"}).out == "{{a,b}}\n");
  CHECK(run({"oracle", "g3.json", "top"}).out == "{{}, {a}, {a,b}, {b}, {b,c}, {c}}\n");
  auto r = run({"oracle", "omega.json", "n1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("info") {
  CHECK(run({"info", "g3.json"}).out == "kind: finite\natoms: 3\nfan: yes\n");
  CHECK(run({"info", "omega.json"}).out == "kind: anticlique\natoms: unbounded\nfan: no\n");
  CHECK(run({"info", "mixed.json"}).out == "kind: product (2 components)\natoms: unbounded\nfan: no\n");
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "g3.json", "implies", "a", "b"}).code == 2);
  CHECK(run({"check", "g3.json", "leq", "a"}).code == 2);
  CHECK(run({"check", "missing.json", "leq", "a", "b"}).code == 2);
  auto r = run({"check", "g3.json", "leq", "a &", "b"});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset") != std::string::npos);
  r = run({"check", "g3.json", "leq", "a", "zz"});
  CHECK(r.code == 2);
  CHECK(r.err == "error: atom `zz` is not in the graph\n");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"check", "g3.json", "equiv", "top", "a | (a -> bot)", "--witness"},
      {"normalize", "mixed.json", "(0@b | v3@n) -> v3@n"},
      {"normalize", "g3.json", "(a -> b) -> c"},
      {"oracle", "bb.json", "0@1 -> 0@2"},
      {"info", "bb.json"},
  };
  for (const auto& c : commands) {
    const Run first = run(c), second = run(c);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
