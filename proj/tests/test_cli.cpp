#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "forestsat/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = forestsat::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("construct then check") {
  const Result g = run({"construct", "p6-extremal", "--n", "16", "--t", "2"});
  CHECK(g.code == 0);
  CHECK(g.out.size() == 1 + 20 + 1);  // order byte, C(16,2)/6 data bytes, newline
  const Result c = run({"check", "--spec", "P6+2P2"}, g.out);
  CHECK(c.code == 0);
  CHECK(c.out == "Saturated, 24 edges\n");
}

TEST_CASE("construct with description") {
  const Result g = run({"construct", "g-star", "--n", "23", "--describe"});
  CHECK(g.code == 0);
  CHECK(has(g.out, "\nT*13+T\n"));
}

TEST_CASE("satsearch for two disjoint edges on four vertices") {
  const Result r = run({"satsearch", "--n", "4", "--spec", "2P2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "min=3; extremal: K3+K1, S4"));
}

TEST_CASE("check reports refutations with a witness") {
  Result r = run({"check", "--spec", "2P2"}, "D??\n");  // empty graph on 5 vertices
  CHECK(r.code == 1);
  CHECK(r.out == "NonSaturatingEdge 0-1, 0 edges\n");
  r = run({"check", "--spec", "P3"}, "Bw\n");
  CHECK(r.code == 1);
  CHECK(has(r.out, "ContainsH, 3 edges: path "));
  r = run({"check", "--spec", "P3", "--json"}, "Bw\n");
  CHECK(r.code == 1);
  CHECK(has(r.out, "\"status\":\"ContainsH\""));
}

TEST_CASE("contains") {
  Result r = run({"contains", "--spec", "P4"}, "Bw\nCr\n");
  CHECK(r.code == 1);
  CHECK(has(r.out, "absent"));
  r = run({"contains", "--spec", "2P2"}, "Cr\n");
  CHECK(r.code == 0);
  CHECK(has(r.out, "present: pair "));
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Result r = run({"check", "--spec", "Q7"}, "Bw\n");
  CHECK(r.code == 2);
  CHECK(has(r.err, "column 1"));
  r = run({"check", "--spec", "P3"}, "Bw\nB!\n");
  CHECK(r.code == 2);
  CHECK(has(r.err, "line 2"));
  CHECK(run({"construct", "nonsense"}).code == 2);
  CHECK(run({"construct", "book"}).code == 2);
  CHECK(run({"verify", "no-such-lemma"}).code == 2);
  CHECK(run({"verify", "book-fan", "--n-range", "6..x"}).code == 2);
  CHECK(run({"satsearch", "--n", "11", "--spec", "P3"}).code == 2);
  CHECK(run({"satsearch", "--n", "5", "--spec", "P3", "--jobs", "0"}).code == 2);
}

TEST_CASE("verify") {
  Result r = run({"verify", "book-fan", "--n-range", "6..7"});
  CHECK(r.code == 0);
  CHECK((has(r.out, "n=7 qualifying: B5 F3") || has(r.out, "n=7 qualifying: F3 B5")));
  r = run({"verify", "tree-components", "--n-range", "8..9", "--t", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "note: hypothesis set is empty"));
  r = run({"verify", "degree2-closure", "--n-range", "5..7", "--spec", "P3+P2", "--json"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"violations\":[]"));
}

TEST_CASE("enumerate") {
  const Result r = run({"enumerate", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  const Result c = run({"enumerate", "--n", "5", "--connected"});
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 21);
}

TEST_CASE("output is stable across runs and worker counts") {
  const Result a = run({"satsearch", "--n", "7", "--spec", "P3+P2", "--jobs", "1", "--json"});
  const Result b = run({"satsearch", "--n", "7", "--spec", "P3+P2", "--jobs", "8", "--json"});
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  const Result c = run({"verify", "isolated-no-leaf", "--n-range", "5..8", "--spec", "P3+P2", "--jobs", "1"});
  const Result d = run({"verify", "isolated-no-leaf", "--n-range", "5..8", "--spec", "P3+P2", "--jobs", "8"});
  CHECK(c.out == d.out);
}

TEST_CASE("satsearch over stdin") {
  const Result all = run({"enumerate", "--n", "5"});
  const Result r = run({"satsearch", "--n", "5", "--spec", "2P2", "--stdin"}, all.out);
  CHECK(r.code == 0);
  CHECK(has(r.out, "min=3; extremal: K3+2K1"));
}
