#include <doctest.h>

#include <sstream>

#include "qsfmf/cli.hpp"
#include "qsfmf/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qsfmf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("expand prints F expansions") {
  const auto r = run({"expand", "--kind", "qs", "--composition", "1,3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = qsfmf::Json::parse(r.out);
  CHECK(j["basis"] == "F");
  CHECK(j["degree"] == 4);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["index"] == qsfmf::Json::array({1, 3}));
  CHECK(j["terms"][1]["index"] == qsfmf::Json::array({2, 2}));
  CHECK(j["terms"][0]["coefficient"] == 1);
  CHECK(j["terms"][1]["coefficient"] == 1);

  const auto t = run({"expand", "--kind", "qs", "--composition", "1,3"});
  CHECK(t.code == 0);
  CHECK(t.out == "1 · F[1,3]\n1 · F[2,2]\n");
}

TEST_CASE("expand in the other bases") {
  const auto m = run({"expand", "--kind", "qs", "--composition", "1,3", "--basis", "m"});
  CHECK(m.code == 0);
  CHECK(contains(m.out, "2 · M[1,1,1,1]"));
  CHECK(contains(m.out, "2 · M[1,1,2]"));

  const auto s = run({"expand", "--kind", "skew", "--outer", "3,2,1", "--inner", "2,1", "--basis", "schur"});
  CHECK(s.code == 0);
  CHECK(s.out == "1 · s[1,1,1]\n2 · s[2,1]\n1 · s[3]\n");

  CHECK(run({"expand", "--kind", "qs", "--composition", "1,3", "--basis", "schur"}).code == 2);
}

TEST_CASE("check reports fmf and components") {
  const auto r = run({"check", "--kind", "schur", "--partition", "3,2,1"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "fmf: false"));
  const auto ok = run({"check", "--kind", "qs", "--composition", "2,3,3", "--format", "json"});
  CHECK(ok.code == 0);
  CHECK(qsfmf::Json::parse(ok.out)["fmf"] == true);
  CHECK(run({"check", "--kind", "skew", "--outer", "3,2", "--inner", "2"}).code == 0);
}

TEST_CASE("tableaux and witnesses") {
  const auto t = run({"tableaux", "--kind", "qs", "--composition", "1,3"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "1\n4 3 2\n"));
  CHECK(contains(t.out, "2\n4 3 1\n"));

  const auto skew = run({"tableaux", "--kind", "skew", "--outer", "2,1", "--inner", "1", "--format", "json"});
  CHECK(skew.code == 0);
  const auto j = qsfmf::Json::parse(skew.out);
  CHECK(j.size() == 2);
  CHECK(j[0][0][0].is_null());

  const auto w = run({"witnesses", "--kind", "schur", "--partition", "3,2,1"});
  CHECK(w.code == 1);
  CHECK(contains(w.out, "descent set {2,4}"));
  const auto none = run({"witnesses", "--kind", "qs", "--composition", "1,3"});
  CHECK(none.code == 0);
  CHECK(none.out == "no collisions: fmf\n");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--theorem", "two-part", "--max-n", "12"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "disagreements: 0"));

  const auto qs = run({"verify", "--theorem", "qs-components", "--max-n", "4"});
  CHECK(qs.code == 1);
  CHECK(contains(qs.out, "- 2,2: predicted more, brute force two"));
  CHECK(contains(qs.out, "descent sets {2} and {1,3}"));

  const auto j = qsfmf::Json::parse(
      run({"verify", "--theorem", "qs-components", "--max-n", "4", "--format", "json"}).out);
  const auto& w = j["disagreements"][0]["witnesses"][0];
  CHECK(w["descent_sets"] == qsfmf::Json::parse("[[2],[1,3]]"));
  CHECK(w["first"] == qsfmf::Json::parse("[[2,1],[4,3]]"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"expand"}).code == 2);
  CHECK(run({"expand", "--kind", "qs"}).code == 2);
  CHECK(run({"expand", "--kind", "qs", "--composition", "1,x"}).code == 2);
  CHECK(run({"expand", "--kind", "schur", "--partition", "1,2"}).code == 2);
  CHECK(run({"expand", "--kind", "skew", "--outer", "2", "--inner", "3"}).code == 2);
  CHECK(run({"expand", "--kind", "nope", "--composition", "1"}).code == 2);
  CHECK(run({"verify", "--theorem", "nope", "--max-n", "3"}).code == 2);
  CHECK(run({"verify", "--theorem", "schur", "--max-n", "0"}).code == 2);
  CHECK(run({"check", "--kind", "qs", "--composition", "1,3", "--format", "xml"}).code == 2);
  const auto e = run({"expand", "--kind", "qs"});
  CHECK_FALSE(e.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget exceeded") {
  const auto r = run({"expand", "--kind", "schur", "--partition", "4,3,2,1", "--budget", "10"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "budget"));
  CHECK(run({"verify", "--theorem", "schur", "--max-n", "8", "--budget", "5"}).code == 3);
}

TEST_CASE("json output survives a round trip byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"expand", "--kind", "qs", "--composition", "2,2,4", "--format", "json"},
           {"expand", "--kind", "skew", "--outer", "3,2,2,1", "--inner", "1,1", "--basis", "schur", "--format", "json"},
           {"witnesses", "--kind", "qs", "--composition", "3,3,2", "--format", "json"},
           {"verify", "--theorem", "qs-components", "--max-n", "5", "--format", "json"}}) {
    const auto r = run(args);
    CHECK(r.out == qsfmf::Json::parse(r.out).dump(2) + "\n");
  }
}

TEST_CASE("verify output is identical across thread counts") {
  for (const std::string theorem : {"skew", "qs-components", "families"}) {
    const auto one = run({"verify", "--theorem", theorem, "--max-n", "7", "--threads", "1", "--format", "json"});
    const auto many = run({"verify", "--theorem", theorem, "--max-n", "7", "--threads", "8", "--format", "json"});
    CHECK(one.out == many.out);
    CHECK(one.code == many.code);
  }
}
