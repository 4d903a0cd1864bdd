#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ziggu/cli.hpp"
#include "ziggu/codes.hpp"
#include "ziggu/oracle.hpp"

using namespace ziggu;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ziggu");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("list") {
  const auto r = run({"list", "--kind", "short", "--n", "2"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 13);
  CHECK(ls.front() == "00");
  CHECK(ls.back() == "33");
  const auto j = run({"list", "--kind", "short", "--n", "3", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = json::parse(j.out);
  CHECK(doc["kind"] == "short");
  CHECK(doc["n"] == 3);
  CHECK(doc["count"] == 34);
  CHECK(doc["states"].size() == 34);
  CHECK(doc["states"][22] == "103");
  CHECK(j.out.rfind("{\"kind\":\"short\",\"n\":3,\"count\":34,\"states\":[\"000\",\"001\"", 0) == 0);
  CHECK(run({"list", "--kind", "short", "--n", "3", "--format", "json"}).out == j.out);
  // beyond the materialization limit the cursor streams the listing
  const auto big = run({"list", "--kind", "quat", "--n", "11"});
  CHECK(big.code == 0);
  CHECK(std::count(big.out.begin(), big.out.end(), '\n') == (1 << 22));
}

TEST_CASE("rank and unrank") {
  CHECK(run({"rank", "--kind", "short", "103"}).out == "22\n");
  CHECK(run({"rank", "--kind", "brgc", "10110010"}).out == "220\n");
  const auto j = run({"rank", "--kind", "long", "--format", "json", "203", "2333"});
  CHECK(json::parse(j.out) == json::parse(R"([{"state":"203","kind":"long","rank":29},{"state":"2333","kind":"long","rank":119}])"));
  CHECK(run({"unrank", "--kind", "short", "--n", "3", "22"}).out == "103\n");
  CHECK(run({"unrank", "--kind", "long", "--n", "4", "120", "0"}).out == "3333\n0000\n");
  CHECK(run({"unrank", "--kind", "short", "--n", "3", "34"}).code == 1);
  CHECK(run({"unrank", "--kind", "short", "--n", "3", "x"}).code == 1);
}

TEST_CASE("list piped into rank counts 0, 1, 2, ...") {
  for (const char* k : {"brgc", "quat", "long", "short"}) {
    for (int n = 1; n <= 6; ++n) {
      const auto l = run({"list", "--kind", k, "--n", std::to_string(n)});
      REQUIRE(l.code == 0);
      const auto r = run({"rank", "--kind", k}, l.out);
      REQUIRE(r.code == 0);
      const auto ranks = lines(r.out);
      bool ok = ranks.size() == lines(l.out).size();
      for (std::size_t i = 0; ok && i < ranks.size(); ++i) ok = ranks[i] == std::to_string(i);
      CHECK_MESSAGE(ok, k, " n=", n);
    }
  }
}

TEST_CASE("next, prev, compare") {
  CHECK(run({"next", "--kind", "quat", "012310"}).out == "012320\n");
  CHECK(run({"next", "--kind", "short", "333"}).out == "SOLVED\n");
  CHECK(run({"prev", "--kind", "quat", "000"}).out == "FIRST\n");
  CHECK(run({"prev", "--kind", "long", "20102"}).out == "20103\n");
  CHECK(json::parse(run({"next", "--kind", "short", "--format", "json", "20103"}).out) ==
        json::parse(R"({"status":"moved","state":"20203","move":{"index":3,"delta":1}})"));
  CHECK(json::parse(run({"next", "--kind", "short", "--format", "json", "333"}).out) ==
        json::parse(R"({"status":"solved","state":null,"move":null})"));
  CHECK(run({"compare", "101", "100"}).out == "before\n");
  CHECK(run({"compare", "1110010", "1111111"}).out == "after\n");
  CHECK(run({"compare", "12", "12"}).out == "equal\n");
  CHECK(run({"compare", "12", "123"}).code == 1);
}

TEST_CASE("solve and moves") {
  const auto s = run({"solve", "103"});
  CHECK(s.code == 0);
  CHECK(s.out == "+3 +2 -1 -1 -1 +2 +1 +1 +1 +2 +3\n");
  const auto st = run({"solve", "--states", "233"});
  CHECK(st.out == "+3\n233\n333\n");
  CHECK(run({"solve", "--mode", "bfs", "333"}).out == "\n");
  const auto j = json::parse(run({"solve", "--mode", "longest", "--format", "json", "223"}).out);
  CHECK(j["mode"] == "longest");
  CHECK(j["moves"].size() == 2);
  CHECK(run({"solve", "102"}).code == 1);
  CHECK(run({"solve", "--mode", "bfs", "102"}).code == 0);
  CHECK(run({"moves", "10203"}).out == "+5 -3 +2 -1\n");
  CHECK(json::parse(run({"moves", "--format", "json", "000"}).out) ==
        json::parse(R"([{"index":1,"delta":1}])"));
  CHECK(run({"moves", "130"}).code == 1);
}

TEST_CASE("graph export") {
  const auto d = run({"graph", "--n", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("graph ziggu2 {", 0) == 0);
  const auto j = json::parse(run({"graph", "--n", "3", "--format", "json"}).out);
  CHECK(j["nodes"].size() == 40);
  CHECK(j["edges"].size() == oracle::build_graph(3).edge_count());
  std::size_t shorts = 0;
  for (const auto& v : j["nodes"]) shorts += v["short"].get<bool>();
  CHECK(shorts == 34);
  CHECK(run({"graph", "--n", "13"}).code == 1);
}

TEST_CASE("nurikabe") {
  CHECK(run({"nurikabe", "count", "--n", "5"}).out == "a=172 b=48 c=124 (formula a=172 b=48 c=124)\n");
  CHECK(run({"nurikabe", "map", "333"}).out == "...\n...\n");
  const auto g = json::parse(run({"nurikabe", "grids", "--n", "3", "--format", "json"}).out);
  CHECK(g.size() == 34);
  CHECK(run({"nurikabe", "map", "102"}).code == 1);
  CHECK(run({"nurikabe"}).code == 2);
}

TEST_CASE("verify and ruler") {
  const auto v = run({"verify", "--n", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("shortest=172 longest=364") != std::string::npos);
  CHECK(lines(v.out).back() == "PASS");
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--n", "13"}).code == 1);
  CHECK(run({"ruler", "--kind", "brgc", "--n", "3", "--unsigned"}).out == "1,2,1,3,1,2,1\n");
  CHECK(run({"ruler", "--kind", "brgc", "--n", "3"}).out == "1,2,-1,3,1,-2,-1\n");
}

TEST_CASE("exit codes and usage") {
  const auto bad = run({"frobnicate"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(run({"list", "--kind", "penta", "--n", "2"}).code == 2);
  CHECK(run({"list", "--kind", "short"}).code == 2);
  CHECK(run({"list", "--n", "2", "--bogus"}).code == 2);
  CHECK(run({"list", "--n", "0"}).code == 2);
  const auto inv = run({"rank", "--kind", "short", "102"});
  CHECK(inv.code == 1);
  CHECK(inv.err.find("102") != std::string::npos);
  CHECK(run({"rank", "4"}).code == 1);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("Subcommands") != std::string::npos);
  CHECK(run({}).code == 2);
}
