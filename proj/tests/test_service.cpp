#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <random>
#include <thread>

#include <httplib.h>

#include "ziggu/codes.hpp"
#include "ziggu/oracle.hpp"
#include "ziggu/rank.hpp"
#include "ziggu/service.hpp"
#include "ziggu/stepper.hpp"

using namespace ziggu;
using service::Api;
using service::json;

namespace {

json body(const service::Response& r) { return json::parse(r.body); }

std::string create(Api& api, int n) {
  const auto r = api.handle("POST", "/api/v1/session", json{{"n", n}}.dump());
  REQUIRE(r.status == 201);
  return body(r)["id"].get<std::string>();
}

service::Response move(Api& api, const std::string& id, std::size_t index, int delta) {
  return api.handle("POST", "/api/v1/session/" + id + "/move",
                    json{{"index", index}, {"delta", delta}}.dump());
}

}  // namespace

TEST_CASE("state reports") {
  Api api;
  const auto r = api.handle("GET", "/api/v1/puzzle/3/state/103", "");
  REQUIRE(r.status == 200);
  const auto j = body(r);
  CHECK(j["ranks"] == json::parse(R"({"quat":28,"long":22,"short":22})"));
  CHECK(j["remaining_shortest"] == 11);
  CHECK(j["ziggu"] == true);
  CHECK(j["valid"] == true);
  CHECK(j["solved"] == false);
  CHECK(j["hint_shortest"] == json::parse(R"({"index":3,"delta":1})"));
  CHECK(j["hint_unavailable"] == false);

  const auto z = body(api.handle("GET", "/api/v1/puzzle/3/state/000", ""));
  CHECK(z["legal_moves"] == json::parse(R"([{"index":1,"delta":1}])"));
  CHECK(z["solved"] == false);
  CHECK(z["distance_bfs"] == 33);

  const auto off = body(api.handle("GET", "/api/v1/puzzle/3/state/102", ""));
  CHECK(off["ziggu"] == false);
  CHECK(off["ranks"]["short"].is_null());
  CHECK(off["remaining_shortest"].is_null());
  CHECK(off["ranks"]["long"] == 23);
  CHECK_FALSE(off["hint_shortest"].is_null());

  const auto solved = body(api.handle("GET", "/api/v1/puzzle/3/state/333", ""));
  CHECK(solved["solved"] == true);
  CHECK(solved["hint_shortest"].is_null());
  CHECK(solved["hint_longest"].is_null());
  CHECK(solved["distance_bfs"] == 0);

  const auto bad = api.handle("GET", "/api/v1/puzzle/3/state/130", "");
  CHECK(bad.status == 404);
  CHECK(body(bad)["error"] == "invalid_state");
  CHECK(body(bad)["rule"] == "only_3_after_3");
  CHECK(api.handle("GET", "/api/v1/puzzle/3/state/1x3", "").status == 400);
  CHECK(body(api.handle("GET", "/api/v1/puzzle/3/state/1033", ""))["error"] == "length_mismatch");
  CHECK(body(api.handle("GET", "/api/v1/puzzle/0/state/1", ""))["error"] == "bad_size");
  CHECK(api.handle("GET", "/api/v1/puzzle/27/state/" + std::string(27, '0'), "").status == 400);
  CHECK(api.handle("POST", "/api/v1/puzzle/3/state/103", "").status == 405);
  CHECK(api.handle("GET", "/api/v1/nowhere", "").status == 404);
  CHECK(body(api.handle("GET", "/api/v1/health", "")) == json::parse(R"({"status":"ok"})"));
}

TEST_CASE("large states: on-path hints only") {
  Api api;
  const std::string big = "1" + std::string(19, '2');
  const auto j = body(api.handle("GET", "/api/v1/puzzle/20/state/" + big, ""));
  CHECK(j["ziggu"] == true);
  CHECK_FALSE(j["hint_shortest"].is_null());
  CHECK(j["distance_bfs"].is_null());
  CHECK(j["ranks"]["short"] == static_cast<long long>(rank_short(parse(big))));
  const auto o = body(api.handle("GET", "/api/v1/puzzle/20/state/" + std::string(17, '0') + "102", ""));
  CHECK(o["ziggu"] == false);
  CHECK(o["hint_unavailable"] == true);
  CHECK(o["hint_shortest"].is_null());
  CHECK_FALSE(o["hint_longest"].is_null());
}

TEST_CASE("hint_shortest follows the successor on every shortest-solution state") {
  Api api;
  for (const auto& q : listing(Kind::Short, 6).states) {
    const auto j = Api::state_report(q);
    const auto nx = next(Kind::Short, q);
    if (nx.moved()) {
      CHECK(j["hint_shortest"] == json{{"index", nx.move.index}, {"delta", nx.move.delta}});
      CHECK(std::find(j["legal_moves"].begin(), j["legal_moves"].end(), j["hint_shortest"]) !=
            j["legal_moves"].end());
    } else {
      CHECK(j["hint_shortest"].is_null());
    }
    CHECK(j["remaining_shortest"].get<long long>() ==
          static_cast<long long>(count(Kind::Short, 6)) - 1 - j["ranks"]["short"].get<long long>());
  }
}

TEST_CASE("sessions") {
  Api api;
  const auto created = api.handle("POST", "/api/v1/session", R"({"n":5})");
  REQUIRE(created.status == 201);
  const auto c = body(created);
  CHECK(c["state"] == "00000");
  CHECK(c["history"].empty());
  CHECK(c["report"]["state"] == "00000");
  const std::string id = c["id"];

  const auto m1 = move(api, id, 1, +1);
  CHECK(m1.status == 200);
  CHECK(body(m1)["state"] == "00001");
  CHECK(body(m1)["session_id"] == id);
  CHECK(body(m1)["history_length"] == 1);

  const auto u = api.handle("POST", "/api/v1/session/" + id + "/undo", "");
  CHECK(u.status == 200);
  CHECK(body(u)["state"] == "00000");
  const auto u2 = api.handle("POST", "/api/v1/session/" + id + "/undo", "");
  CHECK(u2.status == 409);
  CHECK(body(u2)["error"] == "nothing_to_undo");

  // Walk to 10203 along a geodesic, then try the locked digit.
  const auto g = oracle::build_graph(5);
  const auto path = oracle::bfs_path(g, QuatString::zeros(5), parse("10203"));
  for (std::size_t k = 1; k < path.size(); ++k) {
    for (std::size_t i = 1; i <= 5; ++i) {
      const int d = path[k].at(i) - path[k - 1].at(i);
      if (d) REQUIRE(move(api, id, i, d).status == 200);
    }
  }
  const auto got = body(api.handle("GET", "/api/v1/session/" + id, ""));
  CHECK(got["state"] == "10203");
  CHECK(got["report"]["legal_moves"].size() == 4);
  const auto locked = move(api, id, 4, +1);
  CHECK(locked.status == 409);
  CHECK(body(locked)["error"] == "illegal_move");
  CHECK(body(locked)["reason"] == "maze_turn");
  CHECK(body(locked)["move"] == json::parse(R"({"index":4,"delta":1})"));
  CHECK(body(move(api, id, 1, +1))["reason"] == "out_of_range");
  CHECK(body(move(api, id, 3, +1))["reason"] == "validity");
  CHECK(body(move(api, id, 9, +1))["reason"] == "bad_index");
  CHECK(body(api.handle("GET", "/api/v1/session/" + id, ""))["state"] == "10203");

  CHECK(move(api, "nope", 1, 1).status == 404);
  CHECK(api.handle("GET", "/api/v1/session/nope", "").status == 404);
  CHECK(api.handle("POST", "/api/v1/session", R"({"n":0})").status == 400);
  CHECK(api.handle("POST", "/api/v1/session", R"({"n":"5"})").status == 400);
  CHECK(api.handle("POST", "/api/v1/session", "{not json").status == 400);
  CHECK(api.handle("POST", "/api/v1/session/" + id + "/move", R"({"index":1,"delta":2})").status == 400);
  CHECK(api.handle("GET", "/api/v1/session", "").status == 405);
}

TEST_CASE("random move fuzz keeps sessions valid and replayable") {
  Api api;
  const std::string id = create(api, 6);
  std::mt19937 rng(99);
  std::size_t accepted = 0, attempts = 0;
  while (accepted < 10000) {
    ++attempts;
    const std::size_t idx = 1 + rng() % 7;  // includes an out-of-range index
    const int delta = rng() % 2 ? 1 : -1;
    const auto r = move(api, id, idx, delta);
    if (r.status == 200) {
      ++accepted;
      const auto st = body(r)["state"].get<std::string>();
      CHECK(is_valid(parse(st)));
    } else {
      CHECK(r.status == 409);
    }
    if (accepted % 1000 == 0 || attempts % 997 == 0) {
      const auto s = body(api.handle("GET", "/api/v1/session/" + id, ""));
      const auto replayed = service::session_from_json(s);
      CHECK(replayed.current.str() == s["state"]);
    }
  }
  const auto s = body(api.handle("GET", "/api/v1/session/" + id, ""));
  CHECK(s["history"].size() == 10000);
  CHECK(service::session_from_json(s).current.str() == s["state"]);
}

TEST_CASE("snapshots survive a restart") {
  const auto dir = std::filesystem::temp_directory_path() / ("ziggu-snap-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::string id;
  {
    Api api(dir.string());
    id = create(api, 4);
    REQUIRE(move(api, id, 1, +1).status == 200);
    REQUIRE(move(api, id, 1, +1).status == 200);
    REQUIRE(move(api, id, 1, -1).status == 200);
    CHECK(std::filesystem::exists(dir / (id + ".json")));
  }
  std::ofstream(dir / "junk.json") << "{broken";
  {
    Api api(dir.string());
    const auto s = api.handle("GET", "/api/v1/session/" + id, "");
    REQUIRE(s.status == 200);
    CHECK(body(s)["state"] == "0001");
    CHECK(body(s)["history"].size() == 3);
    CHECK(api.sessions().size() == 1);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("concurrent sessions") {
  Api api;
  std::vector<std::string> ids;
  for (int k = 0; k < 4; ++k) ids.push_back(create(api, 5));
  std::vector<std::thread> ts;
  for (const auto& id : ids)
    ts.emplace_back([&api, id] {
      for (int k = 0; k < 200; ++k) {
        move(api, id, 1, +1);
        api.handle("POST", "/api/v1/session/" + id + "/undo", "");
      }
    });
  for (auto& t : ts) t.join();
  for (const auto& id : ids) {
    const auto s = body(api.handle("GET", "/api/v1/session/" + id, ""));
    CHECK(s["state"] == "00000");
    CHECK(s["history"].empty());
  }
}

TEST_CASE("HTTP server: routes, CORS and static files") {
  const auto www = std::filesystem::temp_directory_path() / ("ziggu-www-" + std::to_string(::getpid()));
  std::filesystem::create_directories(www);
  std::ofstream(www / "index.html") << "<html>ziggu</html>";

  Api api;
  httplib::Server svr;
  service::ServerOptions opts;
  opts.webui_dir = www.string();
  std::ostringstream log;
  REQUIRE(service::configure(svr, api, opts, log));
  const int port = svr.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { svr.listen_after_bind(); });
  svr.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto r = cli.Get("/api/v1/puzzle/5/state/10203", {{"Origin", "http://localhost:5173"}});
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");
  CHECK(r->get_header_value("Content-Type").find("application/json") == 0);
  CHECK(json::parse(r->body)["legal_moves"].size() == 4);

  r = cli.Get("/api/v1/health", {{"Origin", "http://evil.example"}});
  REQUIRE(r);
  CHECK_FALSE(r->has_header("Access-Control-Allow-Origin"));

  r = cli.Post("/api/v1/session", R"({"n":3})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 201);
  const std::string id = json::parse(r->body)["id"];
  r = cli.Post("/api/v1/session/" + id + "/move", R"({"index":2,"delta":1})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 409);

  r = cli.Options("/api/v1/session");
  REQUIRE(r);
  CHECK(r->status == 204);

  r = cli.Get("/index.html");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->body == "<html>ziggu</html>");

  svr.stop();
  t.join();
  std::filesystem::remove_all(www);
}
