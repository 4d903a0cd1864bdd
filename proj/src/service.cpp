#include "ziggu/service.hpp"

#include <ostream>
#include <regex>

#include <httplib.h>

#include "ziggu/codes.hpp"
#include "ziggu/oracle.hpp"
#include "ziggu/rank.hpp"
#include "ziggu/stepper.hpp"

namespace ziggu::service {

namespace {

json move_json(const Move& m) { return {{"index", m.index}, {"delta", m.delta}}; }

json opt_move(const StepOutcome& s) { return s.moved() ? move_json(s.move) : json(nullptr); }

std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

Response reply(int status, const json& body) { return {status, body.dump(), "application/json"}; }

Response error(int status, const std::string& code, const std::string& message,
               json extra = json::object()) {
  json body{{"error", code}, {"message", message}};
  for (auto& [k, v] : extra.items()) body[k] = v;
  return reply(status, body);
}

struct Refused {};

bool parse_size(const std::string& text, std::size_t& n) {
  if (text.empty() || text.size() > 4) return false;
  n = std::stoul(text);
  return n >= 1 && n <= kMaxServiceN;
}

}  // namespace

Api::Api(std::optional<std::string> snapshot_dir) : store_(std::move(snapshot_dir)) {}

json Api::state_report(const QuatString& q) {
  const std::size_t n = q.size();
  const bool zig = is_ziggu(q);
  json r;
  r["n"] = n;
  r["state"] = q.str();
  r["valid"] = true;
  r["ziggu"] = zig;
  r["solved"] = q.all_equal(3);
  r["ranks"] = {{"quat", to_i64(rank_quat(q))},
                {"long", to_i64(rank_long(q))},
                {"short", zig ? json(to_i64(rank_short(q))) : json(nullptr)}};
  r["remaining_shortest"] =
      zig ? json(to_i64(count(Kind::Short, n) - 1 - rank_short(q))) : json(nullptr);
  json moves = json::array();
  for (const auto& m : legal_moves(q)) moves.push_back(move_json(m));
  r["legal_moves"] = moves;

  const bool graph_ok = n <= oracle::kMaxGraphN;
  if (zig) {
    r["hint_shortest"] = opt_move(next(Kind::Short, q));
  } else if (graph_ok) {
    const auto path = solve_path(q, SolveMode::Bfs);
    r["hint_shortest"] = path.empty() ? json(nullptr) : move_json(path.front());
  } else {
    r["hint_shortest"] = nullptr;
  }
  r["hint_unavailable"] = !zig && !graph_ok;
  r["hint_longest"] = opt_move(next(Kind::Long, q));
  if (graph_ok) {
    const auto g = oracle::shared_graph(n);
    const auto dist = oracle::shared_distances_to_solved(n);
    r["distance_bfs"] = (*dist)[g->vertex(q)];
  } else {
    r["distance_bfs"] = nullptr;
  }
  return r;
}

Response Api::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex state_re(R"(^/api/v1/puzzle/([0-9]+)/state/([^/]+)$)");
  static const std::regex session_re(R"(^/api/v1/session/([0-9a-zA-Z_-]+)$)");
  static const std::regex action_re(R"(^/api/v1/session/([0-9a-zA-Z_-]+)/(move|undo)$)");
  std::smatch m;
  try {
    if (path == "/api/v1/health") {
      if (method != "GET") return error(405, "method_not_allowed", method + " " + path);
      return reply(200, {{"status", "ok"}});
    }

    if (std::regex_match(path, m, state_re)) {
      if (method != "GET") return error(405, "method_not_allowed", method + " " + path);
      std::size_t n = 0;
      if (!parse_size(m[1], n))
        return error(400, "bad_size", "n must be between 1 and " + std::to_string(kMaxServiceN));
      QuatString q;
      try {
        q = parse(m[2].str());
      } catch (const ParseError& e) {
        return error(400, "malformed_state", e.what());
      }
      if (q.size() != n)
        return error(400, "length_mismatch",
                     "state has " + std::to_string(q.size()) + " digits, expected " +
                         std::to_string(n));
      if (!is_valid(q))
        return error(404, "invalid_state", "\"" + q.str() + "\" is not a reachable state",
                     {{"rule", validity_rule(q)}});
      return reply(200, state_report(q));
    }

    if (path == "/api/v1/session") {
      if (method != "POST") return error(405, "method_not_allowed", method + " " + path);
      const json req = json::parse(body.empty() ? "{}" : body);
      if (!req.contains("n") || !req["n"].is_number_integer())
        return error(400, "bad_request", "body must be {\"n\": <int>}");
      const auto n = req["n"].get<long long>();
      if (n < 1 || n > static_cast<long long>(kMaxServiceN))
        return error(400, "bad_size", "n must be between 1 and " + std::to_string(kMaxServiceN));
      const Session s = store_.create(static_cast<std::size_t>(n));
      json out = session_to_json(s);
      out["report"] = state_report(s.current);
      return reply(201, out);
    }

    if (std::regex_match(path, m, session_re)) {
      if (method != "GET") return error(405, "method_not_allowed", method + " " + path);
      auto s = store_.get(m[1]);
      if (!s) return error(404, "unknown_session", "no session " + m[1].str());
      json out = session_to_json(*s);
      out["report"] = state_report(s->current);
      return reply(200, out);
    }

    if (std::regex_match(path, m, action_re)) {
      if (method != "POST") return error(405, "method_not_allowed", method + " " + path);
      const std::string id = m[1];
      const bool is_move = m[2] == "move";
      Move mv{};
      if (is_move) {
        const json req = json::parse(body.empty() ? "{}" : body);
        if (!req.contains("index") || !req["index"].is_number_integer() ||
            !req.contains("delta") || !req["delta"].is_number_integer())
          return error(400, "bad_request", "body must be {\"index\": <int>, \"delta\": +1|-1}");
        const auto idx = req["index"].get<long long>();
        const auto delta = req["delta"].get<long long>();
        if (delta != 1 && delta != -1) return error(400, "bad_request", "delta must be +1 or -1");
        mv = {idx < 1 ? 0 : static_cast<std::size_t>(idx), static_cast<int>(delta)};
      }
      std::optional<Response> refused;
      std::optional<Session> s;
      try {
        s = store_.update(id, [&](Session& sess) {
          if (is_move) {
            if (auto v = check_move(sess.current, mv)) {
              std::string msg;
              try {
                apply_move(sess.current, mv);
              } catch (const IllegalMove& e) {
                msg = e.what();
              }
              refused = error(409, "illegal_move", msg,
                              {{"reason", to_string(*v)}, {"move", move_json(mv)}});
              throw Refused{};
            }
            sess.current = apply_move(sess.current, mv);
            sess.history.push_back(mv);
          } else {
            if (sess.history.empty()) {
              refused = error(409, "nothing_to_undo", "the session is at its start state");
              throw Refused{};
            }
            sess.current = apply_move(sess.current, sess.history.back().inverse());
            sess.history.pop_back();
          }
        });
      } catch (const Refused&) {
        return *refused;
      }
      if (!s) return error(404, "unknown_session", "no session " + id);
      json out = state_report(s->current);
      out["session_id"] = s->id;
      out["history_length"] = s->history.size();
      return reply(200, out);
    }

    return error(404, "not_found", "no route for " + method + " " + path);
  } catch (const json::exception& e) {
    return error(400, "bad_json", e.what());
  } catch (const ParseError& e) {
    return error(400, "bad_request", e.what());
  } catch (const DomainError& e) {
    return error(404, "domain_error", e.what());
  } catch (const std::exception& e) {
    return error(500, "internal_error", e.what());
  }
}

namespace {

bool local_origin(const std::string& origin) {
  static const std::regex re(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]+)?$)");
  return std::regex_match(origin, re);
}

}  // namespace

bool configure(httplib::Server& svr, Api& api, const ServerOptions& opts, std::ostream& log) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    const Response r = api.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  svr.Get(R"(/api/.*)", forward);
  svr.Post(R"(/api/.*)", forward);
  svr.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  svr.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
  });
  if (opts.webui_dir && !svr.set_mount_point("/", *opts.webui_dir)) {
    log << "ziggu-server: cannot serve static files from " << *opts.webui_dir << "\n";
    return false;
  }
  return true;
}

bool serve(const ServerOptions& opts, std::ostream& log) {
  Api api(opts.snapshot_dir);
  httplib::Server svr;
  if (!configure(svr, api, opts, log)) return false;
  log << "ziggu-server listening on http://" << opts.addr << ":" << opts.port << "\n" << std::flush;
  return svr.listen(opts.addr, opts.port);
}

}  // namespace ziggu::service
