#pragma once

#include <chrono>
#include <iosfwd>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "ziggu/state.hpp"

namespace httplib {
class Server;
}

namespace ziggu::service {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxServiceN = 26;  // keeps every rank below 2^53

struct Session {
  std::string id;
  std::size_t n = 0;
  QuatString current;
  std::vector<Move> history;
  std::string created;  // ISO-8601 UTC
  std::string updated;
};

json session_to_json(const Session& s);
Session session_from_json(const json& j);  // replays history; throws on mismatch

// In-memory sessions; one lock per session so distinct sessions proceed in
// parallel. With a snapshot directory each session is mirrored to
// <dir>/<id>.json after every change and reloaded at startup.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::string> snapshot_dir = std::nullopt);

  Session create(std::size_t n);
  std::optional<Session> get(const std::string& id) const;
  // Runs fn on the session under its lock; nullopt when the id is unknown.
  // fn's changes are kept (and snapshotted) only if it returns normally.
  template <class Fn>
  std::optional<Session> update(const std::string& id, Fn&& fn);
  std::size_t size() const;

 private:
  struct Slot {
    std::mutex mu;
    Session s;
  };
  std::shared_ptr<Slot> slot(const std::string& id) const;
  void snapshot(const Session& s) const;

  std::optional<std::string> dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

std::string now_iso8601();

template <class Fn>
std::optional<Session> SessionStore::update(const std::string& id, Fn&& fn) {
  auto sl = slot(id);
  if (!sl) return std::nullopt;
  std::lock_guard lock(sl->mu);
  Session copy = sl->s;
  fn(copy);
  copy.updated = now_iso8601();
  sl->s = copy;
  snapshot(copy);
  return copy;
}

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class Api {
 public:
  explicit Api(std::optional<std::string> snapshot_dir = std::nullopt);

  // Routes one request; never throws.
  Response handle(const std::string& method, const std::string& path, const std::string& body);

  // The report for a valid state (n <= kMaxServiceN).
  static json state_report(const QuatString& q);

  SessionStore& sessions() { return store_; }

 private:
  SessionStore store_;
};

struct ServerOptions {
  std::string addr = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> webui_dir;
  std::optional<std::string> snapshot_dir;
};

// Installs the API routes, CORS headers for localhost origins and the
// optional static mount on svr.
bool configure(httplib::Server& svr, Api& api, const ServerOptions& opts, std::ostream& log);

// Blocks serving HTTP until stopped. Returns false if the port cannot be bound.
bool serve(const ServerOptions& opts, std::ostream& log);

}  // namespace ziggu::service
