#include "ziggu/service.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace ziggu::service {

namespace fs = std::filesystem;

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

namespace {

std::string random_id() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << rng();
  return os.str();
}

}  // namespace

json session_to_json(const Session& s) {
  json h = json::array();
  for (const auto& m : s.history) h.push_back({{"index", m.index}, {"delta", m.delta}});
  return {{"id", s.id},
          {"n", s.n},
          {"state", s.current.str()},
          {"history", h},
          {"created", s.created},
          {"updated", s.updated}};
}

Session session_from_json(const json& j) {
  Session s;
  s.id = j.at("id").get<std::string>();
  s.n = j.at("n").get<std::size_t>();
  s.created = j.at("created").get<std::string>();
  s.updated = j.at("updated").get<std::string>();
  s.current = QuatString::zeros(s.n);
  for (const auto& m : j.at("history")) {
    Move mv{m.at("index").get<std::size_t>(), m.at("delta").get<int>()};
    s.current = apply_move(s.current, mv);
    s.history.push_back(mv);
  }
  if (s.current.str() != j.at("state").get<std::string>())
    throw DomainError("session " + s.id + ": history does not reproduce its state");
  return s;
}

SessionStore::SessionStore(std::optional<std::string> snapshot_dir) : dir_(std::move(snapshot_dir)) {
  if (!dir_) return;
  fs::create_directories(*dir_);
  for (const auto& entry : fs::directory_iterator(*dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      std::ifstream f(entry.path());
      auto sl = std::make_shared<Slot>();
      sl->s = session_from_json(json::parse(f));
      slots_[sl->s.id] = sl;
    } catch (const std::exception&) {
      // unreadable snapshots are skipped, not fatal
    }
  }
}

Session SessionStore::create(std::size_t n) {
  auto sl = std::make_shared<Slot>();
  sl->s.n = n;
  sl->s.current = QuatString::zeros(n);
  sl->s.created = sl->s.updated = now_iso8601();
  {
    std::unique_lock lock(mu_);
    do sl->s.id = random_id();
    while (slots_.count(sl->s.id));
    slots_[sl->s.id] = sl;
  }
  snapshot(sl->s);
  return sl->s;
}

std::shared_ptr<SessionStore::Slot> SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = slots_.find(id);
  return it == slots_.end() ? nullptr : it->second;
}

std::optional<Session> SessionStore::get(const std::string& id) const {
  auto sl = slot(id);
  if (!sl) return std::nullopt;
  std::lock_guard lock(sl->mu);
  return sl->s;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mu_);
  return slots_.size();
}

void SessionStore::snapshot(const Session& s) const {
  if (!dir_) return;
  const fs::path target = fs::path(*dir_) / (s.id + ".json");
  const fs::path tmp = fs::path(*dir_) / (s.id + ".json.tmp");
  {
    std::ofstream f(tmp);
    f << session_to_json(s).dump(2) << '\n';
  }
  fs::rename(tmp, target);
}

}  // namespace ziggu::service
