#include "ziggu/stepper.hpp"

#include <string>

#include "ziggu/oracle.hpp"

namespace ziggu {

bool on_listing(Kind kind, const QuatString& q) {
  switch (kind) {
    case Kind::Brgc: return is_binary(q);
    case Kind::Quat: return true;
    case Kind::Long: return is_valid(q);
    case Kind::Short: return is_ziggu(q);
  }
  return false;
}

namespace {

// Inputs the rules accept. The shortest-solution rule is evaluated on any
// valid state; only states of the listing lie on its path.
bool in_domain(Kind kind, const QuatString& q) {
  return kind == Kind::Short ? is_valid(q) : on_listing(kind, q);
}

void require(Kind kind, const QuatString& q) {
  if (q.empty()) throw DomainError("empty state");
  if (!in_domain(kind, q))
    throw DomainError("\"" + q.str() + "\" is not a state of the " + kind_name(kind) +
                      " listing");
}

StepOutcome moved(const QuatString& q, std::size_t i, int delta) {
  StepOutcome out{StepOutcome::Status::Moved, q, {i, delta}};
  out.state.set(i, q.at(i) + delta);
  return out;
}

// Successor without the membership check.
StepOutcome next_unchecked(Kind kind, const QuatString& q) {
  const std::size_t n = q.size();
  if (kind == Kind::Brgc) {
    int ones = 0;
    for (std::size_t i = 1; i <= n; ++i) ones += q.at(i);
    if (ones % 2 == 0) return moved(q, 1, q.at(1) == 0 ? 1 : -1);
    std::size_t r = 1;
    while (r <= n && q.at(r) == 0) ++r;
    if (r >= n) return {StepOutcome::Status::Solved, q, {}};
    return moved(q, r + 1, q.at(r + 1) == 0 ? 1 : -1);
  }
  // Parity of the digits left of i, for every i, in one right-to-left pass.
  std::vector<int> left(n + 2, 0);
  for (std::size_t i = n; i >= 1; --i) left[i] = left[i + 1] + (i < n ? q.at(i + 1) : 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const int d = q.at(i);
    const bool even = left[i] % 2 == 0;
    if (even) {
      if (d < 3) return moved(q, i, +1);
      continue;
    }
    if (d == 0) continue;
    if (kind != Kind::Quat) {
      const int up = i < n ? q.at(i + 1) : -1;
      if (up == 3) continue;
      if (kind == Kind::Short && up == 0 && d == 3) continue;
    }
    return moved(q, i, -1);
  }
  return {StepOutcome::Status::Solved, q, {}};
}

}  // namespace

StepOutcome next(Kind kind, const QuatString& q) {
  require(kind, q);
  return next_unchecked(kind, q);
}

StepOutcome prev(Kind kind, const QuatString& q) {
  require(kind, q);
  if (q.all_equal(0)) return {StepOutcome::Status::First, q, {}};
  const std::size_t n = q.size();
  const int hi = kind == Kind::Brgc ? 1 : 3;
  // Off the listing several states can share a successor: listing states
  // win, then the highest changed digit.
  std::optional<StepOutcome> fallback;
  for (std::size_t i = n; i >= 1; --i) {
    for (int delta : {+1, -1}) {
      const int d = q.at(i) - delta;
      if (d < 0 || d > hi) continue;
      QuatString c = q;
      c.set(i, d);
      if (!in_domain(kind, c)) continue;
      StepOutcome s = next_unchecked(kind, c);
      if (!s.moved() || s.move.index != i || s.move.delta != delta) continue;
      StepOutcome found{StepOutcome::Status::Moved, c, {i, -delta}};
      if (on_listing(kind, c)) return found;
      if (!fallback) fallback = found;
    }
  }
  if (fallback) return *fallback;
  throw DomainError("no predecessor for \"" + q.str() + "\"");
}

Ordering compare(const QuatString& w, const QuatString& v) {
  if (w.size() != v.size()) throw DomainError("compare needs states of equal length");
  int left = 0;
  for (std::size_t k = w.size(); k >= 1; --k) {
    if (w.at(k) != v.at(k)) {
      const bool less = (left % 2 == 0) ? w.at(k) < v.at(k) : w.at(k) > v.at(k);
      return less ? Ordering::Before : Ordering::After;
    }
    left += w.at(k);
  }
  return Ordering::Equal;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Before: return "before";
    case Ordering::Equal: return "equal";
    case Ordering::After: return "after";
  }
  return "?";
}

std::optional<Move> greedy_step(const QuatString& q, std::optional<Move> last, Side side) {
  const auto moves = legal_moves(q);  // decreasing index, +1 first
  std::optional<Move> best;
  for (const Move& m : moves) {
    if (last && m == last->inverse()) continue;
    if (!best) {
      best = m;
      if (side == Side::Leftmost) break;
    } else if (m.index < best->index) {
      best = m;
    }
  }
  return best;
}

std::vector<QuatString> greedy_walk(const QuatString& start, Side side, std::size_t budget) {
  if (!is_valid(start)) throw DomainError("invalid state \"" + start.str() + "\"");
  std::vector<QuatString> walk{start};
  QuatString q = start;
  std::optional<Move> last;
  while (!q.all_equal(3)) {
    if (walk.size() > budget) throw DomainError("greedy walk exceeded its step budget");
    auto m = greedy_step(q, last, side);
    if (!m) throw DomainError("greedy walk stuck at \"" + q.str() + "\"");
    q = apply_move(q, *m);
    last = m;
    walk.push_back(q);
  }
  return walk;
}

std::vector<Move> solve_path(const QuatString& q, SolveMode mode) {
  if (!is_valid(q)) throw DomainError("invalid state \"" + q.str() + "\"");
  std::vector<Move> out;
  if (mode == SolveMode::Bfs) {
    const auto path = oracle::solve_bfs(q);
    for (std::size_t k = 1; k < path.size(); ++k) {
      for (std::size_t i = 1; i <= q.size(); ++i) {
        if (path[k].at(i) != path[k - 1].at(i)) {
          out.push_back({i, path[k].at(i) - path[k - 1].at(i)});
          break;
        }
      }
    }
    return out;
  }
  const Kind kind = mode == SolveMode::ShortestList ? Kind::Short : Kind::Long;
  if (!on_listing(kind, q))
    throw DomainError("\"" + q.str() + "\" is not a state of the " + kind_name(kind) + " listing");
  QuatString cur = q;
  for (;;) {
    StepOutcome s = next_unchecked(kind, cur);
    if (!s.moved()) break;
    out.push_back(s.move);
    cur = std::move(s.state);
  }
  return out;
}

}  // namespace ziggu
