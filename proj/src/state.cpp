#include "ziggu/state.hpp"

#include <algorithm>

namespace ziggu {

const char* to_string(MoveViolation v) {
  switch (v) {
    case MoveViolation::BadIndex: return "bad_index";
    case MoveViolation::OutOfRange: return "out_of_range";
    case MoveViolation::Validity: return "validity";
    case MoveViolation::MazeTurn: return "maze_turn";
  }
  return "unknown";
}

QuatString::QuatString(std::size_t n, int fill)
    : d_(n, static_cast<std::uint8_t>(fill)) {}

QuatString QuatString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty state");
  QuatString q;
  q.d_.resize(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c < '0' || c > '3')
      throw ParseError("bad digit '" + std::string(1, c) + "' in state \"" +
                       std::string(text) + "\"");
    q.d_[text.size() - 1 - k] = static_cast<std::uint8_t>(c - '0');
  }
  return q;
}

QuatString parse(std::string_view text) { return QuatString::parse(text); }

QuatString QuatString::from_left_to_right(const std::vector<int>& w) {
  QuatString q(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 0 || w[k] > 3) throw ParseError("digit out of range");
    q.d_[w.size() - 1 - k] = static_cast<std::uint8_t>(w[k]);
  }
  return q;
}

std::string QuatString::str() const {
  std::string s(d_.size(), '0');
  for (std::size_t k = 0; k < d_.size(); ++k)
    s[d_.size() - 1 - k] = static_cast<char>('0' + d_[k]);
  return s;
}

std::vector<int> QuatString::left_to_right() const {
  return std::vector<int>(d_.rbegin(), d_.rend());
}

std::uint64_t QuatString::packed() const {
  std::uint64_t code = 0;
  for (std::size_t k = d_.size(); k-- > 0;) code = (code << 2) | d_[k];
  return code;
}

QuatString QuatString::unpack(std::uint64_t code, std::size_t n) {
  QuatString q(n);
  for (std::size_t k = 0; k < n; ++k) {
    q.d_[k] = static_cast<std::uint8_t>(code & 3u);
    code >>= 2;
  }
  return q;
}

bool QuatString::all_equal(int v) const {
  return std::all_of(d_.begin(), d_.end(), [v](std::uint8_t x) { return x == v; });
}

QuatString QuatString::extended(int leading) const {
  QuatString r = *this;
  r.d_.push_back(static_cast<std::uint8_t>(leading));
  return r;
}

std::ostream& operator<<(std::ostream& os, const QuatString& q) { return os << q.str(); }

bool is_valid(const QuatString& q) {
  bool seen3 = false;
  for (std::size_t i = q.size(); i >= 1; --i) {
    if (q.at(i) == 3) seen3 = true;
    else if (seen3) return false;
  }
  return true;
}

bool is_ziggu(const QuatString& q) {
  std::size_t i = q.size();
  while (i >= 1 && q.at(i) == 0) --i;
  while (i >= 1 && (q.at(i) == 1 || q.at(i) == 2)) --i;
  if (i >= 1 && q.at(i) == 0) --i;
  while (i >= 1 && q.at(i) == 3) --i;
  return i == 0;
}

bool is_binary(const QuatString& q) {
  return std::all_of(q.raw().begin(), q.raw().end(), [](std::uint8_t x) { return x <= 1; });
}

std::string validity_rule(const QuatString& q) {
  return is_valid(q) ? std::string() : std::string("only_3_after_3");
}

bool is_valid_cell(Cell c) {
  if (c.row < 0 || c.row > 3 || c.col < 0 || c.col > 3) return false;
  return c.row < 3 || c.col == 3;
}

MazeVector to_maze(const QuatString& q) {
  if (q.size() < 2) throw DomainError("a maze vector needs at least two digits");
  if (!is_valid(q)) throw DomainError("invalid state \"" + q.str() + "\"");
  MazeVector mv;
  mv.reserve(q.size() - 1);
  // maze j (left to right) has row = d_j, col = d_{j+1}
  for (std::size_t i = q.size(); i >= 2; --i) mv.push_back({q.at(i), q.at(i - 1)});
  return mv;
}

QuatString from_maze(const MazeVector& mv) {
  if (mv.empty()) throw DomainError("empty maze vector");
  std::vector<int> w;
  w.reserve(mv.size() + 1);
  for (std::size_t j = 0; j < mv.size(); ++j) {
    if (!is_valid_cell(mv[j]))
      throw DomainError("maze " + std::to_string(j + 1) + " is at an invalid cell");
    if (j > 0 && mv[j].row != mv[j - 1].col)
      throw DomainError("mazes " + std::to_string(j) + " and " + std::to_string(j + 1) +
                        " are not chained");
    w.push_back(mv[j].row);
  }
  w.push_back(mv.back().col);
  return QuatString::from_left_to_right(w);
}

std::string to_string(const Move& m) {
  return (m.delta > 0 ? "+" : "-") + std::to_string(m.index);
}

std::optional<MoveViolation> check_move(const QuatString& q, const Move& m) {
  const std::size_t n = q.size();
  if (m.index < 1 || m.index > n || (m.delta != 1 && m.delta != -1))
    return MoveViolation::BadIndex;
  const int old = q.at(m.index);
  const int now = old + m.delta;
  if (now < 0 || now > 3) return MoveViolation::OutOfRange;

  // Validity of the result only depends on the changed digit and its neighbours,
  // given that q itself is valid.
  if (now == 3 && m.index > 1 && q.at(m.index - 1) != 3) return MoveViolation::Validity;
  if (old == 3 && m.index < n && q.at(m.index + 1) == 3) return MoveViolation::Validity;
  if (!is_valid(q)) {
    QuatString r = q;
    r.set(m.index, now);
    if (!is_valid(r)) return MoveViolation::Validity;
  }

  if (m.index > 1) {
    const int lo = std::min(old, now);
    const int need = (lo % 2 == 0) ? 3 : 0;
    if (q.at(m.index - 1) != need) return MoveViolation::MazeTurn;
  }
  return std::nullopt;
}

std::vector<Move> legal_moves(const QuatString& q) {
  if (!is_valid(q)) throw DomainError("invalid state \"" + q.str() + "\"");
  std::vector<Move> out;
  for (std::size_t i = q.size(); i >= 1; --i) {
    for (int delta : {+1, -1}) {
      Move m{i, delta};
      if (!check_move(q, m)) out.push_back(m);
    }
  }
  return out;
}

QuatString apply_move(const QuatString& q, const Move& m) {
  if (!is_valid(q)) throw DomainError("invalid state \"" + q.str() + "\"");
  if (auto v = check_move(q, m)) {
    std::string why;
    switch (*v) {
      case MoveViolation::BadIndex: why = "no such digit or step"; break;
      case MoveViolation::OutOfRange: why = "digit would leave 0..3"; break;
      case MoveViolation::Validity: why = "result would have a non-3 right of a 3"; break;
      case MoveViolation::MazeTurn: why = "locked by the digit to its right"; break;
    }
    throw IllegalMove(*v, "illegal move " + to_string(m) + " at " + q.str() + ": " + why);
  }
  QuatString r = q;
  r.set(m.index, q.at(m.index) + m.delta);
  return r;
}

}  // namespace ziggu
