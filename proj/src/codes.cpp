#include "ziggu/codes.hpp"

#include <string>

namespace ziggu {

Kind parse_kind(std::string_view name) {
  if (name == "brgc") return Kind::Brgc;
  if (name == "quat") return Kind::Quat;
  if (name == "long") return Kind::Long;
  if (name == "short") return Kind::Short;
  throw ParseError("unknown kind \"" + std::string(name) + "\"");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Brgc: return "brgc";
    case Kind::Quat: return "quat";
    case Kind::Long: return "long";
    case Kind::Short: return "short";
  }
  return "?";
}

namespace {

using List = std::vector<QuatString>;

void check_n(Kind kind, std::size_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > max_listing_n(kind))
    throw DomainError(std::string(kind_name(kind)) + " listings are materialized up to n = " +
                      std::to_string(max_listing_n(kind)) + "; use ListingCursor");
}

void append(List& out, const List& src, int leading, bool backwards) {
  if (backwards) {
    for (auto it = src.rbegin(); it != src.rend(); ++it) out.push_back(it->extended(leading));
  } else {
    for (const auto& q : src) out.push_back(q.extended(leading));
  }
}

List singles(int hi) {
  List out;
  for (int d = 0; d <= hi; ++d) out.push_back(QuatString(1, d));
  return out;
}

List brgc(std::size_t n) {
  List b = singles(1);
  for (std::size_t k = 2; k <= n; ++k) {
    List next;
    next.reserve(2 * b.size());
    append(next, b, 0, false);
    append(next, b, 1, true);
    b.swap(next);
  }
  return b;
}

List quat(std::size_t n) {
  List q = singles(3);
  for (std::size_t k = 2; k <= n; ++k) {
    List next;
    next.reserve(4 * q.size());
    append(next, q, 0, false);
    append(next, q, 1, true);
    append(next, q, 2, false);
    append(next, q, 3, true);
    q.swap(next);
  }
  return q;
}

List longest(std::size_t n) {
  List l = singles(3);
  for (std::size_t k = 2; k <= n; ++k) {
    List next;
    next.reserve(3 * l.size() + 1);
    append(next, l, 0, false);
    append(next, l, 1, true);
    append(next, l, 2, false);
    next.push_back(QuatString::solved(k));
    l.swap(next);
  }
  return l;
}

List core(std::size_t n) {
  List c = singles(3);
  for (std::size_t k = 2; k <= n; ++k) {
    List next;
    next.reserve(2 * c.size() + 2);
    next.push_back(QuatString::solved(k - 1).extended(0));
    append(next, c, 1, true);
    append(next, c, 2, false);
    next.push_back(QuatString::solved(k));
    c.swap(next);
  }
  return c;
}

List shortest(std::size_t n) {
  List s = singles(3);
  for (std::size_t k = 2; k <= n; ++k) {
    List c = core(k);
    List next;
    next.reserve(s.size() + c.size() - 1);
    append(next, s, 0, false);
    next.insert(next.end(), c.begin() + 1, c.end());
    s.swap(next);
  }
  return s;
}

BigInt pow_big(unsigned base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

std::size_t max_listing_n(Kind kind) { return kind == Kind::Quat ? 10 : 12; }

SolutionList listing(Kind kind, std::size_t n) {
  check_n(kind, n);
  SolutionList out{kind, n, {}};
  switch (kind) {
    case Kind::Brgc: out.states = brgc(n); break;
    case Kind::Quat: out.states = quat(n); break;
    case Kind::Long: out.states = longest(n); break;
    case Kind::Short: out.states = shortest(n); break;
  }
  return out;
}

std::vector<QuatString> core_list(std::size_t n) {
  check_n(Kind::Short, n);
  return core(n);
}

SolutionList greedy_brgc(std::size_t n) {
  if (n < 1 || n > 20) throw DomainError("greedy_brgc supports 1 <= n <= 20");
  std::vector<bool> seen(std::size_t{1} << n, false);
  SolutionList out{Kind::Brgc, n, {}};
  std::uint64_t x = 0;
  seen[0] = true;
  out.states.push_back(QuatString::zeros(n));
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t y = x ^ (std::uint64_t{1} << i);
      if (!seen[y]) {
        seen[y] = true;
        x = y;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    QuatString q(n);
    for (std::size_t i = 0; i < n; ++i) q.set(i + 1, static_cast<int>((x >> i) & 1u));
    out.states.push_back(std::move(q));
  }
  return out;
}

ListingCursor::ListingCursor(Kind kind, std::size_t n)
    : kind_(kind), q_(QuatString::zeros(n)), stream_(kind, n) {}

bool ListingCursor::advance() {
  ChangeEntry e;
  if (!stream_.next(e)) return false;
  apply_entry(q_, e, kind_ == Kind::Brgc ? Alphabet::Binary : Alphabet::Quaternary);
  last_ = e;
  ++pos_;
  return true;
}

BigInt count(Kind kind, std::size_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  switch (kind) {
    case Kind::Brgc: return pow_big(2, n);
    case Kind::Quat: return pow_big(4, n);
    case Kind::Long: return (pow_big(3, n + 1) - 1) / 2;
    case Kind::Short: return 6 * pow_big(2, n) - 3 * BigInt(n) - 5;
  }
  return 0;
}

BigInt recurrence_count(Kind kind, std::size_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  switch (kind) {
    case Kind::Brgc: {
      BigInt g = 2;
      for (std::size_t k = 2; k <= n; ++k) g = 2 * g;
      return g;
    }
    case Kind::Quat: {
      BigInt g = 4;
      for (std::size_t k = 2; k <= n; ++k) g = 4 * g;
      return g;
    }
    case Kind::Long: {
      BigInt g = 4;
      for (std::size_t k = 2; k <= n; ++k) g = 3 * g + 1;
      return g;
    }
    case Kind::Short: {
      if (n == 1) return 4;
      BigInt a = 4, b = 13;
      for (std::size_t k = 3; k <= n; ++k) {
        BigInt c = 3 * b - 2 * a + 3;
        a = b;
        b = c;
      }
      return b;
    }
  }
  return 0;
}

BigInt move_count(Kind kind, std::size_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  switch (kind) {
    case Kind::Long: return (pow_big(3, n + 1) - 3) / 2;
    case Kind::Short: return 6 * pow_big(2, n) - 3 * BigInt(n) - 6;
    default: return count(kind, n) - 1;
  }
}

BigInt recurrence_move_count(Kind kind, std::size_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  switch (kind) {
    case Kind::Long: {
      BigInt f = 3;
      for (std::size_t k = 2; k <= n; ++k) f = 3 * f + 3;
      return f;
    }
    case Kind::Short: {
      if (n == 1) return 3;
      BigInt a = 3, b = 12;
      for (std::size_t k = 3; k <= n; ++k) {
        BigInt c = 3 * b - 2 * a + 3;
        a = b;
        b = c;
      }
      return b;
    }
    default: return recurrence_count(kind, n) - 1;
  }
}

BigInt classic_count(Puzzle p, std::size_t n, Quantity q) {
  if (n < 1) throw DomainError("n must be at least 1");
  const BigInt two_n = pow_big(2, n);
  if (p == Puzzle::Hanoi) return q == Quantity::Moves ? two_n - 1 : two_n;
  const BigInt t = 2 * two_n;
  if (q == Quantity::Moves) return t / 3;
  return (t + 2) / 3;
}

BigInt classic_recurrence(Puzzle p, std::size_t n, Quantity q) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (p == Puzzle::Hanoi) {
    BigInt f = q == Quantity::Moves ? 1 : 2;
    for (std::size_t k = 2; k <= n; ++k) {
      if (q == Quantity::Moves) f = 2 * f + 1;
      else f = 2 * f;
    }
    return f;
  }
  BigInt a = q == Quantity::Moves ? 1 : 2;
  BigInt b = q == Quantity::Moves ? 2 : 3;
  const int c = q == Quantity::Moves ? 1 : -1;
  if (n == 1) return a;
  for (std::size_t k = 3; k <= n; ++k) {
    BigInt next = b + 2 * a + c;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace ziggu
