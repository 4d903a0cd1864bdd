#include "ziggu/rulers.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ziggu {

namespace {

constexpr std::size_t kMaxRulerN = 12;

void check_n(std::size_t n, std::size_t limit) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > limit)
    throw DomainError("n = " + std::to_string(n) + " exceeds the materialization limit " +
                      std::to_string(limit) + "; use RulerStream");
}

std::vector<int> cat(std::initializer_list<const std::vector<int>*> parts) {
  std::size_t len = 0;
  for (auto* p : parts) len += p->size();
  std::vector<int> out;
  out.reserve(len);
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::vector<int> reversed(const std::vector<int>& s) { return {s.rbegin(), s.rend()}; }

// Unsigned recursions.
std::vector<int> unsigned_binary(std::size_t n) {
  if (n == 1) return {1};
  auto r = unsigned_binary(n - 1);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &r});
}

std::vector<int> unsigned_quat(std::size_t n) {
  if (n == 1) return {1, 1, 1};
  auto r = unsigned_quat(n - 1);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &r, &mid, &r, &mid, &r});
}

std::vector<int> unsigned_long(std::size_t n) {
  if (n == 1) return {1, 1, 1};
  auto r = unsigned_long(n - 1);
  auto rr = reversed(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &rr, &mid, &r, &mid});
}

std::vector<int> unsigned_short(std::size_t n, bool flag) {
  if (n == 1) return {1, 1, 1};
  auto core = unsigned_short(n - 1, false);
  auto rcore = reversed(core);
  std::vector<int> mid{static_cast<int>(n)};
  std::vector<int> head = flag ? unsigned_short(n - 1, true) : std::vector<int>{};
  return cat({&head, &mid, &rcore, &mid, &core, &mid});
}

// Signed, reversing form.
std::vector<int> rev_binary(std::size_t n) {
  if (n == 1) return {1};
  auto r = rev_binary(n - 1);
  auto rc = reverse_complement(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &rc});
}

std::vector<int> rev_quat(std::size_t n) {
  if (n == 1) return {1, 1, 1};
  auto r = rev_quat(n - 1);
  auto rc = reverse_complement(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &rc, &mid, &r, &mid, &rc});
}

std::vector<int> rev_long(std::size_t n) {
  if (n == 1) return {1, 1, 1};
  auto r = rev_long(n - 1);
  auto rc = reverse_complement(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &rc, &mid, &r, &mid});
}

std::vector<int> rev_short(std::size_t n, bool flag) {
  if (n == 1) return {1, 1, 1};
  auto core = rev_short(n - 1, false);
  auto rc = reverse_complement(core);
  std::vector<int> mid{static_cast<int>(n)};
  std::vector<int> head = flag ? rev_short(n - 1, true) : std::vector<int>{};
  return cat({&head, &mid, &rc, &mid, &core, &mid});
}

// Signed, non-reversing form.
std::vector<int> norev_binary(std::size_t n) {
  if (n == 1) return {1};
  auto r = norev_binary(n - 1);
  auto c = complement_mid(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &c});
}

std::vector<int> norev_quat(std::size_t n) {
  if (n == 1) return {1, 1, 1};
  auto r = norev_quat(n - 1);
  auto c = complement_max(r);
  std::vector<int> mid{static_cast<int>(n)};
  return cat({&r, &mid, &c, &mid, &r, &mid, &c});
}

std::vector<int> norev_short(std::size_t n, bool flag) {
  if (n == 1) return {1, 1, 1};
  auto core = norev_short(n - 1, false);
  auto c = complement_max(core);
  std::vector<int> mid{static_cast<int>(n)};
  std::vector<int> head = flag ? norev_short(n - 1, true) : std::vector<int>{};
  return cat({&head, &mid, &c, &mid, &core, &mid});
}

}  // namespace

std::size_t max_ruler_n() { return kMaxRulerN; }

std::vector<int> reverse_complement(const std::vector<int>& s) {
  std::vector<int> out(s.rbegin(), s.rend());
  for (int& v : out) v = -v;
  return out;
}

std::vector<int> complement_max(const std::vector<int>& s) {
  int top = 0;
  for (int v : s) top = std::max(top, std::abs(v));
  std::vector<int> out = s;
  for (int& v : out)
    if (std::abs(v) == top) v = -v;
  return out;
}

std::vector<int> complement_mid(const std::vector<int>& s) {
  std::vector<int> out = s;
  if (!out.empty()) out[out.size() / 2] = -out[out.size() / 2];
  return out;
}

std::vector<int> signed_ruler_reversing(Kind kind, std::size_t n) {
  check_n(n, kMaxRulerN);
  switch (kind) {
    case Kind::Brgc: return rev_binary(n);
    case Kind::Quat: return rev_quat(n);
    case Kind::Long: return rev_long(n);
    case Kind::Short: return rev_short(n, true);
  }
  return {};
}

std::vector<int> signed_ruler_norev(Kind kind, std::size_t n) {
  check_n(n, kMaxRulerN);
  switch (kind) {
    case Kind::Brgc: return norev_binary(n);
    case Kind::Quat: return norev_quat(n);
    case Kind::Long: throw DomainError("the longest-solution ruler has no non-reversing form");
    case Kind::Short: return norev_short(n, true);
  }
  return {};
}

std::vector<int> values(const std::vector<ChangeEntry>& seq) {
  std::vector<int> out;
  out.reserve(seq.size());
  for (const auto& e : seq) out.push_back(e.value());
  return out;
}

std::vector<ChangeEntry> entries(const std::vector<int>& vals, bool is_signed) {
  std::vector<ChangeEntry> out;
  out.reserve(vals.size());
  for (int v : vals) {
    if (v == 0) throw DomainError("change entries are nonzero");
    out.push_back({static_cast<std::size_t>(std::abs(v)), is_signed ? (v > 0 ? 1 : -1) : 0});
  }
  return out;
}

std::vector<ChangeEntry> ruler(Kind kind, std::size_t n, bool is_signed) {
  check_n(n, kMaxRulerN);
  if (is_signed) {
    return entries(kind == Kind::Long ? rev_long(n) : signed_ruler_norev(kind, n), true);
  }
  switch (kind) {
    case Kind::Brgc: return entries(unsigned_binary(n), false);
    case Kind::Quat: return entries(unsigned_quat(n), false);
    case Kind::Long: return entries(unsigned_long(n), false);
    case Kind::Short: return entries(unsigned_short(n, true), false);
  }
  return {};
}

ChangeEntry ruler_entry_binary(std::uint64_t j, bool is_signed) {
  if (j < 1) throw DomainError("ruler positions start at 1");
  const int v = __builtin_ctzll(j);
  const std::uint64_t odd = j >> v;
  ChangeEntry e{static_cast<std::size_t>(v + 1), 0};
  if (is_signed) e.sign = (odd % 4 == 1) ? 1 : -1;
  return e;
}

namespace {

struct Part {
  bool child;
  bool flag;     // child's flag
  bool flipped;  // child gets reverse + complement
};

constexpr Part L{false, false, false};
constexpr Part C(bool flag, bool flipped) { return {true, flag, flipped}; }

constexpr Part kBase1[] = {L};
constexpr Part kBase3[] = {L, L, L};
constexpr Part kBinary[] = {C(false, false), L, C(false, true)};
constexpr Part kQuat[] = {C(false, false), L, C(false, true), L, C(false, false), L, C(false, true)};
constexpr Part kLong[] = {C(false, false), L, C(false, true), L, C(false, false), L};
constexpr Part kShort1[] = {C(true, false), L, C(false, true), L, C(false, false), L};
constexpr Part kShort0[] = {L, C(false, true), L, C(false, false), L};

struct PartList {
  const Part* p;
  std::uint8_t len;
};

template <std::size_t N>
constexpr PartList list(const Part (&a)[N]) {
  return {a, static_cast<std::uint8_t>(N)};
}

PartList parts(Kind kind, std::uint32_t n, bool flag) {
  if (n == 1) return kind == Kind::Brgc ? list(kBase1) : list(kBase3);
  switch (kind) {
    case Kind::Brgc: return list(kBinary);
    case Kind::Quat: return list(kQuat);
    case Kind::Long: return list(kLong);
    case Kind::Short: return flag ? list(kShort1) : list(kShort0);
  }
  return list(kBase1);
}

}  // namespace

RulerStream::RulerStream(Kind kind, std::size_t n) : kind_(kind) {
  if (n < 1) throw DomainError("n must be at least 1");
  stack_.reserve(n + 1);
  stack_.push_back({static_cast<std::uint32_t>(n), true, false, 0});
}

bool RulerStream::next(ChangeEntry& out) {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const PartList pl = parts(kind_, f.n, f.flag);
    if (f.pos == pl.len) {
      stack_.pop_back();
      continue;
    }
    const Part& part = pl.p[f.flipped ? pl.len - 1 - f.pos : f.pos];
    ++f.pos;
    if (!part.child) {
      out.index = f.n;
      out.sign = f.flipped ? -1 : 1;
      return true;
    }
    const Frame child{f.n - 1, part.flag, part.flipped != f.flipped, 0};
    stack_.push_back(child);
  }
  return false;
}

int unsigned_direction(const QuatString& q, std::size_t i) {
  const int d = q.at(i);
  if (d == 0) return 1;
  if (d == 3) return -1;
  int left = 0;
  for (std::size_t j = i + 1; j <= q.size(); ++j) left += q.at(j);
  return left % 2 == 0 ? 1 : -1;
}

void apply_entry(QuatString& q, const ChangeEntry& e, Alphabet alphabet) {
  if (e.index < 1 || e.index > q.size())
    throw DomainError("change entry " + std::to_string(e.index) + " out of range");
  const int d = q.at(e.index);
  if (alphabet == Alphabet::Binary) {
    if (d > 1) throw DomainError("non-binary digit in binary replay");
    int now = 1 - d;
    if (e.sign != 0 && now != (e.sign > 0 ? 1 : 0))
      throw DomainError("signed entry " + std::to_string(e.value()) + " does not apply to " +
                        q.str());
    q.set(e.index, now);
    return;
  }
  const int dir = e.sign != 0 ? e.sign : unsigned_direction(q, e.index);
  const int now = d + dir;
  if (now < 0 || now > 3)
    throw DomainError("entry " + std::to_string(e.value()) + " drives digit " +
                      std::to_string(e.index) + " of " + q.str() + " outside 0..3");
  q.set(e.index, now);
}

std::vector<QuatString> replay(const QuatString& start, const std::vector<ChangeEntry>& seq,
                               Alphabet alphabet) {
  std::vector<QuatString> out;
  out.reserve(seq.size() + 1);
  out.push_back(start);
  QuatString q = start;
  for (const auto& e : seq) {
    apply_entry(q, e, alphabet);
    out.push_back(q);
  }
  return out;
}

}  // namespace ziggu
