#include <doctest.h>

#include "ziggu/codes.hpp"
#include "ziggu/rulers.hpp"

using namespace ziggu;

namespace {

const Kind kAll[] = {Kind::Brgc, Kind::Quat, Kind::Long, Kind::Short};

std::size_t cap(Kind k) { return k == Kind::Quat ? 7 : 8; }

Alphabet alphabet(Kind k) { return k == Kind::Brgc ? Alphabet::Binary : Alphabet::Quaternary; }

// Differences between consecutive listing states, as signed values.
std::vector<int> changes_of(const SolutionList& l) {
  std::vector<int> out;
  for (std::size_t j = 1; j < l.states.size(); ++j)
    for (std::size_t i = 1; i <= l.n; ++i) {
      const int d = l.states[j].at(i) - l.states[j - 1].at(i);
      if (d) out.push_back(d > 0 ? static_cast<int>(i) : -static_cast<int>(i));
    }
  return out;
}

}  // namespace

TEST_CASE("published ruler values") {
  CHECK(values(ruler(Kind::Brgc, 3, false)) == std::vector<int>{1, 2, 1, 3, 1, 2, 1});
  const auto sb = values(ruler(Kind::Brgc, 5, true));
  CHECK(std::vector<int>(sb.begin(), sb.begin() + 8) == std::vector<int>{1, 2, -1, 3, 1, -2, -1, 4});
  CHECK(values(ruler(Kind::Short, 3, false)) ==
        std::vector<int>{1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3, 2, 1, 1, 1,
                         2, 1, 1, 1, 2, 3, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3});
  const auto ss = values(ruler(Kind::Short, 3, true));
  const std::vector<int> tail{-2, 3, 2, -1, -1, -1, 2, 1, 1, 1, 2, 3};
  REQUIRE(ss.size() >= tail.size());
  CHECK(std::vector<int>(ss.end() - tail.size(), ss.end()) == tail);
}

TEST_CASE("direct binary ruler entries") {
  CHECK(ruler_entry_binary(152, false).value() == 4);
  CHECK(ruler_entry_binary(152, true).value() == -4);
  CHECK(ruler_entry_binary(1, false).value() == 1);
  CHECK(ruler_entry_binary(1, true).value() == 1);
  for (bool sg : {false, true}) {
    const auto seq = ruler(Kind::Brgc, 12, sg);
    for (std::size_t j = 1; j <= seq.size(); ++j)
      CHECK(ruler_entry_binary(j, sg) == seq[j - 1]);
  }
  CHECK_THROWS(ruler_entry_binary(0, false));
}

TEST_CASE("ruler lengths") {
  for (std::size_t n = 1; n <= max_ruler_n(); ++n) {
    CHECK(ruler(Kind::Brgc, n, false).size() == (std::size_t{1} << n) - 1);
    CHECK(ruler(Kind::Short, n, true).size() == 6 * (std::size_t{1} << n) - 3 * n - 6);
    std::size_t p3 = 1;
    for (std::size_t k = 0; k <= n; ++k) p3 *= 3;
    CHECK(ruler(Kind::Long, n, false).size() == (p3 - 3) / 2);
    if (n <= 9) CHECK(ruler(Kind::Quat, n, true).size() == (std::size_t{1} << (2 * n)) - 1);
    for (Kind k : kAll)
      if (k != Kind::Quat || n <= 9)
        CHECK(count(k, n) == ruler(k, n, false).size() + 1);
  }
  CHECK_THROWS(ruler(Kind::Short, 0, true));
}

TEST_CASE("signed rulers are the differences of the listings") {
  for (Kind k : kAll)
    for (std::size_t n = 1; n <= cap(k); ++n)
      CHECK(values(ruler(k, n, true)) == changes_of(listing(k, n)));
}

TEST_CASE("signed and unsigned replays reproduce the listings") {
  CHECK(replay(parse("00"), {{1, +1}}) == std::vector<QuatString>{parse("00"), parse("01")});
  for (Kind k : kAll) {
    for (std::size_t n = 1; n <= cap(k); ++n) {
      const auto l = listing(k, n);
      const auto start = QuatString::zeros(n);
      CHECK(replay(start, ruler(k, n, true), alphabet(k)) == l.states);
      CHECK(replay(start, ruler(k, n, false), alphabet(k)) == l.states);
    }
  }
}

TEST_CASE("unsigned is the magnitude of signed") {
  for (Kind k : kAll)
    for (std::size_t n = 1; n <= (k == Kind::Quat ? 8u : 10u); ++n) {
      const auto s = ruler(k, n, true);
      const auto u = ruler(k, n, false);
      REQUIRE(s.size() == u.size());
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(s[j].index == u[j].index);
        CHECK(u[j].sign == 0);
        CHECK(s[j].sign != 0);
      }
    }
}

TEST_CASE("stair climbing and metronome") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto s = values(ruler(Kind::Short, n, false));
    for (std::size_t j = 1; j < s.size(); ++j) CHECK(std::abs(s[j] - s[j - 1]) <= 1);
    const auto b = values(ruler(Kind::Brgc, n, false));
    for (std::size_t j = 0; j < b.size(); j += 2) CHECK(b[j] == 1);
  }
}

TEST_CASE("both signed constructions agree; transforms coincide on palindromes") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (Kind k : {Kind::Brgc, Kind::Quat, Kind::Short}) {
      if (k == Kind::Quat && n > 7) continue;
      CHECK(signed_ruler_norev(k, n) == signed_ruler_reversing(k, n));
    }
    CHECK(signed_ruler_reversing(Kind::Long, n) == values(ruler(Kind::Long, n, true)));
    CHECK_THROWS(signed_ruler_norev(Kind::Long, n));
    // Unsigned binary and quaternary rulers are palindromes: reversal followed
    // by complementing everything equals complementing the largest entries
    // after an all-positive seed.
    for (Kind k : {Kind::Brgc, Kind::Quat}) {
      if (k == Kind::Quat && n > 7) continue;
      const auto u = values(ruler(k, n, false));
      CHECK(std::vector<int>(u.rbegin(), u.rend()) == u);
    }
  }
  CHECK(reverse_complement({1, 2, -1}) == std::vector<int>{1, -2, -1});
  CHECK(complement_max({1, 2, -1, 3, 1}) == std::vector<int>{1, 2, -1, -3, 1});
  CHECK(complement_mid({1, 2, -1}) == std::vector<int>{1, -2, -1});
  const std::vector<int> pal{1, 2, 1};
  CHECK(reverse_complement(pal) == std::vector<int>{-1, -2, -1});
}

TEST_CASE("ruler stream agrees with the materialized signed rulers") {
  for (Kind k : kAll)
    for (std::size_t n = 1; n <= cap(k); ++n) {
      RulerStream st(k, n);
      std::vector<ChangeEntry> got;
      ChangeEntry e;
      while (st.next(e)) got.push_back(e);
      CHECK(got == ruler(k, n, true));
    }
}

TEST_CASE("direction rule and replay errors") {
  CHECK(unsigned_direction(parse("001"), 1) == +1);
  CHECK(unsigned_direction(parse("013"), 1) == -1);
  CHECK(unsigned_direction(parse("103"), 1) == -1);
  CHECK(unsigned_direction(parse("112"), 1) == +1);
  CHECK(unsigned_direction(parse("100"), 1) == +1);
  CHECK_THROWS(replay(parse("03"), {{1, +1}}));
  CHECK_THROWS(replay(parse("1"), {{1, +1}}, Alphabet::Binary));
  CHECK_THROWS(replay(parse("00"), {{3, +1}}));
}
