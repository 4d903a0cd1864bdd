#include <doctest.h>

#include "reference.hpp"
#include "ziggu/codes.hpp"
#include "ziggu/oracle.hpp"
#include "ziggu/rank.hpp"
#include "ziggu/stepper.hpp"

using namespace ziggu;

namespace {

const Kind kQuaternary[] = {Kind::Quat, Kind::Long, Kind::Short};

}  // namespace

TEST_CASE("published successors") {
  CHECK(next(Kind::Quat, parse("012310")).state.str() == "012320");
  CHECK(next(Kind::Long, parse("20103")).state.str() == "20102");
  CHECK(next(Kind::Short, parse("20103")).state.str() == "20203");
  CHECK(next(Kind::Quat, parse("300")).status == StepOutcome::Status::Solved);
  CHECK(next(Kind::Short, parse("333")).status == StepOutcome::Status::Solved);
  CHECK(prev(Kind::Short, parse("20203")).state.str() == "20103");
  CHECK(prev(Kind::Quat, parse("0000")).status == StepOutcome::Status::First);
  CHECK(prev(Kind::Long, parse("20102")).state.str() == "20103");
  const auto s = next(Kind::Short, parse("20103"));
  CHECK(s.move == Move{3, +1});
  CHECK_THROWS_AS(next(Kind::Short, parse("130")), DomainError);
  CHECK_THROWS_AS(next(Kind::Brgc, parse("120")), DomainError);
  CHECK_FALSE(on_listing(Kind::Short, parse("20103")));
  CHECK_THROWS_AS(prev(Kind::Long, parse("130")), DomainError);
}

TEST_CASE("iterating next reproduces every listing; prev walks it backwards") {
  for (Kind k : kQuaternary) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto l = listing(k, n);
      QuatString q = QuatString::zeros(n);
      std::size_t j = 0;
      bool ok = q == l.states[0];
      for (;;) {
        const auto o = next(k, q);
        if (!o.moved()) break;
        ++j;
        ok = ok && j < l.states.size() && o.state == l.states[j];
        ok = ok && prev(k, o.state).state == q;
        q = o.state;
      }
      CHECK_MESSAGE(ok, kind_name(k), " n=", n);
      CHECK(j + 1 == l.states.size());
      CHECK(next(k, l.states.back()).status == StepOutcome::Status::Solved);
      CHECK(prev(k, l.states.front()).status == StepOutcome::Status::First);
    }
  }
}

TEST_CASE("the shortest-solution rule off its listing") {
  // Defined at every valid state except 3^n, and lands on a valid state.
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& q : listing(Kind::Long, n).states) {
      const auto o = next(Kind::Short, q);
      if (q.all_equal(3)) {
        CHECK(o.status == StepOutcome::Status::Solved);
        continue;
      }
      REQUIRE(o.moved());
      CHECK(is_valid(o.state));
      if (is_ziggu(q)) CHECK(is_ziggu(o.state));
      const auto back = prev(Kind::Short, o.state);
      REQUIRE(back.moved());
      CHECK(next(Kind::Short, back.state).state == o.state);
      if (is_ziggu(q)) CHECK(back.state == q);
    }
  }
}

TEST_CASE("Brgc successor") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto l = listing(Kind::Brgc, n);
    for (std::size_t j = 0; j + 1 < l.states.size(); ++j) {
      CHECK(next(Kind::Brgc, l.states[j]).state == l.states[j + 1]);
      CHECK(prev(Kind::Brgc, l.states[j + 1]).state == l.states[j]);
    }
  }
}

TEST_CASE("compare") {
  CHECK(compare(parse("101"), parse("100")) == Ordering::Before);
  CHECK(compare(parse("11013"), parse("11023")) == Ordering::Before);
  CHECK(compare(parse("1203"), parse("1203")) == Ordering::Equal);
  CHECK(compare(parse("1110010"), parse("1111111")) == Ordering::After);
  CHECK_THROWS_AS(compare(parse("11"), parse("111")), DomainError);
  CHECK(std::string(to_string(Ordering::Before)) == "before");
  for (Kind k : {Kind::Brgc, Kind::Quat, Kind::Long, Kind::Short}) {
    for (std::size_t n = 1; n <= (k == Kind::Quat ? 5u : 6u); ++n) {
      const auto l = listing(k, n);
      bool ok = true;
      for (std::size_t a = 0; a < l.states.size(); ++a)
        for (std::size_t b = 0; b < l.states.size(); ++b) {
          const auto want = a < b ? Ordering::Before : a == b ? Ordering::Equal : Ordering::After;
          ok = ok && compare(l.states[a], l.states[b]) == want;
        }
      CHECK_MESSAGE(ok, kind_name(k), " n=", n);
    }
  }
}

TEST_CASE("greedy walks") {
  CHECK(greedy_step(QuatString::zeros(6), std::nullopt, Side::Leftmost) == Move{1, +1});
  CHECK(greedy_step(QuatString::zeros(6), std::nullopt, Side::Rightmost) == Move{1, +1});
  CHECK_FALSE(greedy_step(parse("3"), Move{1, +1}, Side::Leftmost).has_value());
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(greedy_walk(QuatString::zeros(n), Side::Leftmost, 1u << 20) == listing(Kind::Short, n).states);
    CHECK(greedy_walk(QuatString::zeros(n), Side::Rightmost, 1u << 20) == listing(Kind::Long, n).states);
  }
  CHECK_THROWS_AS(greedy_walk(QuatString::zeros(6), Side::Rightmost, 10), DomainError);
}

TEST_CASE("solve paths end at 3^n") {
  CHECK(solve_path(parse("333"), SolveMode::Bfs).empty());
  CHECK(solve_path(parse("333"), SolveMode::ShortestList).empty());
  CHECK(solve_path(parse("103"), SolveMode::ShortestList).size() == 11);
  CHECK(solve_path(parse("103"), SolveMode::LongestList).size() == 17);
  CHECK_THROWS_AS(solve_path(parse("102"), SolveMode::ShortestList), DomainError);
  CHECK_THROWS_AS(solve_path(parse("130"), SolveMode::Bfs), DomainError);
  const auto g = oracle::build_graph(5);
  const auto dist = oracle::bfs_distances(g, g.vertex(QuatString::solved(5)));
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const auto q = g.state(v);
    const auto path = solve_path(q, SolveMode::Bfs);
    CHECK(static_cast<std::int32_t>(path.size()) == dist[v]);
    auto cur = q;
    for (const auto& m : path) cur = apply_move(cur, m);
    CHECK(cur == QuatString::solved(5));
    const auto lp = solve_path(q, SolveMode::LongestList);
    CHECK(BigInt(lp.size()) == count(Kind::Long, 5) - 1 - rank(Kind::Long, q));
  }
}
