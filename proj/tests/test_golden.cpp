#include <doctest.h>

#include "golden.hpp"
#include "ziggu/codes.hpp"
#include "ziggu/rank.hpp"
#include "ziggu/rulers.hpp"

using namespace ziggu;

namespace {

const Kind kCols[3] = {Kind::Quat, Kind::Long, Kind::Short};

std::vector<golden::Row> rows() { return golden::read_orders(ZIGGU_GOLDEN_DIR "/orders_n3.txt"); }

}  // namespace

TEST_CASE("golden table shape") {
  const auto r = rows();
  REQUIRE(r.size() == 64);
  CHECK(golden::column_states(r, 0).size() == 64);
  CHECK(golden::column_states(r, 1).size() == 40);
  CHECK(golden::column_states(r, 2).size() == 34);
}

TEST_CASE("listings at n = 3 reproduce the table in order") {
  const auto r = rows();
  for (int c = 0; c < 3; ++c) {
    std::vector<std::string> got;
    for (const auto& q : listing(kCols[c], 3).states) got.push_back(q.str());
    CHECK(got == golden::column_states(r, c));
  }
}

TEST_CASE("skip positions, ranks and changes per row") {
  const auto r = rows();
  for (std::size_t row = 0; row < r.size(); ++row) {
    const auto& quat = r[row].cols[0];
    CHECK(*quat.rank == static_cast<long>(row));
    const auto q = parse(quat.state);
    CHECK(r[row].cols[1].rank.has_value() == is_valid(q));
    CHECK(r[row].cols[2].rank.has_value() == is_ziggu(q));
    for (int c = 0; c < 3; ++c) {
      const auto& cell = r[row].cols[c];
      if (!cell.rank) {
        CHECK(cell.state == "-");
        CHECK_THROWS_AS(rank(kCols[c], q), DomainError);
        continue;
      }
      CHECK(cell.state == quat.state);
      CHECK(rank(kCols[c], q) == *cell.rank);
      const auto u = ruler(kCols[c], 3, false);
      const auto s = ruler(kCols[c], 3, true);
      const auto k = static_cast<std::size_t>(*cell.rank);
      if (k < u.size()) {
        REQUIRE(cell.ruler.has_value());
        CHECK(u[k].value() == *cell.ruler);
        CHECK(s[k].value() == *cell.signed_ruler);
      } else {
        CHECK_FALSE(cell.ruler.has_value());
      }
    }
  }
}
