#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ziggu/errors.hpp"

namespace ziggu {

// An n-digit base-4 word q_n ... q_2 q_1. Position 1 is the rightmost
// digit; the text form is written leftmost first.
class QuatString {
 public:
  QuatString() = default;
  explicit QuatString(std::size_t n, int fill = 0);

  static QuatString parse(std::string_view text);
  static QuatString zeros(std::size_t n) { return QuatString(n, 0); }
  static QuatString solved(std::size_t n) { return QuatString(n, 3); }
  // Digit string read left to right (w[0] is q_n).
  static QuatString from_left_to_right(const std::vector<int>& w);

  std::size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  // 1-based, right to left.
  int at(std::size_t i) const { return d_[i - 1]; }
  void set(std::size_t i, int v) { d_[i - 1] = static_cast<std::uint8_t>(v); }

  std::string str() const;
  std::vector<int> left_to_right() const;

  // d[0] is q_1.
  const std::vector<std::uint8_t>& raw() const { return d_; }

  // Base-4 value with q_1 as the least significant digit (n <= 32).
  std::uint64_t packed() const;
  static QuatString unpack(std::uint64_t code, std::size_t n);

  bool all_equal(int v) const;

  // Copy with one more digit on the left.
  QuatString extended(int leading) const;

  friend bool operator==(const QuatString&, const QuatString&) = default;
  friend auto operator<=>(const QuatString& a, const QuatString& b) {
    return a.d_ <=> b.d_;
  }

 private:
  std::vector<std::uint8_t> d_;
};

QuatString parse(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuatString& q);

// {0,1,2}* 3*
bool is_valid(const QuatString& q);
// 0* [12]* 0? 3*
bool is_ziggu(const QuatString& q);
// digits restricted to {0,1}
bool is_binary(const QuatString& q);

// Name of the rule an invalid state breaks; empty for valid states.
std::string validity_rule(const QuatString& q);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

using MazeVector = std::vector<Cell>;

bool is_valid_cell(Cell c);
MazeVector to_maze(const QuatString& q);
QuatString from_maze(const MazeVector& mv);

struct Move {
  std::size_t index = 1;
  int delta = +1;

  Move inverse() const { return {index, -delta}; }
  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);  // "+3", "-1"

std::optional<MoveViolation> check_move(const QuatString& q, const Move& m);
// Ordered by decreasing index, +1 before -1.
std::vector<Move> legal_moves(const QuatString& q);
QuatString apply_move(const QuatString& q, const Move& m);

}  // namespace ziggu
