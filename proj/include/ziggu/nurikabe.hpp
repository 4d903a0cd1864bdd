#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ziggu/state.hpp"

namespace ziggu {

// Column colourings of a 2 x n grid: bit 1 = top cell black, bit 0 = bottom
// cell black.
enum Column : std::uint8_t { WW = 0, WB = 1, BW = 2, BB = 3 };

struct NurikabeGrid {
  std::vector<std::uint8_t> columns;  // left to right

  std::size_t size() const { return columns.size(); }
  bool black(int row, std::size_t col) const {  // row 0 = top, col 0-based
    return (columns[col] >> (row == 0 ? 1 : 0)) & 1u;
  }
  // Two lines of '#' (black) and '.' (white), top row first.
  std::string str() const;
  static NurikabeGrid parse(std::string_view text);
  // Base-4 number with the leftmost column most significant.
  std::uint64_t code() const;
  static NurikabeGrid from_code(std::uint64_t code, std::size_t n);

  friend bool operator==(const NurikabeGrid&, const NurikabeGrid&) = default;
  friend auto operator<=>(const NurikabeGrid& a, const NurikabeGrid& b) {
    return a.columns <=> b.columns;
  }
};

// Black cells edge-connected (none at all is fine) and no 2x2 black block.
bool is_valid_grid(const NurikabeGrid& g);
bool has_white_column(const NurikabeGrid& g);  // true for the empty grid

// Bijection from shortest-solution states to valid grids. Column j of the
// grid corresponds to the j-th character of the text form.
NurikabeGrid sigma(const QuatString& w);
QuatString sigma_inverse(const NurikabeGrid& g);

// Swap digits 1 and 2.
QuatString rho(const QuatString& w);
// Swap top and bottom rows.
NurikabeGrid mirror(const NurikabeGrid& g);
// sigma(rho(w)) == mirror(sigma(w))
bool reflection_check(const QuatString& w);

struct NurikabeCounts {
  std::uint64_t a = 0;  // all valid grids
  std::uint64_t b = 0;  // every column has a black cell
  std::uint64_t c = 0;  // some column is all white
};

// Closed forms: a = 6*2^n - 3n - 5, b = 3*2^(n-1), c = 9*2^(n-1) - 3n - 5.
NurikabeCounts nurikabe_counts(std::size_t n);

}  // namespace ziggu
