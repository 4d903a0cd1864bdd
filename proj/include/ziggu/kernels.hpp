#pragma once

// Exhaustive sweeps used by the verification suite. Each exists as a plain
// loop (serial) and as an OpenMP loop (parallel) with identical results.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ziggu/kind.hpp"
#include "ziggu/state.hpp"

namespace ziggu::kernels {

struct EncodingCounts {
  std::uint64_t valid = 0;
  std::uint64_t ziggu = 0;
  friend bool operator==(const EncodingCounts&, const EncodingCounts&) = default;
};

struct GridCounts {
  std::uint64_t total = 0;
  std::uint64_t all_columns_black = 0;  // every column has a black cell
  std::uint64_t with_white_column = 0;
  friend bool operator==(const GridCounts&, const GridCounts&) = default;
};

struct Edge {
  std::uint32_t to;
  std::uint8_t index;
  std::int8_t delta;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Adjacency {
  std::vector<std::uint32_t> offsets;  // size |V| + 1
  std::vector<Edge> edges;
  friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

// Column-code test for 2 x n grids: black columns contiguous, neighbours
// share a black row, no two all-black columns side by side.
bool grid_code_valid(std::uint64_t code, std::size_t n);

bool parallel_enabled();
int thread_count();

namespace serial {
EncodingCounts count_encodings(std::size_t n);     // all 4^n words
GridCounts count_grids(std::size_t n);             // all 4^n colourings
std::vector<std::uint64_t> valid_grid_codes(std::size_t n);
std::uint64_t rank_mismatches(Kind kind, const std::vector<QuatString>& list);
std::uint64_t compare_violations(const std::vector<QuatString>& list);
Adjacency build_adjacency(std::size_t n, const std::vector<std::uint64_t>& sorted_codes);
}  // namespace serial

namespace parallel {
EncodingCounts count_encodings(std::size_t n);
GridCounts count_grids(std::size_t n);
std::vector<std::uint64_t> valid_grid_codes(std::size_t n);
std::uint64_t rank_mismatches(Kind kind, const std::vector<QuatString>& list);
std::uint64_t compare_violations(const std::vector<QuatString>& list);
Adjacency build_adjacency(std::size_t n, const std::vector<std::uint64_t>& sorted_codes);
}  // namespace parallel

}  // namespace ziggu::kernels
