#pragma once

// Brute-force ground truth built only from the move model in state.hpp.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ziggu/kernels.hpp"
#include "ziggu/nurikabe.hpp"
#include "ziggu/state.hpp"

namespace ziggu::oracle {

using kernels::Edge;

class StateGraph {
 public:
  StateGraph(std::size_t n, std::vector<std::uint64_t> codes, kernels::Adjacency adj);

  std::size_t n() const { return n_; }
  std::size_t size() const { return codes_.size(); }
  std::size_t edge_count() const { return adj_.edges.size() / 2; }

  std::optional<std::uint32_t> find(const QuatString& q) const;
  std::uint32_t vertex(const QuatString& q) const;  // throws if absent
  QuatString state(std::uint32_t v) const { return QuatString::unpack(codes_[v], n_); }
  std::span<const Edge> neighbors(std::uint32_t v) const {
    return {adj_.edges.data() + adj_.offsets[v], adj_.edges.data() + adj_.offsets[v + 1]};
  }
  std::size_t degree(std::uint32_t v) const { return adj_.offsets[v + 1] - adj_.offsets[v]; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> codes_;  // sorted packed states
  kernels::Adjacency adj_;
};

constexpr std::size_t kMaxGraphN = 12;

// Every valid state of length n, as sorted packed codes.
std::vector<std::uint64_t> valid_codes(std::size_t n);

StateGraph build_graph(std::size_t n, bool parallel = false);

// Process-wide cache of graphs and of distances to 3^n, for repeated queries.
std::shared_ptr<const StateGraph> shared_graph(std::size_t n);
std::shared_ptr<const std::vector<std::int32_t>> shared_distances_to_solved(std::size_t n);

std::vector<std::int32_t> bfs_distances(const StateGraph& g, std::uint32_t source);
std::vector<QuatString> bfs_path(const StateGraph& g, const QuatString& from, const QuatString& to);
// Number of shortest paths (saturating at UINT64_MAX).
std::uint64_t count_geodesics(const StateGraph& g, const QuatString& from, const QuatString& to);

bool is_hamilton_path(const StateGraph& g, const std::vector<QuatString>& states);
// Hamilton paths starting at start, counted by backtracking; stops at limit.
std::uint64_t count_hamilton_paths(const StateGraph& g, const QuatString& start,
                                   std::uint64_t limit = 1000);

enum class Side { Leftmost, Rightmost };
// From 0^n, take the highest (Leftmost) or lowest (Rightmost) non-reversing
// edge until 3^n; +1 breaks ties on one digit.
std::vector<QuatString> greedy_walk(const StateGraph& g, Side side, std::size_t budget);

struct DegreeStats {
  std::size_t max_degree = 0;
  std::vector<QuatString> max_witnesses;
  std::vector<QuatString> degree_one;
  std::map<std::size_t, std::size_t> histogram;
};
DegreeStats degree_stats(const StateGraph& g);

// Largest number of non-reversing moves at any state of a path (entering
// move excluded; the first state counts all its moves).
std::size_t max_non_reversing(const StateGraph& g, const std::vector<QuatString>& path);

// Geodesic from q to 3^n using the cached graph (n <= 12).
std::vector<QuatString> solve_bfs(const QuatString& q);

// All valid 2 x n grids, by running is_valid_grid on every colouring.
std::vector<NurikabeGrid> enumerate_nurikabe(std::size_t n);

}  // namespace ziggu::oracle
