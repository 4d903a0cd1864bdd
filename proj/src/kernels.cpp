#include "ziggu/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ziggu/rank.hpp"
#include "ziggu/stepper.hpp"

namespace ziggu::kernels {

namespace {

void check_n(std::size_t n, std::size_t hi) {
  if (n > hi) throw DomainError("exhaustive sweep limited to n <= " + std::to_string(hi));
}

std::uint64_t pow4(std::size_t n) { return std::uint64_t{1} << (2 * n); }

void load(QuatString& q, std::uint64_t code) {
  for (std::size_t i = 1; i <= q.size(); ++i) {
    q.set(i, static_cast<int>(code & 3u));
    code >>= 2;
  }
}

void classify_grid(std::uint64_t code, std::size_t n, GridCounts& c) {
  if (!grid_code_valid(code, n)) return;
  ++c.total;
  bool white = false;
  for (std::size_t j = 0; j < n; ++j)
    if (((code >> (2 * j)) & 3u) == 0) white = true;
  if (n == 0 || white) ++c.with_white_column;
  else ++c.all_columns_black;
}

bool pair_ok(const QuatString& a, const QuatString& b) {
  return compare(a, b) == Ordering::Before && compare(b, a) == Ordering::After;
}

std::uint32_t lookup(const std::vector<std::uint64_t>& codes, std::uint64_t c) {
  auto it = std::lower_bound(codes.begin(), codes.end(), c);
  if (it == codes.end() || *it != c) throw DomainError("neighbour missing from vertex set");
  return static_cast<std::uint32_t>(it - codes.begin());
}

void edges_of(std::size_t n, std::uint64_t code, const std::vector<std::uint64_t>& codes,
              std::vector<Edge>& out) {
  const QuatString q = QuatString::unpack(code, n);
  for (const Move& m : legal_moves(q)) {
    const std::uint64_t shift = 2 * (m.index - 1);
    const std::uint64_t to = m.delta > 0 ? code + (std::uint64_t{1} << shift)
                                         : code - (std::uint64_t{1} << shift);
    out.push_back({lookup(codes, to), static_cast<std::uint8_t>(m.index),
                   static_cast<std::int8_t>(m.delta)});
  }
}

}  // namespace

bool grid_code_valid(std::uint64_t code, std::size_t n) {
  int prev = 0;
  bool started = false, ended = false;
  for (std::size_t j = 0; j < n; ++j) {
    const int c = static_cast<int>((code >> (2 * j)) & 3u);
    if (c == 0) {
      if (started) ended = true;
    } else {
      if (ended) return false;
      if (started && (c & prev) == 0) return false;
      if (c == 3 && prev == 3) return false;
      started = true;
    }
    prev = c;
  }
  return true;
}

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

EncodingCounts count_encodings(std::size_t n) {
  check_n(n, 13);
  EncodingCounts c;
  QuatString q(n);
  for (std::uint64_t x = 0; x < pow4(n); ++x) {
    load(q, x);
    if (is_valid(q)) ++c.valid;
    if (is_ziggu(q)) ++c.ziggu;
  }
  return c;
}

GridCounts count_grids(std::size_t n) {
  check_n(n, 13);
  GridCounts c;
  for (std::uint64_t x = 0; x < pow4(n); ++x) classify_grid(x, n, c);
  return c;
}

std::vector<std::uint64_t> valid_grid_codes(std::size_t n) {
  check_n(n, 13);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < pow4(n); ++x)
    if (grid_code_valid(x, n)) out.push_back(x);
  return out;
}

std::uint64_t rank_mismatches(Kind kind, const std::vector<QuatString>& list) {
  std::uint64_t bad = 0;
  for (std::size_t j = 0; j < list.size(); ++j)
    if (rank(kind, list[j]) != j) ++bad;
  return bad;
}

std::uint64_t compare_violations(const std::vector<QuatString>& list) {
  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (compare(list[i], list[i]) != Ordering::Equal) ++bad;
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (!pair_ok(list[i], list[j])) ++bad;
  }
  return bad;
}

Adjacency build_adjacency(std::size_t n, const std::vector<std::uint64_t>& codes) {
  Adjacency adj;
  adj.offsets.reserve(codes.size() + 1);
  adj.offsets.push_back(0);
  for (std::uint64_t c : codes) {
    edges_of(n, c, codes, adj.edges);
    adj.offsets.push_back(static_cast<std::uint32_t>(adj.edges.size()));
  }
  return adj;
}

}  // namespace serial

namespace parallel {

EncodingCounts count_encodings(std::size_t n) {
  check_n(n, 13);
  const std::int64_t total = static_cast<std::int64_t>(pow4(n));
  std::uint64_t valid = 0, zig = 0;
#pragma omp parallel reduction(+ : valid, zig)
  {
    QuatString q(n);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < total; ++x) {
      load(q, static_cast<std::uint64_t>(x));
      if (is_valid(q)) ++valid;
      if (is_ziggu(q)) ++zig;
    }
  }
  return {valid, zig};
}

GridCounts count_grids(std::size_t n) {
  check_n(n, 13);
  const std::int64_t total = static_cast<std::int64_t>(pow4(n));
  std::uint64_t all = 0, black = 0, white = 0;
#pragma omp parallel for schedule(static) reduction(+ : all, black, white)
  for (std::int64_t x = 0; x < total; ++x) {
    GridCounts c;
    classify_grid(static_cast<std::uint64_t>(x), n, c);
    all += c.total;
    black += c.all_columns_black;
    white += c.with_white_column;
  }
  return {all, black, white};
}

std::vector<std::uint64_t> valid_grid_codes(std::size_t n) {
  check_n(n, 13);
  const std::int64_t total = static_cast<std::int64_t>(pow4(n));
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(thread_count()));
#pragma omp parallel
  {
#ifdef _OPENMP
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& mine = parts[0];
#endif
    // static schedule hands each thread one contiguous block, in thread order
#pragma omp for schedule(static) nowait
    for (std::int64_t x = 0; x < total; ++x)
      if (grid_code_valid(static_cast<std::uint64_t>(x), n)) mine.push_back(static_cast<std::uint64_t>(x));
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::uint64_t rank_mismatches(Kind kind, const std::vector<QuatString>& list) {
  const std::int64_t size = static_cast<std::int64_t>(list.size());
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::int64_t j = 0; j < size; ++j)
    if (rank(kind, list[static_cast<std::size_t>(j)]) != j) ++bad;
  return bad;
}

std::uint64_t compare_violations(const std::vector<QuatString>& list) {
  const std::int64_t size = static_cast<std::int64_t>(list.size());
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : bad)
  for (std::int64_t i = 0; i < size; ++i) {
    const auto& a = list[static_cast<std::size_t>(i)];
    if (compare(a, a) != Ordering::Equal) ++bad;
    for (std::int64_t j = i + 1; j < size; ++j)
      if (!pair_ok(a, list[static_cast<std::size_t>(j)])) ++bad;
  }
  return bad;
}

Adjacency build_adjacency(std::size_t n, const std::vector<std::uint64_t>& codes) {
  const std::int64_t size = static_cast<std::int64_t>(codes.size());
  std::vector<std::vector<Edge>> local(codes.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t v = 0; v < size; ++v)
    edges_of(n, codes[static_cast<std::size_t>(v)], codes, local[static_cast<std::size_t>(v)]);
  Adjacency adj;
  adj.offsets.resize(codes.size() + 1, 0);
  for (std::size_t v = 0; v < codes.size(); ++v)
    adj.offsets[v + 1] = adj.offsets[v] + static_cast<std::uint32_t>(local[v].size());
  adj.edges.resize(adj.offsets.back());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < size; ++v) {
    const auto& l = local[static_cast<std::size_t>(v)];
    std::copy(l.begin(), l.end(), adj.edges.begin() + adj.offsets[static_cast<std::size_t>(v)]);
  }
  return adj;
}

}  // namespace parallel

}  // namespace ziggu::kernels
