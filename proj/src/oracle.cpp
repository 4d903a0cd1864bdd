#include "ziggu/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <string>

namespace ziggu::oracle {

StateGraph::StateGraph(std::size_t n, std::vector<std::uint64_t> codes, kernels::Adjacency adj)
    : n_(n), codes_(std::move(codes)), adj_(std::move(adj)) {}

std::optional<std::uint32_t> StateGraph::find(const QuatString& q) const {
  if (q.size() != n_) return std::nullopt;
  const std::uint64_t c = q.packed();
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::uint32_t>(it - codes_.begin());
}

std::uint32_t StateGraph::vertex(const QuatString& q) const {
  auto v = find(q);
  if (!v) throw DomainError("\"" + q.str() + "\" is not a vertex of the n = " +
                            std::to_string(n_) + " state graph");
  return *v;
}

std::vector<std::uint64_t> valid_codes(std::size_t n) {
  if (n < 1 || n > kMaxGraphN)
    throw DomainError("state graphs are built for 1 <= n <= " + std::to_string(kMaxGraphN));
  // {0,1,2}^a 3^(n-a): the a leftmost digits free over 0..2
  std::vector<std::uint64_t> out;
  for (std::size_t a = 0; a <= n; ++a) {
    std::uint64_t threes = 0;
    for (std::size_t i = 0; i < n - a; ++i) threes |= std::uint64_t{3} << (2 * i);
    std::vector<int> digits(a, 0);
    for (;;) {
      std::uint64_t c = threes;
      for (std::size_t k = 0; k < a; ++k)
        c |= static_cast<std::uint64_t>(digits[k]) << (2 * (n - a + k));
      out.push_back(c);
      std::size_t k = 0;
      while (k < a && digits[k] == 2) digits[k++] = 0;
      if (k == a) break;
      ++digits[k];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StateGraph build_graph(std::size_t n, bool parallel) {
  auto codes = valid_codes(n);
  auto adj = parallel ? kernels::parallel::build_adjacency(n, codes)
                      : kernels::serial::build_adjacency(n, codes);
  return StateGraph(n, std::move(codes), std::move(adj));
}

namespace {

std::mutex cache_mu;
std::map<std::size_t, std::shared_ptr<const StateGraph>> graph_cache;
std::map<std::size_t, std::shared_ptr<const std::vector<std::int32_t>>> dist_cache;

}  // namespace

std::shared_ptr<const StateGraph> shared_graph(std::size_t n) {
  std::lock_guard lock(cache_mu);
  auto& slot = graph_cache[n];
  if (!slot) slot = std::make_shared<const StateGraph>(build_graph(n, true));
  return slot;
}

std::shared_ptr<const std::vector<std::int32_t>> shared_distances_to_solved(std::size_t n) {
  auto g = shared_graph(n);
  std::lock_guard lock(cache_mu);
  auto& slot = dist_cache[n];
  if (!slot)
    slot = std::make_shared<const std::vector<std::int32_t>>(
        bfs_distances(*g, g->vertex(QuatString::solved(n))));
  return slot;
}

std::vector<std::int32_t> bfs_distances(const StateGraph& g, std::uint32_t source) {
  std::vector<std::int32_t> dist(g.size(), -1);
  std::deque<std::uint32_t> todo{source};
  dist[source] = 0;
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop_front();
    for (const Edge& e : g.neighbors(v)) {
      if (dist[e.to] < 0) {
        dist[e.to] = dist[v] + 1;
        todo.push_back(e.to);
      }
    }
  }
  return dist;
}

namespace {

std::vector<QuatString> descend(const StateGraph& g, std::uint32_t from,
                                const std::vector<std::int32_t>& dist_to_target) {
  if (dist_to_target[from] < 0) throw DomainError("target unreachable");
  std::vector<QuatString> path{g.state(from)};
  std::uint32_t v = from;
  while (dist_to_target[v] > 0) {
    for (const Edge& e : g.neighbors(v)) {
      if (dist_to_target[e.to] == dist_to_target[v] - 1) {
        v = e.to;
        break;
      }
    }
    path.push_back(g.state(v));
  }
  return path;
}

}  // namespace

std::vector<QuatString> bfs_path(const StateGraph& g, const QuatString& from, const QuatString& to) {
  const auto s = g.vertex(from);
  const auto t = g.vertex(to);
  return descend(g, s, bfs_distances(g, t));
}

std::uint64_t count_geodesics(const StateGraph& g, const QuatString& from, const QuatString& to) {
  const auto s = g.vertex(from);
  const auto t = g.vertex(to);
  const auto dist = bfs_distances(g, s);
  if (dist[t] < 0) return 0;
  // vertices in BFS order; ways[v] = sum of ways over predecessors one layer up
  std::vector<std::uint32_t> order(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return dist[a] < dist[b]; });
  std::vector<std::uint64_t> ways(g.size(), 0);
  ways[s] = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (auto v : order) {
    if (dist[v] <= 0) continue;
    std::uint64_t w = 0;
    for (const Edge& e : g.neighbors(v)) {
      if (dist[e.to] == dist[v] - 1) w = (cap - w < ways[e.to]) ? cap : w + ways[e.to];
    }
    ways[v] = w;
  }
  return ways[t];
}

bool is_hamilton_path(const StateGraph& g, const std::vector<QuatString>& states) {
  if (states.size() != g.size()) return false;
  std::vector<char> seen(g.size(), 0);
  std::optional<std::uint32_t> prev;
  for (const auto& q : states) {
    auto v = g.find(q);
    if (!v || seen[*v]) return false;
    seen[*v] = 1;
    if (prev) {
      bool adjacent = false;
      for (const Edge& e : g.neighbors(*prev)) adjacent = adjacent || e.to == *v;
      if (!adjacent) return false;
    }
    prev = v;
  }
  return true;
}

std::uint64_t count_hamilton_paths(const StateGraph& g, const QuatString& start,
                                   std::uint64_t limit) {
  if (g.n() > 4) throw DomainError("Hamilton path search is limited to n <= 4");
  const auto s = g.vertex(start);
  std::vector<char> seen(g.size(), 0);
  std::uint64_t found = 0;
  std::size_t visited = 1;
  seen[s] = 1;
  // iterative DFS with an edge cursor per depth
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{s, 0}};
  while (!stack.empty() && found < limit) {
    auto& [v, pos] = stack.back();
    if (visited == g.size()) {
      ++found;
      seen[v] = 0;
      --visited;
      stack.pop_back();
      continue;
    }
    const auto nb = g.neighbors(v);
    if (pos == nb.size()) {
      seen[v] = 0;
      --visited;
      stack.pop_back();
      continue;
    }
    const auto to = nb[pos++].to;
    if (!seen[to]) {
      seen[to] = 1;
      ++visited;
      stack.push_back({to, 0});
    }
  }
  return found;
}

std::vector<QuatString> greedy_walk(const StateGraph& g, Side side, std::size_t budget) {
  const std::size_t n = g.n();
  std::uint32_t v = g.vertex(QuatString::zeros(n));
  const std::uint32_t goal = g.vertex(QuatString::solved(n));
  std::vector<QuatString> walk{g.state(v)};
  std::optional<Edge> last;
  while (v != goal) {
    if (walk.size() > budget) throw DomainError("greedy walk exceeded its step budget");
    std::optional<Edge> best;
    for (const Edge& e : g.neighbors(v)) {
      if (last && e.index == last->index && e.delta == -last->delta) continue;
      const bool better =
          !best || (side == Side::Leftmost ? e.index > best->index : e.index < best->index) ||
          (e.index == best->index && e.delta > best->delta);
      if (better) best = e;
    }
    if (!best) throw DomainError("greedy walk stuck at \"" + g.state(v).str() + "\"");
    v = best->to;
    last = best;
    walk.push_back(g.state(v));
  }
  return walk;
}

DegreeStats degree_stats(const StateGraph& g) {
  DegreeStats st;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    const std::size_t d = g.degree(v);
    ++st.histogram[d];
    if (d == 1) st.degree_one.push_back(g.state(v));
    if (d > st.max_degree) {
      st.max_degree = d;
      st.max_witnesses.clear();
    }
    if (d == st.max_degree) st.max_witnesses.push_back(g.state(v));
  }
  return st;
}

std::size_t max_non_reversing(const StateGraph& g, const std::vector<QuatString>& path) {
  std::size_t best = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto v = g.vertex(path[k]);
    std::size_t count = g.degree(v);
    if (k > 0) {
      const auto u = g.vertex(path[k - 1]);
      for (const Edge& e : g.neighbors(v))
        if (e.to == u) --count;
    }
    best = std::max(best, count);
  }
  return best;
}

std::vector<QuatString> solve_bfs(const QuatString& q) {
  if (q.size() > kMaxGraphN)
    throw DomainError("breadth-first solving is limited to n <= " + std::to_string(kMaxGraphN));
  auto g = shared_graph(q.size());
  auto dist = shared_distances_to_solved(q.size());
  return descend(*g, g->vertex(q), *dist);
}

std::vector<NurikabeGrid> enumerate_nurikabe(std::size_t n) {
  if (n > 12) throw DomainError("grid enumeration is limited to n <= 12");
  std::vector<NurikabeGrid> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t c = 0; c < total; ++c) {
    NurikabeGrid g = NurikabeGrid::from_code(c, n);
    if (is_valid_grid(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ziggu::oracle
