#include "ziggu/nurikabe.hpp"

#include <string>

namespace ziggu {

std::string NurikabeGrid::str() const {
  std::string top, bottom;
  for (auto c : columns) {
    top += (c & 2u) ? '#' : '.';
    bottom += (c & 1u) ? '#' : '.';
  }
  return top + "\n" + bottom;
}

NurikabeGrid NurikabeGrid::parse(std::string_view text) {
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos) throw ParseError("a grid needs two rows");
  std::string_view top = text.substr(0, nl);
  std::string_view bottom = text.substr(nl + 1);
  if (!bottom.empty() && bottom.back() == '\n') bottom.remove_suffix(1);
  if (top.size() != bottom.size()) throw ParseError("grid rows differ in length");
  NurikabeGrid g;
  for (std::size_t j = 0; j < top.size(); ++j) {
    auto cell = [](char ch) {
      if (ch == '#') return 1u;
      if (ch == '.') return 0u;
      throw ParseError("grid cells are '#' or '.'");
    };
    g.columns.push_back(static_cast<std::uint8_t>((cell(top[j]) << 1) | cell(bottom[j])));
  }
  return g;
}

std::uint64_t NurikabeGrid::code() const {
  std::uint64_t x = 0;
  for (auto c : columns) x = (x << 2) | c;
  return x;
}

NurikabeGrid NurikabeGrid::from_code(std::uint64_t code, std::size_t n) {
  NurikabeGrid g;
  g.columns.resize(n);
  for (std::size_t j = n; j-- > 0;) {
    g.columns[j] = static_cast<std::uint8_t>(code & 3u);
    code >>= 2;
  }
  return g;
}

bool is_valid_grid(const NurikabeGrid& g) {
  const std::size_t n = g.size();
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (g.columns[j] == BB && g.columns[j + 1] == BB) return false;

  // flood fill from the first black cell
  std::vector<char> seen(2 * n, 0);
  std::vector<std::size_t> todo;
  std::size_t blacks = 0;
  for (std::size_t cell = 0; cell < 2 * n; ++cell) {
    if (g.black(static_cast<int>(cell % 2), cell / 2)) {
      ++blacks;
      if (todo.empty() && !seen[cell]) {
        seen[cell] = 1;
        todo.push_back(cell);
      }
    }
  }
  if (blacks == 0) return true;
  std::size_t reached = 0;
  while (!todo.empty()) {
    const std::size_t cell = todo.back();
    todo.pop_back();
    ++reached;
    const std::size_t row = cell % 2, col = cell / 2;
    std::size_t nb[3];
    int k = 0;
    nb[k++] = col * 2 + (1 - row);
    if (col > 0) nb[k++] = (col - 1) * 2 + row;
    if (col + 1 < n) nb[k++] = (col + 1) * 2 + row;
    for (int t = 0; t < k; ++t) {
      const std::size_t c = nb[t];
      if (!seen[c] && g.black(static_cast<int>(c % 2), c / 2)) {
        seen[c] = 1;
        todo.push_back(c);
      }
    }
  }
  return reached == blacks;
}

bool has_white_column(const NurikabeGrid& g) {
  if (g.columns.empty()) return true;  // the empty grid is counted with these
  for (auto c : g.columns)
    if (c == WW) return true;
  return false;
}

namespace {

std::uint8_t column_of(int digit) {
  static constexpr std::uint8_t s[4] = {BB, WB, BW, WW};
  return s[digit];
}

// Column for a middle digit given the column to its right (WW past the end).
std::uint8_t transition(std::uint8_t right, int digit) {
  if (digit == 1) return right == BW ? BB : WB;
  if (digit == 2) return right == WB ? BB : BW;
  throw DomainError("no grid column for middle digit " + std::to_string(digit));
}

}  // namespace

NurikabeGrid sigma(const QuatString& q) {
  if (!is_ziggu(q)) throw DomainError("\"" + q.str() + "\" is not on the shortest solution");
  const std::vector<int> w = q.left_to_right();
  const std::size_t n = w.size();

  std::size_t lead = 0;
  while (lead < n && w[lead] == 0) ++lead;
  std::size_t threes = 0;
  while (threes < n && w[n - 1 - threes] == 3) ++threes;
  // 0-based start of the suffix 0 3* (or 3*); n when there is none
  std::size_t k = n;
  if (threes < n && w[n - 1 - threes] == 0) k = n - 1 - threes;
  else if (threes > 0) k = n - threes;

  NurikabeGrid g;
  g.columns.assign(n, WW);
  std::uint8_t right = WW;
  for (std::size_t j = n; j-- > 0;) {
    if (j >= k) g.columns[j] = column_of(w[j]);
    else if (j >= lead) g.columns[j] = transition(right, w[j]);
    else g.columns[j] = WW;
    right = g.columns[j];
  }
  return g;
}

QuatString sigma_inverse(const NurikabeGrid& g) {
  if (g.size() == 0) throw DomainError("empty grid has no state");
  if (!is_valid_grid(g)) throw DomainError("not a valid grid:\n" + g.str());
  const std::size_t n = g.size();
  std::size_t a = n, b = 0;
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (g.columns[j] != WW) {
      if (!any) a = j;
      b = j;
      any = true;
    }
  }
  std::vector<int> w(n, 3);
  if (!any) return QuatString::from_left_to_right(w);
  for (std::size_t j = 0; j < a; ++j) w[j] = 0;
  switch (g.columns[b]) {
    case BB: w[b] = 0; break;
    case WB: w[b] = 1; break;
    case BW: w[b] = 2; break;
  }
  for (std::size_t j = b; j-- > a;) {
    const std::uint8_t right = g.columns[j + 1];
    if (transition(right, 1) == g.columns[j]) w[j] = 1;
    else if (transition(right, 2) == g.columns[j]) w[j] = 2;
    else throw DomainError("grid is outside the image of sigma:\n" + g.str());
  }
  return QuatString::from_left_to_right(w);
}

QuatString rho(const QuatString& w) {
  if (!is_ziggu(w)) throw DomainError("\"" + w.str() + "\" is not on the shortest solution");
  QuatString r = w;
  for (std::size_t i = 1; i <= r.size(); ++i) {
    const int d = r.at(i);
    if (d == 1 || d == 2) r.set(i, 3 - d);
  }
  return r;
}

NurikabeGrid mirror(const NurikabeGrid& g) {
  NurikabeGrid m = g;
  for (auto& c : m.columns) c = static_cast<std::uint8_t>(((c & 1u) << 1) | ((c >> 1) & 1u));
  return m;
}

bool reflection_check(const QuatString& w) { return sigma(rho(w)) == mirror(sigma(w)); }

NurikabeCounts nurikabe_counts(std::size_t n) {
  if (n > 60) throw DomainError("n too large for 64-bit counts");
  if (n == 0) return {1, 0, 1};
  const std::uint64_t p = std::uint64_t{1} << (n - 1);
  NurikabeCounts c;
  c.a = 12 * p - 3 * n - 5;
  c.b = 3 * p;
  c.c = 9 * p - 3 * n - 5;
  return c;
}

}  // namespace ziggu
