#include "ziggu/rank.hpp"

#include <string>
#include <vector>

#include "ziggu/codes.hpp"

namespace ziggu {

namespace {

void require(bool ok, Kind kind, const QuatString& q) {
  if (!ok)
    throw DomainError("\"" + q.str() + "\" is not a state of the " + kind_name(kind) +
                      " listing");
}

}  // namespace

BigInt a033114(std::size_t k) {
  BigInt p = 1;
  p <<= 2 * (k + 1);
  return p / 15;
}

BigInt a003462(std::size_t k) {
  BigInt p = 1;
  for (std::size_t j = 0; j < k; ++j) p *= 3;
  return (p - 1) / 2;
}

BigInt rank_brgc(const QuatString& q) {
  require(is_binary(q), Kind::Brgc, q);
  BigInt r = 0;
  int ones = 0;
  for (std::size_t i = q.size(); i >= 1; --i) {
    const int b = q.at(i);
    r <<= 1;
    r += (ones % 2 == 1) ? 1 - b : b;
    ones += b;
  }
  return r;
}

BigInt rank_quat(const QuatString& q) {
  BigInt r = 0;
  int left = 0;
  for (std::size_t i = q.size(); i >= 1; --i) {
    const int d = q.at(i);
    r <<= 2;
    r += (left % 2 == 1) ? 3 - d : d;
    left += d;
  }
  return r;
}

// The two ranking loops below read the word left to right from index 0
// (w[0] is the leftmost digit). first is the index of the leftmost nonzero
// digit; weight is the per-position count of skipped words, kept apart from
// first (both go by one name in the textbook listing).
//

// Both loops add coefficient * A(k) for k = n-2-i running down to 1. Rather
// than multiplying big numbers at every step, the sum is assembled by
// Horner's rule in the base of the helper sequence, with the small
// correction terms of the closed forms collected alongside:
//   A033114(k) = (4^(k+1) - e_k) / 15, e_k = 4 for even k, 1 for odd k
//   A003462(k) = (3^k - 1) / 2

BigInt rank_long(const QuatString& q) {
  require(is_valid(q), Kind::Long, q);
  const std::vector<int> w = q.left_to_right();
  const std::size_t n = w.size();
  std::size_t first = 0;
  while (first < n && w[first] == 0) ++first;
  if (first == n) return 0;

  BigInt horner = 0, correction = 0, b = 0;
  long long l = 0;
  for (std::size_t i = first; i + 2 < n; ++i) {
    const std::size_t k = n - 2 - i;
    const bool down = (l % 2 == 1) || (i > first && w[i - 1] == 3);
    const int weight = down ? (4 - w[i]) / 2 : (w[i] + 1) / 2;
    l += w[i];
    // the coefficient is weight, plus b after the first step
    if (i == first + 1) {
      b = 2 * w[first];
    } else if (i > first + 1) {
      const bool odd = (l - w[i] - w[i - 1]) % 2 == 1;
      const int p = (odd || (i > 1 && w[i - 2] == 3)) ? 2 * std::max(2 - w[i - 1], 0)
                                                       : 2 * w[i - 1];
      b *= 3;
      b += p;
    }
    const int e = k % 2 == 0 ? 4 : 1;
    horner <<= 2;
    horner += weight;
    correction += e * weight;
    if (i > first) {
      horner += b;
      if (e == 4) correction += b << 2;
      else correction += b;
    }
  }
  // The last term has k = 1, so every term carries a further factor 4^2.
  const BigInt s = ((horner << 4) - correction) / 15;
  return rank_quat(q) - 6 * s;
}

BigInt rank_short(const QuatString& q) {
  require(is_ziggu(q), Kind::Short, q);
  const std::vector<int> w = q.left_to_right();
  const std::size_t n = w.size();
  std::size_t first = 0;
  while (first < n && w[first] == 0) ++first;
  if (first == n) return 0;

  BigInt horner = 0, correction = 0, a = 0, b = 0;
  long long l = 0;
  for (std::size_t i = first; i + 2 < n; ++i) {
    const bool down = (l % 2 == 1) || (i > first && w[i - 1] == 3) ||
                      (i > 1 && w[i - 2] != 0 && w[i - 1] == 0 && w[i] == 3);
    const int weight = down ? (3 - w[i]) / 2 : w[i] / 2;
    l += w[i];
    if (i == first) {
      horner += weight;
      correction += weight;
      continue;
    }
    if (i == first + 1) {
      b = w[first];
      a = b;
      a += weight;
    } else if (w[i] == 3 && (w[i - 1] == 0 || w[i - 1] == 3)) {
      a <<= 1;
      a += 1;
    } else {
      const long long before = l - w[i] - w[i - 1];
      const bool two = (before % 2 == 1 && w[i - 1] == 1) || (before % 2 == 0 && w[i - 1] == 2);
      b <<= 1;
      b += two ? 2 : 1;
      a = b;
      a += weight;
    }
    horner *= 3;
    horner += a;
    correction += a;
  }
  const BigInt s = (3 * horner - correction) / 2;
  return rank_long(q) - 6 * s;
}

BigInt rank(Kind kind, const QuatString& q) {
  switch (kind) {
    case Kind::Brgc: return rank_brgc(q);
    case Kind::Quat: return rank_quat(q);
    case Kind::Long: return rank_long(q);
    case Kind::Short: return rank_short(q);
  }
  return 0;
}

BigInt distance(Kind kind, const QuatString& w, const QuatString& v) {
  if (w.size() != v.size()) throw DomainError("states have different lengths");
  BigInt d = rank(kind, w) - rank(kind, v);
  return d < 0 ? BigInt(-d) : d;
}

namespace {

// Top-down descent of the recursive structure; each level picks the block
// holding r and re-orients r when the block is a reversed copy.

QuatString unrank_digits(std::size_t n, const BigInt& r, unsigned base) {
  // Inverse of the complement-when-odd rule of rank_brgc / rank_quat.
  std::vector<int> w(n);
  BigInt x = r;
  for (std::size_t k = n; k-- > 0;) {
    w[k] = static_cast<int>(x % base);
    x /= base;
  }
  int left = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (left % 2 == 1) w[k] = static_cast<int>(base) - 1 - w[k];
    left += w[k];
  }
  return QuatString::from_left_to_right(w);
}

QuatString unrank_long(std::size_t n, BigInt r) {
  std::vector<BigInt> g(n + 1);  // |LONG(k)|, |LONG(0)| = 1
  g[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) g[k] = 3 * g[k - 1] + 1;
  std::vector<int> w;
  w.reserve(n);
  for (std::size_t k = n; k >= 1; --k) {
    const BigInt& sub = g[k - 1];
    int d = static_cast<int>(r / sub);
    if (d >= 3) {
      w.insert(w.end(), k, 3);
      break;
    }
    r -= d * sub;
    if (d == 1) r = sub - 1 - r;
    w.push_back(d);
  }
  return QuatString::from_left_to_right(w);
}

QuatString unrank_short(std::size_t n, BigInt r) {
  std::vector<BigInt> sz(n + 1), c(n + 1);  // |SHORT(k)|, |core(k)|
  sz[0] = 1;
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    sz[k] = 6 * (BigInt(1) << k) - 3 * BigInt(k) - 5;
    c[k] = 2 * c[k - 1] + 2;
  }
  std::vector<int> w;
  w.reserve(n);
  std::size_t k = n;
  while (k >= 1 && r < sz[k - 1]) {
    w.push_back(0);
    --k;
  }
  if (k == 0) return QuatString::from_left_to_right(w);
  r = r - sz[k - 1] + 1;  // index in core(k)
  for (; k >= 1; --k) {
    if (r == 0) {
      w.push_back(0);
      w.insert(w.end(), k - 1, 3);
      break;
    }
    if (r == c[k] - 1) {
      w.insert(w.end(), k, 3);
      break;
    }
    if (r <= c[k - 1]) {
      w.push_back(1);
      r = c[k - 1] - r;  // 1 + (c - 1 - r')
    } else {
      w.push_back(2);
      r = r - 1 - c[k - 1];
    }
  }
  return QuatString::from_left_to_right(w);
}

}  // namespace

QuatString unrank(Kind kind, std::size_t n, const BigInt& r) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (r < 0 || r >= count(kind, n))
    throw DomainError("rank " + r.str() + " out of range for " + kind_name(kind) +
                      " with n = " + std::to_string(n));
  switch (kind) {
    case Kind::Brgc: return unrank_digits(n, r, 2);
    case Kind::Quat: return unrank_digits(n, r, 4);
    case Kind::Long: return unrank_long(n, r);
    case Kind::Short: return unrank_short(n, r);
  }
  return {};
}

}  // namespace ziggu
