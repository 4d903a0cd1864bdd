#pragma once

#include <cstddef>

#include "ziggu/bigint.hpp"
#include "ziggu/kind.hpp"
#include "ziggu/state.hpp"

namespace ziggu {

// 0-based position of q in listing(kind, q.size()). Throws DomainError when
// q is not on that listing.
BigInt rank(Kind kind, const QuatString& q);

BigInt rank_brgc(const QuatString& q);
BigInt rank_quat(const QuatString& q);
BigInt rank_long(const QuatString& q);
BigInt rank_short(const QuatString& q);

// |rank(w) - rank(v)|
BigInt distance(Kind kind, const QuatString& w, const QuatString& v);

QuatString unrank(Kind kind, std::size_t n, const BigInt& r);

// floor(4^(k+1) / 15) and (3^k - 1) / 2
BigInt a033114(std::size_t k);
BigInt a003462(std::size_t k);

}  // namespace ziggu
