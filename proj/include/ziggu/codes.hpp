#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ziggu/bigint.hpp"
#include "ziggu/kind.hpp"
#include "ziggu/rulers.hpp"
#include "ziggu/state.hpp"

namespace ziggu {

struct SolutionList {
  Kind kind = Kind::Short;
  std::size_t n = 0;
  std::vector<QuatString> states;  // Brgc states use digits {0,1}
};

// Largest n that listing() will materialize for a kind.
std::size_t max_listing_n(Kind kind);

// Built from the recursive definitions.
SolutionList listing(Kind kind, std::size_t n);

// core(n): the tail of the shortest solution after its 0-prefixed half,
// starting at 03^(n-1) and ending at 3^n.
std::vector<QuatString> core_list(std::size_t n);

// Flip the rightmost bit that yields an unseen string, starting from 0^n.
SolutionList greedy_brgc(std::size_t n);

// Lazy walk of a listing, driven by the signed ruler stream.
class ListingCursor {
 public:
  ListingCursor(Kind kind, std::size_t n);
  const QuatString& current() const { return q_; }
  std::uint64_t position() const { return pos_; }
  // Step to the next state; false (and no change) at the end.
  bool advance();
  // Index and direction of the last change.
  const ChangeEntry& last_change() const { return last_; }

 private:
  Kind kind_;
  QuatString q_;
  RulerStream stream_;
  ChangeEntry last_{};
  std::uint64_t pos_ = 0;
};

// Number of states in listing(kind, n): closed form and recurrence.
BigInt count(Kind kind, std::size_t n);
BigInt recurrence_count(Kind kind, std::size_t n);
// Number of moves (states - 1) from the move recurrences.
BigInt move_count(Kind kind, std::size_t n);
BigInt recurrence_move_count(Kind kind, std::size_t n);

enum class Puzzle { Hanoi, SpinOut };
enum class Quantity { Moves, States };

BigInt classic_count(Puzzle p, std::size_t n, Quantity q);
BigInt classic_recurrence(Puzzle p, std::size_t n, Quantity q);

}  // namespace ziggu
