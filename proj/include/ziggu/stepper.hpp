#pragma once

#include <optional>
#include <vector>

#include "ziggu/kind.hpp"
#include "ziggu/state.hpp"

namespace ziggu {

struct StepOutcome {
  enum class Status { Moved, Solved, First };
  Status status = Status::Moved;
  QuatString state;  // the neighbour when Moved, the input otherwise
  Move move{};       // the change taken when Moved

  bool moved() const { return status == Status::Moved; }
};

// Successor / predecessor on a listing. Solved at the last state, First at
// the first. The Short rule also accepts valid states off its listing.
StepOutcome next(Kind kind, const QuatString& q);
StepOutcome prev(Kind kind, const QuatString& q);

// True when q belongs to the listing of its length.
bool on_listing(Kind kind, const QuatString& q);

enum class Ordering { Before, Equal, After };
Ordering compare(const QuatString& w, const QuatString& v);
const char* to_string(Ordering o);

// Leftmost = highest digit index.
enum class Side { Leftmost, Rightmost };

// The extremal legal move other than the inverse of last; nullopt if none.
// When both directions of one digit qualify, +1 wins.
std::optional<Move> greedy_step(const QuatString& q, std::optional<Move> last, Side side);

// Walk from start with greedy_step until 3^n; throws DomainError when the
// budget runs out or the walk gets stuck.
std::vector<QuatString> greedy_walk(const QuatString& start, Side side, std::size_t budget);

enum class SolveMode { ShortestList, LongestList, Bfs };

// Moves from q to 3^n.
std::vector<Move> solve_path(const QuatString& q, SolveMode mode);

}  // namespace ziggu
