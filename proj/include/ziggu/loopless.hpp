#pragma once

// Constant-time-per-state generators for the shortest solution. Both keep
// one word and emit one state per call to next(); the counter records
// every read and write of the digit array (and of the direction array).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ziggu/state.hpp"

namespace ziggu {

struct AccessCounter {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  std::uint64_t total() const { return reads + writes; }
};

// Only an index variable besides the word.
class ParityGenerator {
 public:
  explicit ParityGenerator(std::size_t n);

  const QuatString& current() const { return w_; }
  // Advance; false (no change) once 3^n has been emitted.
  bool next();
  // Digit changed by the last next() and its direction.
  Move last_move() const { return last_; }
  // Accesses made by the last next() call, and since construction.
  std::uint64_t last_cost() const { return last_cost_; }
  const AccessCounter& counter() const { return counter_; }

 private:
  int read(std::size_t i);
  void write(std::size_t i, int v);

  QuatString w_;
  std::size_t i_ = 1;
  int spin_left_ = 0;  // remaining steps of a three-step turn of digit 1
  int spin_dir_ = 1;
  Move last_{};
  AccessCounter counter_;
  std::uint64_t last_cost_ = 0;
};

// Keeps one direction per digit.
class DirectionGenerator {
 public:
  explicit DirectionGenerator(std::size_t n);

  const QuatString& current() const { return w_; }
  bool next();
  Move last_move() const { return last_; }
  std::uint64_t last_cost() const { return last_cost_; }
  const AccessCounter& counter() const { return counter_; }

 private:
  QuatString w_;
  std::vector<std::int8_t> d_;
  std::size_t i_ = 1;
  Move last_{};
  AccessCounter counter_;
  std::uint64_t last_cost_ = 0;
};

}  // namespace ziggu
