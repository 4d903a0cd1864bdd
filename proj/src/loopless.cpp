#include "ziggu/loopless.hpp"

namespace ziggu {

ParityGenerator::ParityGenerator(std::size_t n) : w_(QuatString::zeros(n)) {
  if (n < 1) throw DomainError("n must be at least 1");
}

int ParityGenerator::read(std::size_t i) {
  ++counter_.reads;
  return w_.at(i);
}

void ParityGenerator::write(std::size_t i, int v) {
  ++counter_.writes;
  w_.set(i, v);
}

bool ParityGenerator::next() {
  if (i_ > w_.size()) {
    last_cost_ = 0;
    return false;
  }
  const std::uint64_t before = counter_.total();
  if (i_ == 1) {
    const int v = read(1);
    if (spin_left_ == 0) {
      spin_left_ = 3;
      spin_dir_ = v == 0 ? 1 : -1;
    }
    write(1, v + spin_dir_);
    last_ = {1, spin_dir_};
    if (--spin_left_ == 0) i_ = 2;
  } else {
    const int wi = read(i_);
    const int right = read(i_ - 1);
    const int delta = (wi + right) % 2 == 1 ? 1 : -1;
    const int now = wi + delta;
    write(i_, now);
    last_ = {i_, delta};
    if (now == 0 || now == 3) ++i_;
    else --i_;
  }
  last_cost_ = counter_.total() - before;
  return true;
}

DirectionGenerator::DirectionGenerator(std::size_t n) : w_(QuatString::zeros(n)), d_(n + 1, 1) {
  if (n < 1) throw DomainError("n must be at least 1");
}

bool DirectionGenerator::next() {
  if (i_ > w_.size()) {
    last_cost_ = 0;
    return false;
  }
  const std::uint64_t before = counter_.total();
  const int dir = d_[i_];
  const int now = w_.at(i_) + dir;
  counter_.reads += 2;
  w_.set(i_, now);
  ++counter_.writes;
  last_ = {i_, dir};
  if (now == 0 || now == 3) {
    d_[i_] = static_cast<std::int8_t>(-dir);
    ++counter_.writes;
    ++i_;
  } else if (i_ > 1) {
    --i_;
  }
  last_cost_ = counter_.total() - before;
  return true;
}

}  // namespace ziggu
