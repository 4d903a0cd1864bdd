#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ziggu/kind.hpp"
#include "ziggu/state.hpp"

namespace ziggu {

// One step of a change sequence: which digit changes, and (for signed
// sequences) whether it goes up or down. sign == 0 means unsigned.
struct ChangeEntry {
  std::size_t index = 1;
  int sign = 0;

  int value() const { return sign < 0 ? -static_cast<int>(index) : static_cast<int>(index); }
  friend bool operator==(const ChangeEntry&, const ChangeEntry&) = default;
};

// Brgc gives the binary ruler, the other kinds the quaternary ones.
std::vector<ChangeEntry> ruler(Kind kind, std::size_t n, bool is_signed);
std::size_t max_ruler_n();  // materialization limit (12)

// Entry values (+i / -i, or i when unsigned).
std::vector<int> values(const std::vector<ChangeEntry>& seq);
std::vector<ChangeEntry> entries(const std::vector<int>& vals, bool is_signed);

// Sequence transforms on signed values.
std::vector<int> reverse_complement(const std::vector<int>& s);
std::vector<int> complement_max(const std::vector<int>& s);  // negate entries of largest |v|
std::vector<int> complement_mid(const std::vector<int>& s);  // negate the middle entry

// Signed sequences built two ways: with reverse_complement throughout, and
// with complement_max / complement_mid in place of the reversal (Brgc,
// Quat, Short only). ruler(kind, n, true) returns the second form where it
// exists.
std::vector<int> signed_ruler_reversing(Kind kind, std::size_t n);
std::vector<int> signed_ruler_norev(Kind kind, std::size_t n);

// The j-th entry (1-based) of the binary ruler, computed directly.
ChangeEntry ruler_entry_binary(std::uint64_t j, bool is_signed);

// Lazy signed ruler: an explicit-stack walk of the recursion, so any n
// works in O(n) memory.
class RulerStream {
 public:
  RulerStream(Kind kind, std::size_t n);
  // False once the sequence is exhausted.
  bool next(ChangeEntry& out);

 private:
  struct Frame {
    std::uint32_t n;
    bool flag;     // shortest-solution recursion: include the 0-prefixed copy
    bool flipped;  // reverse + complement applied
    std::uint8_t pos;
  };
  Kind kind_;
  std::vector<Frame> stack_;
};

enum class Alphabet { Binary, Quaternary };

// Direction an unsigned entry at digit i takes: forced at 0/3, otherwise up
// iff the digits left of i sum to an even number.
int unsigned_direction(const QuatString& q, std::size_t i);

// States visited when applying seq to start (start included).
std::vector<QuatString> replay(const QuatString& start, const std::vector<ChangeEntry>& seq,
                               Alphabet alphabet = Alphabet::Quaternary);

// Apply one entry in place.
void apply_entry(QuatString& q, const ChangeEntry& e, Alphabet alphabet);

}  // namespace ziggu
