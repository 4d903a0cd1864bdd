#pragma once

#include <string_view>

namespace ziggu {

// The four listings: binary reflected Gray code, quaternary reflected Gray
// code, the longest Ziggu solution and the shortest Ziggu solution.
enum class Kind { Brgc, Quat, Long, Short };

Kind parse_kind(std::string_view name);  // "brgc" | "quat" | "long" | "short"
const char* kind_name(Kind k);

}  // namespace ziggu
