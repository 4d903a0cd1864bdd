#pragma once

#include <iosfwd>

namespace ziggu::cli {

// Exit codes: 0 ok, 1 domain error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in);

// Cross-checks every module at size n; prints one line per check, the
// solution lengths, and PASS or FAIL. Returns true on PASS.
bool verify(std::size_t n, std::ostream& out);

}  // namespace ziggu::cli
