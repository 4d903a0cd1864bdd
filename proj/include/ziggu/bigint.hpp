#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ziggu {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace ziggu
