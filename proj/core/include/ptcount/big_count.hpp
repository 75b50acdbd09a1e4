#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ptcount {

// All counting paths use exact arbitrary-precision integers; no floating
// point is involved anywhere a count is produced.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace ptcount
