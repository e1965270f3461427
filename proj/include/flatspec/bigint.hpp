#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flatspec {

// Exact arbitrary-precision integers for subspace counts, digit sums and
// energy values that overflow 64 bits well inside the supported caps.
using BigInt = boost::multiprecision::cpp_int;

} // namespace flatspec
