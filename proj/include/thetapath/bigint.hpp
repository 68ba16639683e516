#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace thetapath {

// All object counts are exact. The closed form already exceeds 64 bits near
// n = 30, and factorials in the hook-length computation blow past it far
// earlier, so counting never touches fixed-width or floating arithmetic.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace thetapath
