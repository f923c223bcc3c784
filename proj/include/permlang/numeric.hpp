#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permlang {

// All counts are exact; a(30) already exceeds 2^64.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace permlang
