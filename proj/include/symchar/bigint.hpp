#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symchar {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace symchar
