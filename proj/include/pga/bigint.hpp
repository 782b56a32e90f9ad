#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pga {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace pga
