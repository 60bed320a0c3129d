#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "3", "-1/2"; denominator omitted when 1
inline std::string rat_str(const Rat& r) { return r.str(); }

// mathematical mod, result in [0, m)
inline long long imod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// floor division
inline long long fdiv(long long a, long long m) { return (a - imod(a, m)) / m; }

}  // namespace fc
