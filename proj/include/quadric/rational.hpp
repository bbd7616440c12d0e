#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <ostream>
#include <string>

namespace quadric {

// Exact rational scalar used throughout the library. All coefficient
// arithmetic is integral or rational; no floating point anywhere.
using Rat = boost::rational<long long>;

inline long long num(const Rat& r) { return r.numerator(); }
inline long long den(const Rat& r) { return r.denominator(); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// Throws if r is not an integer; callers guard with is_integer first when
// a non-integer is an expected (reportable) outcome.
long long to_integer(const Rat& r);

std::string to_string(const Rat& r);

} // namespace quadric
