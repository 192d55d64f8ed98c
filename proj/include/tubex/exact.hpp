#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tubex {

// All geometry in this project is exact: integer vertex coordinates and
// rational linear algebra. Powers of 3 grow past 64 bits already for
// moderate weights, hence arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow3(long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= 3;
    return r;
}

// Thrown when an enumeration request exceeds the configured desk-scale
// bound (see ScaleGuard in graph.hpp).
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tubex
