#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kedge {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

// floor(x) as exact integer.
inline BigInt rat_floor(const Rat& x) {
    BigInt q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

// Reduce x modulo 1 into [-1/2, 1/2).  Used for angular displacements in
// units of full turns; the half-turn boundary maps to -1/2.
inline Rat wrap_half(const Rat& x) {
    return x - Rat(rat_floor(x + Rat(1, 2)));
}

}
