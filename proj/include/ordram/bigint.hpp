#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ordram {

using BigInt = boost::multiprecision::cpp_int;

/// floor(sqrt(x)) for x >= 0.
BigInt isqrt(const BigInt& x);

/// floor(x^(1/k)) for x >= 0, k >= 1.
BigInt iroot(const BigInt& x, unsigned k);

BigInt ipow(const BigInt& base, unsigned exponent);

/// log2(x) for x > 0, accurate to double precision for any size.
double log2_big(const BigInt& x);

std::string to_string(const BigInt& x);

}  // namespace ordram
