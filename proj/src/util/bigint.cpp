#include "ordram/bigint.hpp"

#include "ordram/error.hpp"

#include <cmath>

namespace ordram {

BigInt isqrt(const BigInt& x)
{
    if (x < 0) throw ParameterError("x", "square root of a negative number");
    return boost::multiprecision::sqrt(x);
}

BigInt iroot(const BigInt& x, unsigned k)
{
    if (x < 0) throw ParameterError("x", "root of a negative number");
    if (k == 0) throw ParameterError("k", "root index must be positive");
    if (k == 1 || x < 2) return x;
    // binary search on [0, 2^(bits/k + 1)]
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    BigInt lo = 0;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

double log2_big(const BigInt& x)
{
    if (x <= 0) throw ParameterError("x", "logarithm of a non-positive number");
    const unsigned top = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (top < 53) return std::log2(x.convert_to<double>());
    const unsigned shift = top - 52;
    const BigInt head = x >> shift;
    return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace ordram
