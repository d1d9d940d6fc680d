#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <limits>

#include "cliffcode/errors.hpp"

namespace cliffcode {

// Arbitrary-precision scalars. cpp_rational keeps gcd(num, den) = 1 and
// den > 0 after every operation, which is exactly the canonical form the
// rest of the library relies on for hashing and equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InputError("integer too large for 64-bit serialization: " + v.str());
    return static_cast<std::int64_t>(v);
}

/// Exact integer value of an integral rational; throws otherwise.
inline BigInt integer_value(const Rational& r) {
    if (!is_integer(r))
        throw InconsistencyError("expected an integer, got " + r.str());
    return numerator(r);
}

inline std::size_t hash_of(const Rational& r) {
    std::size_t seed = boost::hash<BigInt>()(numerator(r));
    boost::hash_combine(seed, boost::hash<BigInt>()(denominator(r)));
    return seed;
}

} // namespace cliffcode
