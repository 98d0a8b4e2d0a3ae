#pragma once

// Arbitrary-precision integer used everywhere in the library.

#include "nstep/errors.hpp"

#include <gmpxx.h>

#include <string>

namespace nstep {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& text) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0) {
        throw ParseError("not a decimal integer: '" + text + "'");
    }
    return v;
}

// (-1)^e as +1/-1.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace nstep
