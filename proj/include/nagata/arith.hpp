#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nagata {

// Exact integers everywhere; rationals only in pivots and evaluation points.
// No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// gmpxx has no long long constructors; funnel 64-bit values through here.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// b!/(b-a)!, the coefficient picked up when d^a/dt^a hits t^b.
inline Int falling_factorial(int b, int a) {
    Int r(1);
    for (int t = 0; t < a; ++t) r *= (b - t);
    return r;
}

inline Int factorial(int n) { return falling_factorial(n, n); }

/// Largest integer magnitude that survives a double-precision JSON number.
inline bool fits_json_number(const Int& v) {
    static const Int bound = (Int(1) << 53) - 1;
    return cmp(abs(v), bound) <= 0;
}

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nagata
