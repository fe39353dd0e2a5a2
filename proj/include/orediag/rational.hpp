#pragma once

// Exact rational scalars. The whole library computes over Q; nothing here
// or downstream ever touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orediag {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

// "3" or "-3/4"; the denominator is printed only when it is not 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

// Bits needed for numerator and denominator; the coefficient-swell
// statistics report the running maximum of this over all intermediates.
inline std::size_t bit_length(const Rat& r) {
    if (is_zero(r)) return 0;
    std::size_t n = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

inline std::size_t bit_length(const Int& z) {
    if (sgn(z) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace orediag
