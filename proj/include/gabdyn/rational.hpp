#pragma once

#include <gmpxx.h>

#include <string>

#include "gabdyn/errors.hpp"

namespace gabdyn {

// All arithmetic in this project is exact. Rat is a canonical rational
// (lowest terms, positive denominator); Int is an arbitrary-precision
// integer. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in canonical form. den must be nonzero.
inline Rat frac(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Exact conversion to long; throws if q is not an integer or does not fit.
inline long to_long(const Rat& q) {
    if (!is_integer(q)) throw consistency_error("expected integer, got " + q.get_str());
    const Int& n = q.get_num();
    if (!n.fits_slong_p()) throw consistency_error("integer out of long range: " + n.get_str());
    return n.get_si();
}

/// Fractional part in [0, 1).
inline Rat mod1(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(fl);
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace gabdyn
