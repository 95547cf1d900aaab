/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic for the whole library, backed by GMP's
 * mpq_class.  Everything downstream (polynomials, series, linear
 * algebra, connection matrices) is computed over Q with no rounding.
 *
 * Text form is "num/den" with the denominator omitted when it is 1,
 * e.g. "3", "-5/2".  That is the canonical serialization used by every
 * report and fixture in this project.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gms {

using Rat = mpq_class;

// Build a canonical fraction num/den (den != 0).
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Parse "num" or "num/den" (optional leading sign).
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Exact integer extraction; throws when the value is not an integer.
inline long rat_to_long(const Rat& q) {
    if (q.get_den() != 1)
        throw std::domain_error("expected integer, got " + rat_to_string(q));
    if (!q.get_num().fits_slong_p())
        throw std::overflow_error("integer out of range: " + rat_to_string(q));
    return q.get_num().get_si();
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

}  // namespace gms
