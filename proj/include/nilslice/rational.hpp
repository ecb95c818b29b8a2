#pragma once

#include <gmpxx.h>
#include <string>

namespace nilslice {

/// Exact rational scalar. mpq_class keeps the canonical form invariant
/// (positive denominator, reduced fraction) for all arithmetic results.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace nilslice
