#pragma once

#include <gmpxx.h>
#include <string>

namespace dialg {

// Exact rational coefficients. All ranks and codimensions are computed over Q;
// nothing in the library ever rounds.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "num/den", or just "num" when den == 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace dialg
