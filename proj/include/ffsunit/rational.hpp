#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ffsunit/errors.hpp"

namespace ffsunit {

// Exact rational scalar.  All arithmetic in the library is exact; no floating
// point is used anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Construct p/q in canonical form.  mpq_class(p, q) does not canonicalize on
// its own, so this helper must be used instead of the raw constructor.
inline Rat rat(long p, long q = 1) {
    if (q == 0) throw DomainError("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& p, const Int& q) {
    if (q == 0) throw DomainError("rational with zero denominator");
    Rat r(p);
    r /= Rat(q);
    return r;
}

// Render as "p" or "p/q" (canonical lowest terms, denominator positive).
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// floor(r) as Int.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// floor(r) as long, for use as an enumeration limit.
inline long rat_floor_long(const Rat& r) {
    Int q = rat_floor(r);
    if (!q.fits_slong_p()) throw DomainError("bound does not fit in a machine integer");
    return q.get_si();
}

} // namespace ffsunit
