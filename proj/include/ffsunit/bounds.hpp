#pragma once

#include <string>
#include <vector>

#include "ffsunit/places.hpp"
#include "ffsunit/recurrence.hpp"

namespace ffsunit {

// Upper bound for the height of any coordinate of a nondegenerate vanishing
// sum of k S-units over a function field of the given genus:
//   (k choose 2) * (|S| + max(0, 2*genus - 2)).
// Our base field is Q(x) (genus 0), but the genus is kept explicit.
Rat unit_sum_height_bound(long k, long s_count, long genus = 0);

// The pair-gap seminorm for two nonzero, nonconstant, multiplicatively
// independent functions g and d:
//   gap(g, d) = min over (s, t) real with max(s, t) = 1, s, t >= 0 of
//               H(g^s / d^t)
// where H extends to real exponents through the degree-weighted valuation
// vectors.  The minimum is positive and attained at a rational point; exact
// value returned.  Scaling: H(g^n / d^m) >= gap(g, d) * max(n, m) for all
// integers n, m >= 0 not both zero.
Rat lattice_gap(const RatFunc& g, const RatFunc& d);

struct PerShiftBound {
    long b = 0;                      // the fixed difference n - m
    Rat coeff_ratio_height;          // max height of ratios of shifted coefficients
    Rat value;                       // bound candidate for this b
};

// Everything computed on the way to an index bound.  `constants` holds the
// named intermediate constants in evaluation order; every value is exact and
// the final bound is recomputable from them.
struct BoundReport {
    std::string mode;                            // "single" or "pair"
    PlaceSet enlarged_S;                         // S plus support of all f_i, a_i
    std::vector<std::pair<std::string, Rat>> constants;
    std::vector<std::tuple<int, int, Rat>> gaps; // (i, j, gap) over ordered pairs, 1-based
    PlaceSet S_prime;                            // pair mode only
    std::vector<PerShiftBound> per_shift;        // pair mode only
    long final_bound = 0;

    const Rat& constant(const std::string& name) const;
};

// Bound N such that G_n an S-unit implies n <= N.  Requires a nondegenerate
// recurrence.  S is the user set; the report records the enlarged set
// actually used.
BoundReport bound_single(const Recurrence& r, const PlaceSet& S, long genus = 0);

// Bound N such that G_n + G_m an S-unit with n > m >= 0 implies n <= N.
// Requires nondegeneracy, nonconstant roots, and pairwise multiplicative
// independence of the roots.
BoundReport bound_pair(const Recurrence& r, const PlaceSet& S, long genus = 0);

} // namespace ffsunit
