#pragma once

#include <optional>
#include <vector>

#include "ffsunit/bounds.hpp"

namespace ffsunit {

// A certified S-unit value in the sequence: the value itself and its divisor
// over (a refinement of) the enlarged place set.
struct Witness {
    RatFunc value;
    Divisor div;
    std::vector<Poly> basis;         // basis the divisor is expressed over
};

struct SingleSolution {
    long n = 0;
    Witness witness;
};

struct PairSolution {
    long n = 0, m = 0;               // n > m >= 0
    Witness witness;
};

struct SolveSingleReport {
    BoundReport bound;
    std::vector<SingleSolution> enlarged;   // S-units for the enlarged set
    std::vector<SingleSolution> user;       // subset that are units for the user set
};

struct SolvePairReport {
    BoundReport bound;
    std::vector<PairSolution> enlarged;
    std::vector<PairSolution> user;
};

struct VerifyReport {
    std::vector<long> indices;
    RatFunc value;
    bool is_unit = false;                   // for the enlarged set
    bool is_unit_user = false;              // for the user set as given
    std::optional<Witness> witness;         // absent when the value is zero
};

struct WindowHit {
    long n = 0;
    long m = -1;                            // -1 in single mode
};

struct WindowReport {
    long lo = 0, hi = 0;
    std::vector<WindowHit> hits;            // S-units for the enlarged set
};

// Compute the bound, enumerate n = 0..bound, and certify every S-unit value.
// Zero values of G_n are skipped (never units).  Every reported solution is
// double-checked through the divisor route; disagreement is an internal
// error.  `threads` splits the enumeration; results are identical for any
// thread count.
SolveSingleReport solve_single(const Recurrence& r, const PlaceSet& S,
                               int threads = 1, long genus = 0);

// Same for G_n + G_m, n > m >= 0, enumerated up to the pair bound.
SolvePairReport solve_pair(const Recurrence& r, const PlaceSet& S,
                           int threads = 1, long genus = 0);

// Decide whether G_{n_1} + ... + G_{n_k} is an S-unit for the enlarged set
// (and for the user set), with a certified witness.  Indices must be strictly
// decreasing and nonnegative.
VerifyReport verify_sum(const Recurrence& r, const PlaceSet& S,
                        const std::vector<long>& indices);

// Scan n in [lo, hi] (and m < n in pair mode) for S-units of the enlarged
// set, without computing any bound.  Used as an empirical consistency check
// above a proven bound.
WindowReport window_scan(const Recurrence& r, const PlaceSet& S, bool pair_mode,
                         long lo, long hi, int threads = 1);

} // namespace ffsunit
