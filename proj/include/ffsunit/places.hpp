#pragma once

#include <optional>
#include <vector>

#include "ffsunit/ratfunc.hpp"

namespace ffsunit {

// A finite set of places of Q(x), viewed inside C(x).  Finite places are
// bundled by monic squarefree pairwise-coprime polynomials: each polynomial b
// stands for the deg(b) places of C(x) at the complex roots of b.  The place
// at infinity is tracked by a flag.
//
// Construction canonicalizes arbitrary nonzero generators through a gcd-free
// basis, so membership and counting are well defined.
class PlaceSet {
  public:
    PlaceSet() = default;

    // finite: any nonzero polynomials (constants are dropped).
    static PlaceSet make(const std::vector<Poly>& finite, bool with_infinity);

    const std::vector<Poly>& finite() const { return finite_; }
    bool has_infinity() const { return has_infinity_; }

    // Number of places of C(x) covered: sum of degrees, plus 1 for infinity.
    long place_count() const;

    bool operator==(const PlaceSet& o) const {
        return finite_ == o.finite_ && has_infinity_ == o.has_infinity_;
    }

  private:
    std::vector<Poly> finite_;      // monic, squarefree, pairwise coprime, sorted
    bool has_infinity_ = false;
};

// The divisor of a nonzero rational function, expressed over a gcd-free basis
// that refines the multiplicity structure of the function (and any extra
// context polynomials supplied by the caller).  Each basis element b carries
// one integer: the common valuation of the function at every root of b.
struct Divisor {
    std::vector<std::pair<Poly, int>> finite;   // (basis element, valuation), sorted, valuation != 0
    int at_infinity = 0;

    // Sum over all places of C(x), counted with degree weights.  Always zero
    // for a nonzero rational function.
    long weighted_total() const;
};

// Valuation at infinity: deg(den) - deg(num) in lowest terms.  f nonzero.
int valuation_at_infinity(const RatFunc& f);

// Valuation of f at the places of b: the common order of vanishing of f at
// the roots of b.  b must be nonconstant; the result is the multiplicity of b
// in num minus its multiplicity in den (exact when b is squarefree and lies
// in a basis refining f's multiplicity structure, which is how it is used).
int valuation_at(const RatFunc& f, const Poly& b);

// The squarefree-decomposition parts of num and den of f (nonzero): any
// gcd-free basis built from these (plus anything else) has a uniform
// valuation of f on each basis element, so valuation_at is exact on it.
std::vector<Poly> multiplicity_parts(const RatFunc& f);

// Divisor of f (nonzero), over a basis refining both f's squarefree
// decomposition and the given context polynomials.  Returns the divisor and
// the full basis used (basis elements with valuation zero are not listed in
// the divisor but matter for S-membership queries).
std::pair<Divisor, std::vector<Poly>> divisor(const RatFunc& f,
                                              const std::vector<Poly>& context = {});

// Height of f: the degree of the map f : P^1 -> P^1, i.e.
// max(deg num, deg den) in lowest terms.  Equals the negated sum of the
// degree-weighted negative parts of the divisor.  height(0) is infinite,
// encoded as std::nullopt.
std::optional<long> height(const RatFunc& f);

// Height recomputed from a divisor, as a cross-check: -sum of min(0, v) over
// all places with degree weights.
long height_from_divisor(const Divisor& d);

// Is f an S-unit: f nonzero and every place outside S has valuation 0.
// Implemented by stripping from num and den all factors supported on S and
// checking that nothing remains, plus the infinity rule.  A second,
// independent route recomputes the answer from divisor(); the two must agree.
bool is_s_unit(const RatFunc& f, const PlaceSet& S);

// The divisor-based route, exposed for cross-checks.
bool is_s_unit_by_divisor(const RatFunc& f, const PlaceSet& S);

// Smallest place set containing S and supporting every zero and pole of the
// given nonzero functions.  Infinity is added when any function has a nonzero
// valuation there (or S already contains it).
PlaceSet enlarge(const PlaceSet& S, const std::vector<RatFunc>& funcs);

} // namespace ffsunit
