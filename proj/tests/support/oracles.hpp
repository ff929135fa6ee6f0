#pragma once

// Test-only helpers: deterministic random generators and a naive oracle for
// sequence terms and S-unit membership.  The oracle deliberately avoids the
// library's gcd-chain membership logic: terms are evaluated by repeated
// multiplication and membership is decided by clearing denominators and
// checking u | P^deg(u) with modular exponentiation.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ffsunit/parser.hpp"
#include "ffsunit/places.hpp"
#include "ffsunit/recurrence.hpp"

namespace testsupport {

using namespace ffsunit;

inline RatFunc RF(const std::string& s) { return parse_ratfunc(s); }
inline Poly P(const std::string& s) { return parse_poly(s); }

inline Recurrence e1() { return Recurrence({RF("x"), RF("-x - 1")}, {RF("x + 1"), RF("x")}); }
inline Recurrence e2() { return Recurrence({RF("1"), RF("-1")}, {RF("x"), RF("x + 1")}); }

inline RatFunc naive_term(const Recurrence& r, long n) {
    RatFunc acc;
    for (std::size_t i = 0; i < r.roots().size(); ++i) {
        RatFunc p(Rat(1));
        for (long k = 0; k < n; ++k) p = p * r.roots()[i];
        acc += r.coefficients()[i] * p;
    }
    return acc;
}

inline Poly powmod(Poly base, long e, const Poly& m) {
    Poly acc = Poly::one();
    base = poly_divmod(base, m).second;
    while (e > 0) {
        if (e & 1) acc = poly_divmod(acc * base, m).second;
        e >>= 1;
        if (e > 0) base = poly_divmod(base * base, m).second;
    }
    return acc;
}

inline bool naive_is_s_unit(const RatFunc& f, const PlaceSet& S) {
    if (f.is_zero()) return false;
    if (!S.has_infinity() && valuation_at_infinity(f) != 0) return false;
    Poly u = f.num() * f.den();
    if (u.is_constant()) return true;
    Poly prod = Poly::one();
    for (const Poly& b : S.finite()) prod = prod * b;
    if (prod.is_constant()) return false;
    return powmod(prod, u.degree(), u).is_zero();
}

// Deterministic generator with small rational coefficients.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    long pick(long lo, long hi) { return lo + static_cast<long>(g() % (hi - lo + 1)); }

    Rat small_rat() { return rat(pick(-9, 9), pick(1, 5)); }

    Rat nonzero_rat() {
        while (true) {
            Rat r = small_rat();
            if (r != 0) return r;
        }
    }

    Poly poly(int maxdeg) {
        int d = static_cast<int>(pick(0, maxdeg));
        std::vector<Rat> cs(static_cast<std::size_t>(d) + 1);
        for (auto& c : cs) c = small_rat();
        return Poly(std::move(cs));
    }

    Poly nonzero_poly(int maxdeg) {
        while (true) {
            Poly p = poly(maxdeg);
            if (!p.is_zero()) return p;
        }
    }

    Poly nonconstant_poly(int maxdeg) {
        while (true) {
            Poly p = poly(maxdeg);
            if (!p.is_constant()) return p;
        }
    }

    RatFunc nonzero_ratfunc(int maxdeg) {
        return RatFunc(nonzero_poly(maxdeg), nonzero_poly(maxdeg));
    }

    RatFunc ratfunc(int maxdeg) { return RatFunc(poly(maxdeg), nonzero_poly(maxdeg)); }
};

} // namespace testsupport
