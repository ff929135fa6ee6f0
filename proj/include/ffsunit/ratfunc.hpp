#pragma once

#include <string>

#include "ffsunit/poly.hpp"

namespace ffsunit {

// Element of the rational function field Q(x), kept in canonical form:
// numerator and denominator coprime, denominator monic, zero stored as 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(const Poly& num, const Poly& den);   // normalizes; den nonzero

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;   // o nonzero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;                     // requires nonzero

    // Integer power; negative k requires a nonzero base.
    RatFunc pow(long k) const;

  private:
    struct reduced_tag {};
    RatFunc(Poly num, Poly den, reduced_tag);    // already coprime; monicizes den

    Poly num_, den_;
};

// Render as "num" when the denominator is 1, else "(num)/(den)".
std::string ratfunc_str(const RatFunc& f);

} // namespace ffsunit
