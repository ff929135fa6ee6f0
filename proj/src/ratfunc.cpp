#include "ffsunit/ratfunc.hpp"

#include "ffsunit/errors.hpp"

namespace ffsunit {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = g.is_one() ? num : poly_divexact(num, g);
    Poly d = g.is_one() ? den : poly_divexact(den, g);
    const Rat& l = d.leading();
    num_ = (l == 1) ? std::move(n) : n / l;
    den_ = (l == 1) ? std::move(d) : d / l;
}

RatFunc::RatFunc(Poly num, Poly den, reduced_tag) {
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    const Rat& l = den.leading();
    if (l != 1) {
        num = num / l;
        den = den / l;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, reduced_tag{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-reduce before multiplying; the products are then already coprime.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n = (g1.is_one() ? num_ : poly_divexact(num_, g1)) *
             (g2.is_one() ? o.num_ : poly_divexact(o.num_, g2));
    Poly d = (g2.is_one() ? den_ : poly_divexact(den_, g2)) *
             (g1.is_one() ? o.den_ : poly_divexact(o.den_, g1));
    return RatFunc(std::move(n), std::move(d), reduced_tag{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RatFunc(den_, num_, reduced_tag{});
}

RatFunc RatFunc::pow(long k) const {
    if (k == 0) return RatFunc(Rat(1));
    if (k < 0) return inverse().pow(-k);
    if (is_zero()) return RatFunc();
    // num and den are coprime, so their powers are too.
    return RatFunc(num_.pow(static_cast<unsigned long>(k)),
                   den_.pow(static_cast<unsigned long>(k)), reduced_tag{});
}

std::string ratfunc_str(const RatFunc& f) {
    if (f.den().is_one()) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ")/(" + poly_str(f.den()) + ")";
}

} // namespace ffsunit
