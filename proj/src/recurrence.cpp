#include "ffsunit/recurrence.hpp"

#include <vector>

#include "ffsunit/errors.hpp"
#include "ffsunit/places.hpp"

namespace ffsunit {

Recurrence::Recurrence(std::vector<RatFunc> coefficients, std::vector<RatFunc> roots)
    : coefficients_(std::move(coefficients)), roots_(std::move(roots)) {
    if (coefficients_.size() != roots_.size())
        throw HypothesisError("length_mismatch",
                              "coefficients and roots must have the same length");
    if (coefficients_.size() < 2)
        throw HypothesisError("order", "at least two terms f_i * a_i^n are required");
    for (const RatFunc& f : coefficients_)
        if (f.is_zero())
            throw HypothesisError("coefficient_zero", "coefficients must be nonzero");
    for (const RatFunc& a : roots_)
        if (a.is_zero()) throw HypothesisError("root_zero", "roots must be nonzero");
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (roots_[i] == roots_[j])
                throw HypothesisError("roots_distinct", "roots must be pairwise distinct");
}

RatFunc Recurrence::term(long n) const {
    if (n < 0) throw DomainError("negative sequence index");
    RatFunc acc;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        acc += coefficients_[i] * roots_[i].pow(n);
    return acc;
}

RatFunc Recurrence::sum_terms(const std::vector<long>& indices) const {
    RatFunc acc;
    for (long n : indices) acc += term(n);
    return acc;
}

bool Recurrence::is_nondegenerate() const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if ((roots_[i] / roots_[j]).is_constant()) return false;
    return true;
}

bool Recurrence::roots_nonconstant() const {
    for (const RatFunc& a : roots_)
        if (a.is_constant()) return false;
    return true;
}

bool Recurrence::pairwise_mult_independent() const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (!multiplicatively_independent(roots_[i], roots_[j])) return false;
    return true;
}

bool multiplicatively_independent(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero())
        throw DomainError("multiplicative independence of zero");
    // a^p = c * b^q (c constant) holds iff the divisors satisfy
    // p * div(a) = q * div(b); over genus 0 a function with zero divisor is
    // constant.  So the pair is dependent exactly when the degree-weighted
    // valuation vectors are linearly dependent over Q.
    // The basis must refine the multiplicity structure of both functions or
    // valuation_at would report minima instead of uniform valuations.
    std::vector<Poly> gens = multiplicity_parts(a);
    for (Poly& p : multiplicity_parts(b)) gens.push_back(std::move(p));
    std::vector<Poly> basis = gcd_free_basis(gens);
    std::vector<long> v, w;
    for (const Poly& p : basis) {
        long d = p.degree();
        v.push_back(d * valuation_at(a, p));
        w.push_back(d * valuation_at(b, p));
    }
    v.push_back(valuation_at_infinity(a));
    w.push_back(valuation_at_infinity(b));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] * w[j] != v[j] * w[i]) return true;
    return false;
}

} // namespace ffsunit
