#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffsunit/rational.hpp"

namespace ffsunit {

// Dense univariate polynomial over the rationals.  Coefficients are stored in
// ascending degree order with no trailing zeros, so the zero polynomial is the
// empty vector and degree() == -1 for it.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c) { coeffs_.push_back(c); trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // c * x^k
    static Poly monomial(const Rat& c, int k);
    static Poly x() { return monomial(1, 1); }
    static Poly one() { return Poly(Rat(1)); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    // Coefficient of x^k (zero outside the stored range).
    const Rat& coeff(int k) const;
    Rat& coeff_mut(int k);            // k must be <= degree()
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    const Rat& leading() const;       // requires nonzero
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative() const;
    Poly monic() const;               // requires nonzero
    Poly pow(unsigned long k) const;

    Rat eval(const Rat& v) const;     // Horner

  private:
    void trim();

    std::vector<Rat> coeffs_;
};

// Quotient and remainder of a by b (b nonzero), deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Exact quotient; throws InternalError if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// Does b divide a?  (b nonzero; everything divides zero.)
bool poly_divides(const Poly& b, const Poly& a);

// Monic gcd.  poly_gcd(0, 0) is undefined and throws.  The implementation
// runs a subresultant PRS on primitive integer parts, with a modular
// coprimality certificate that short-circuits the common coprime case.
Poly poly_gcd(const Poly& a, const Poly& b);

// Monic radical a / gcd(a, a'): the product of the distinct irreducible
// factors of a, each to the first power.  Constants map to 1; a must be
// nonzero.
Poly squarefree_part(const Poly& a);

// Squarefree decomposition (Yun): returns pairs (part, multiplicity) with the
// parts monic, squarefree, pairwise coprime and nonconstant, such that
// monic(a) = prod part^multiplicity.  a must be nonzero.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

// Given nonzero polynomials, return monic squarefree pairwise-coprime
// nonconstant polynomials such that every input is, up to a constant, a
// product of powers of basis elements.  Result is sorted canonically
// (ascending degree, then coefficient order from the leading term down).
std::vector<Poly> gcd_free_basis(const std::vector<Poly>& inputs);

// Deterministic total order used for canonical sorting of polynomials:
// by degree, then by coefficients compared from the leading term down.
bool poly_less(const Poly& a, const Poly& b);

// Largest k with b^k dividing a (a nonzero, b nonconstant).
int poly_multiplicity(const Poly& a, const Poly& b);

// Render in descending-degree form, e.g. "x^2 - 3/2*x + 1".
std::string poly_str(const Poly& p);

} // namespace ffsunit
