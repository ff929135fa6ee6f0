#include "ffsunit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffsunit/errors.hpp"

namespace ffsunit {

namespace {

const Rat kZero(0);

} // namespace

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    Poly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, kZero);
    p.coeffs_.back() = c;
    return p;
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat& Poly::coeff_mut(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

const Rat& Poly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw DomainError("polynomial division by zero scalar");
    Poly r = *this;
    for (auto& a : r.coeffs_) a /= c;
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of zero polynomial");
    return *this / leading();
}

Poly Poly::pow(unsigned long k) const {
    Poly acc = Poly::one();
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

Rat Poly::eval(const Rat& v) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    const Rat& lb = b.leading();
    int dr = a.degree();
    while (dr >= db) {
        Rat c = rem[static_cast<std::size_t>(dr)] / lb;
        if (c != 0) {
            quot[static_cast<std::size_t>(dr - db)] = c;
            for (int i = 0; i < db; ++i)
                rem[static_cast<std::size_t>(dr - db + i)] -= c * b.coeff(i);
        }
        rem[static_cast<std::size_t>(dr)] = 0;
        --dr;
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    internal_check(r.is_zero(), "inexact polynomial division");
    return q;
}

bool poly_divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) throw DomainError("divisibility by zero polynomial");
    if (a.is_zero()) return true;
    if (b.is_constant()) return true;
    if (a.degree() < b.degree()) return false;
    return poly_divmod(a, b).second.is_zero();
}

// ---------------------------------------------------------------------------
// Integer layer for the gcd: primitive integer polynomials.

namespace {

using IPoly = std::vector<Int>;          // ascending, no trailing zeros

int ideg(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Strip denominators and content: returns primitive integer coefficients
// with positive leading coefficient.  The discarded scalar is irrelevant for
// a monic gcd.
IPoly primitive_int(const Poly& a) {
    Int l(1);
    for (const Rat& c : a.coeffs()) {
        Int d = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    IPoly out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rat scaled = a.coeffs()[i] * Rat(l);
        out[i] = scaled.get_num();      // denominator is 1 by construction
    }
    Int content(0);
    for (const Int& c : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (!out.empty() && out.back() < 0) content = -content;
    if (content != 0 && content != 1)
        for (Int& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

IPoly iprimitive(IPoly p) {
    Int content(0);
    for (const Int& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (!p.empty() && p.back() < 0) content = -content;
    if (content != 0 && content != 1)
        for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return p;
}

Poly from_int(const IPoly& p) {
    std::vector<Rat> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
    return Poly(std::move(c));
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IPoly iprem(IPoly r, const IPoly& b) {
    const int db = ideg(b);
    const Int& lb = b.back();
    int e = ideg(r) - db + 1;
    while (!r.empty() && ideg(r) >= db) {
        Int c = r.back();
        int k = ideg(r) - db;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] *= lb;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(k + i)] -= c * b[static_cast<std::size_t>(i)];
        itrim(r);
        --e;
    }
    if (e > 0) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (Int& c : r) c *= f;
    }
    return r;
}

// --- modular coprimality certificate ---------------------------------------
//
// For primitive a, b and a prime p not dividing either leading coefficient,
// deg gcd_Q(a, b) <= deg gcd_{F_p}(a mod p, b mod p).  So a constant modular
// gcd proves coprimality over Q.  The converse direction is never used: a
// nonconstant modular gcd just falls through to the exact routine.

constexpr unsigned long kPrimes[] = {2147483647UL, 2147483629UL, 2147483587UL};

using FPoly = std::vector<unsigned long>;

FPoly reduce_mod(const IPoly& a, unsigned long p) {
    FPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned long r = mpz_fdiv_ui(a[i].get_mpz_t(), p);
        out[i] = r;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

unsigned long fp_pow(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

void fp_mod_inplace(FPoly& r, const FPoly& b, unsigned long p) {
    const std::size_t db = b.size() - 1;
    unsigned long inv = fp_pow(b.back(), p - 2, p);
    while (r.size() > db) {
        unsigned long c = r.back() * inv % p;
        if (c != 0) {
            std::size_t k = r.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                unsigned long sub = c * b[i] % p;
                unsigned long& v = r[k + i];
                v = (v >= sub) ? v - sub : v + p - sub;
            }
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= db) break;
    }
}

int fp_gcd_degree(FPoly a, FPoly b, unsigned long p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        fp_mod_inplace(a, b, p);
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Returns true when a prime certifies that gcd_Q(a, b) is constant.
bool certified_coprime(const IPoly& a, const IPoly& b) {
    for (unsigned long p : kPrimes) {
        if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
        FPoly ap = reduce_mod(a, p);
        FPoly bp = reduce_mod(b, p);
        return fp_gcd_degree(std::move(ap), std::move(bp), p) == 0;
    }
    return false;
}

// Subresultant polynomial remainder sequence on primitive integer inputs
// with deg a >= deg b >= 1.  Keeps the intermediate coefficients polynomial
// in size instead of the exponential growth of a naive pseudo-remainder
// cascade.
IPoly subresultant_gcd(IPoly a, IPoly b) {
    Int g(1), h(1);
    while (true) {
        int delta = ideg(a) - ideg(b);
        IPoly r = iprem(a, b);
        if (r.empty()) return iprimitive(std::move(b));
        if (ideg(r) == 0) return {Int(1)};
        a = std::move(b);
        Int div = g;
        for (int i = 0; i < delta; ++i) div *= h;
        b.resize(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            mpz_divexact(b[i].get_mpz_t(), r[i].get_mpz_t(), div.get_mpz_t());
        g = a.back();
        if (delta > 0) {
            Int num;
            mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta > 1) {
                Int den;
                mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            h = num;
        }
    }
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();

    IPoly ia = primitive_int(a);
    IPoly ib = primitive_int(b);
    if (ideg(ia) < ideg(ib)) std::swap(ia, ib);
    if (certified_coprime(ia, ib)) return Poly::one();
    return from_int(subresultant_gcd(std::move(ia), std::move(ib))).monic();
}

Poly squarefree_part(const Poly& a) {
    if (a.is_zero()) throw DomainError("squarefree part of zero polynomial");
    if (a.is_constant()) return Poly::one();
    Poly g = poly_gcd(a, a.derivative());
    return poly_divexact(a, g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (a.is_constant()) return out;
    Poly f = a.monic();
    Poly g = poly_gcd(f, f.derivative());
    if (g.is_constant()) {
        out.emplace_back(f, 1);
        return out;
    }
    // Yun's algorithm.
    Poly c = poly_divexact(f, g).monic();
    Poly d = poly_divexact(f.derivative(), g) - c.derivative();
    int i = 1;
    while (!c.is_constant()) {
        Poly part = poly_gcd(c, d);
        if (!part.is_constant()) out.emplace_back(part, i);
        c = poly_divexact(c, part).monic();
        d = poly_divexact(d, part) - c.derivative();
        ++i;
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        int c = cmp(a.coeff(k), b.coeff(k));
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<Poly> gcd_free_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    for (const Poly& in : inputs) {
        if (in.is_zero()) throw DomainError("gcd-free basis of zero polynomial");
        Poly w = squarefree_part(in);
        if (w.is_constant()) continue;
        std::size_t i = 0;
        while (i < basis.size() && !w.is_constant()) {
            Poly g = poly_gcd(w, basis[i]);
            if (g.is_constant()) {
                ++i;
                continue;
            }
            if (g == basis[i]) {
                w = poly_divexact(w, g).monic();
            } else {
                // Split basis[i]; both parts stay coprime to everything else.
                Poly rest = poly_divexact(basis[i], g).monic();
                basis[i] = g;
                basis.push_back(rest);
                w = poly_divexact(w, g).monic();
            }
            ++i;
        }
        if (!w.is_constant()) basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end(), poly_less);
    return basis;
}

int poly_multiplicity(const Poly& a, const Poly& b) {
    if (a.is_zero()) throw DomainError("multiplicity in zero polynomial");
    if (b.is_constant()) throw DomainError("multiplicity of constant polynomial");
    int k = 0;
    Poly cur = a;
    while (cur.degree() >= b.degree()) {
        auto [q, r] = poly_divmod(cur, b);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++k;
    }
    return k;
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(k);
        if (c == 0) continue;
        Rat ab = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << ab.get_str();
        } else {
            if (ab != 1) out << ab.get_str() << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace ffsunit
