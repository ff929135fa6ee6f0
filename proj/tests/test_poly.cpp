#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffsunit/errors.hpp"
#include "support/oracles.hpp"

using namespace testsupport;

TEST_CASE("division with remainder") {
    auto [q, r] = poly_divmod(P("x^3 + 1"), P("x^2 + 1"));
    CHECK(q == P("x"));
    CHECK(r == P("1 - x"));

    auto [q2, r2] = poly_divmod(P("x^3 + 2*x^2 + x"), P("x + 1"));
    CHECK(q2 == P("x^2 + x"));
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(poly_divmod(P("x"), Poly()), DomainError);
}

TEST_CASE("exact division and divisibility") {
    CHECK(poly_divexact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    CHECK(poly_divides(P("x + 1"), P("x^2 - 1")));
    CHECK_FALSE(poly_divides(P("x + 2"), P("x^2 - 1")));
    CHECK(poly_divides(P("5"), P("x^2 - 1")));
    CHECK_THROWS_AS(poly_divexact(P("x^2 + 1"), P("x + 1")), InternalError);
}

TEST_CASE("gcd on fixed cases") {
    CHECK(poly_gcd(P("x^2 - 1"), P("x^2 + 2*x + 1")) == P("x + 1"));
    CHECK(poly_gcd(P("x^3 + 2*x^2 + x"), P("x^2 + x")) == P("x^2 + x"));
    CHECK(poly_gcd(P("x^2 + 1"), P("x^2 - 1")) == Poly::one());
    CHECK(poly_gcd(Poly(), P("3*x + 3")) == P("x + 1"));
    CHECK(poly_gcd(P("7"), P("x^2 + x")) == Poly::one());
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), DomainError);
}

TEST_CASE("gcd properties on random inputs") {
    Rng rng(20240601);
    for (int it = 0; it < 120; ++it) {
        Poly a = rng.nonzero_poly(8);
        Poly b = rng.nonzero_poly(8);
        Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(poly_divides(g, a));
        CHECK(poly_divides(g, b));
        // Common factors scale the gcd.
        Poly c = rng.nonzero_poly(4);
        if (!c.is_constant()) {
            Poly gc = poly_gcd(a * c, b * c);
            CHECK(gc == (g * c).monic());
        }
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("x^3 + 2*x^2 + x")) == P("x^2 + x"));
    CHECK(squarefree_part(P("7")) == Poly::one());
    CHECK(squarefree_part(P("2*x^2 - 2")) == P("x^2 - 1"));
    CHECK_THROWS_AS(squarefree_part(Poly()), DomainError);
}

TEST_CASE("squarefree decomposition") {
    auto dec = squarefree_decomposition(P("x^3 + 2*x^2 + x"));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P("x"));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P("x + 1"));
    CHECK(dec[1].second == 2);

    auto pw = squarefree_decomposition(P("x^5"));
    REQUIRE(pw.size() == 1);
    CHECK(pw[0].first == P("x"));
    CHECK(pw[0].second == 5);

    CHECK(squarefree_decomposition(P("9")).empty());
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        Poly a = rng.nonzero_poly(5) * rng.nonzero_poly(3);
        if (rng.pick(0, 1)) a = a * a;          // force repeated factors sometimes
        auto dec = squarefree_decomposition(a);
        Poly prod = Poly::one();
        for (const auto& [part, mult] : dec) {
            CHECK(part.is_monic());
            CHECK(squarefree_part(part) == part);
            prod = prod * part.pow(static_cast<unsigned long>(mult));
        }
        CHECK(prod == a.monic());
    }
}

TEST_CASE("gcd-free basis on fixed cases") {
    auto b1 = gcd_free_basis({P("x^2 + x"), P("x")});
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == P("x"));
    CHECK(b1[1] == P("x + 1"));

    auto b2 = gcd_free_basis({P("x^2"), P("x^3")});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == P("x"));

    CHECK(gcd_free_basis({}).empty());
    CHECK(gcd_free_basis({P("5")}).empty());
    CHECK_THROWS_AS(gcd_free_basis({Poly()}), DomainError);
}

TEST_CASE("gcd-free basis properties") {
    Rng rng(99);
    for (int it = 0; it < 60; ++it) {
        std::vector<Poly> in;
        int k = static_cast<int>(rng.pick(1, 4));
        for (int i = 0; i < k; ++i) in.push_back(rng.nonzero_poly(5));
        auto basis = gcd_free_basis(in);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].is_monic());
            CHECK(!basis[i].is_constant());
            CHECK(squarefree_part(basis[i]) == basis[i]);
            CHECK(poly_gcd(basis[i], basis[i].derivative()).is_constant());
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                CHECK(poly_gcd(basis[i], basis[j]).is_constant());
                CHECK(poly_less(basis[i], basis[j]));
            }
        }
        // Every input is a constant times a product of powers of basis
        // elements: divide them all out and a constant must remain.
        for (const Poly& a : in) {
            Poly rest = a;
            for (const Poly& b : basis)
                while (!rest.is_constant() && poly_divides(b, rest))
                    rest = poly_divexact(rest, b);
            CHECK(rest.is_constant());
        }
    }
}

TEST_CASE("multiplicity by trial division") {
    CHECK(poly_multiplicity(P("x^2 + 2*x + 1"), P("x + 1")) == 2);
    CHECK(poly_multiplicity(P("x^2 + 1"), P("x + 1")) == 0);
    CHECK(poly_multiplicity(P("3"), P("x")) == 0);
    CHECK_THROWS_AS(poly_multiplicity(Poly(), P("x")), DomainError);
    CHECK_THROWS_AS(poly_multiplicity(P("x"), P("2")), DomainError);
}

TEST_CASE("rendering") {
    CHECK(poly_str(P("x^2 - 3/2*x + 1")) == "x^2 - 3/2*x + 1");
    CHECK(poly_str(Poly()) == "0");
    CHECK(poly_str(P("-x - 1")) == "-x - 1");
    CHECK(poly_str(P("2*x^3 + 5")) == "2*x^3 + 5");
    CHECK(poly_str(P("x") * Rat(-1)) == "-x");
}

TEST_CASE("pow and derivative") {
    CHECK(P("x + 1").pow(3) == P("x^3 + 3*x^2 + 3*x + 1"));
    CHECK(P("x + 1").pow(0) == Poly::one());
    CHECK(P("x^3 + 2*x").derivative() == P("3*x^2 + 2"));
    CHECK(Poly().derivative().is_zero());
}
