#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffsunit/errors.hpp"
#include "support/oracles.hpp"

using namespace testsupport;

namespace {

std::string hypothesis_of(const std::vector<RatFunc>& f, const std::vector<RatFunc>& a) {
    try {
        Recurrence r(f, a);
    } catch (const HypothesisError& e) {
        return e.hypothesis;
    }
    return "";
}

}  // namespace

TEST_CASE("constructor validates its hypotheses") {
    CHECK(hypothesis_of({RF("1"), RF("0")}, {RF("x"), RF("x+1")}) == "coefficient_zero");
    CHECK(hypothesis_of({RF("1"), RF("1")}, {RF("x"), RF("0")}) == "root_zero");
    CHECK(hypothesis_of({RF("1"), RF("1")}, {RF("x"), RF("x")}) == "roots_distinct");
    CHECK(hypothesis_of({RF("1")}, {RF("x")}) == "order");
    CHECK(hypothesis_of({RF("1"), RF("1"), RF("1")}, {RF("x"), RF("x+1")}) == "length_mismatch");
    CHECK(hypothesis_of({RF("x"), RF("-x-1")}, {RF("x+1"), RF("x")}).empty());
}

TEST_CASE("terms of the fixed sequences") {
    Recurrence r1 = e1();
    CHECK(r1.term(2) == RF("x^2 + x"));
    CHECK(r1.term(1) == RatFunc());
    CHECK(r1.term(0) == RF("-1"));

    Recurrence r2 = e2();
    CHECK(r2.sum_terms({2, 1}) == RF("-2*x - 2"));
    CHECK(r2.term(0) == RatFunc());
    CHECK(r2.term(3) == RF("x^3 - (x+1)^3"));
}

TEST_CASE("term(0) is the sum of the coefficients") {
    Rng rng(99);
    for (int it = 0; it < 30; ++it) {
        std::vector<RatFunc> f{rng.nonzero_ratfunc(3), rng.nonzero_ratfunc(3)};
        std::vector<RatFunc> a{RF("x"), RF("x+1")};
        Recurrence r(f, a);
        CHECK(r.term(0) == f[0] + f[1]);
    }
}

TEST_CASE("sum_terms is additive over index lists") {
    Recurrence r = e2();
    RatFunc lhs = r.sum_terms({5, 3, 2});
    CHECK(lhs == r.term(5) + r.term(3) + r.term(2));
    CHECK(r.sum_terms({4}) == r.term(4));
}

TEST_CASE("terms match the naive expansion") {
    Rng rng(777);
    for (int it = 0; it < 25; ++it) {
        std::vector<RatFunc> f{rng.nonzero_ratfunc(2), rng.nonzero_ratfunc(2)};
        std::vector<RatFunc> a{RF("x"), RF("x^2+1")};
        Recurrence r(f, a);
        long n = rng.pick(0, 8);
        CHECK(r.term(n) == naive_term(r, n));
    }
}

TEST_CASE("nondegeneracy detects constant root ratios") {
    CHECK_FALSE(Recurrence({RF("1"), RF("1")}, {RF("x"), RF("2*x")}).is_nondegenerate());
    CHECK(Recurrence({RF("1"), RF("1")}, {RF("x^2"), RF("x^2+x")}).is_nondegenerate());
    CHECK(e1().is_nondegenerate());
    CHECK(e2().is_nondegenerate());
}

TEST_CASE("nonconstant root test") {
    CHECK_FALSE(Recurrence({RF("1"), RF("1")}, {RF("2"), RF("x")}).roots_nonconstant());
    CHECK(Recurrence({RF("1"), RF("1")}, {RF("(x+1)/x"), RF("x^2")}).roots_nonconstant());
}

TEST_CASE("multiplicative independence of function pairs") {
    CHECK(multiplicatively_independent(RF("x"), RF("x+1")));
    CHECK_FALSE(multiplicatively_independent(RF("x^2"), RF("x^3")));
    CHECK(multiplicatively_independent(RF("x/(x+1)"), RF("x^2+x")));
    CHECK_FALSE(multiplicatively_independent(RF("x/(x+1)"), RF("(x+1)^2/x^2")));
    CHECK_FALSE(multiplicatively_independent(RF("2"), RF("x")));
}

TEST_CASE("independence needs multiplicity-refined valuations") {
    // Same support, different exponent patterns: x^2(x+1)^3 vs x^3(x+1)^2.
    RatFunc a(P("x^2") * P("x+1").pow(3), Poly::one());
    RatFunc b(P("x^3") * P("x+1").pow(2), Poly::one());
    CHECK(multiplicatively_independent(a, b));
    CHECK_FALSE(multiplicatively_independent(a * b, (a * b).pow(2)));
}

TEST_CASE("independence is symmetric and survives inversion") {
    Rng rng(31337);
    for (int it = 0; it < 40; ++it) {
        RatFunc a = rng.nonzero_ratfunc(4);
        RatFunc b = rng.nonzero_ratfunc(4);
        bool ind = multiplicatively_independent(a, b);
        CHECK(ind == multiplicatively_independent(b, a));
        CHECK(ind == multiplicatively_independent(a.inverse(), b));
        if (ind) {
            CHECK_FALSE(multiplicatively_independent(a, a));
            CHECK(multiplicatively_independent(a * b, b));
        }
    }
}

TEST_CASE("powers of one function are never independent") {
    Rng rng(2718);
    for (int it = 0; it < 30; ++it) {
        RatFunc a = rng.nonzero_ratfunc(3);
        long n = rng.pick(1, 3), m = rng.pick(1, 3);
        CHECK_FALSE(multiplicatively_independent(a.pow(n), a.pow(m)));
    }
}

TEST_CASE("pairwise independence implies nondegeneracy") {
    Rng rng(1618);
    int seen = 0;
    for (int it = 0; it < 120 && seen < 25; ++it) {
        RatFunc a = rng.nonzero_ratfunc(3);
        RatFunc b = rng.nonzero_ratfunc(3);
        if (!multiplicatively_independent(a, b)) continue;
        ++seen;
        Recurrence r({RF("1"), RF("1")}, {a, b});
        CHECK(r.pairwise_mult_independent());
        CHECK(r.is_nondegenerate());
    }
    CHECK(seen >= 25);
}
