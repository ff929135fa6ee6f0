#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffsunit/bounds.hpp"
#include "ffsunit/errors.hpp"
#include "support/oracles.hpp"

using namespace testsupport;

TEST_CASE("vanishing unit sum height bound") {
    CHECK(unit_sum_height_bound(2, 3) == Rat(3));
    CHECK(unit_sum_height_bound(4, 3) == Rat(18));
    CHECK(unit_sum_height_bound(2, 5, 2) == Rat(7));
    CHECK(unit_sum_height_bound(3, 0) == Rat(0));
    CHECK_THROWS_AS(unit_sum_height_bound(0, 3), DomainError);
    CHECK_THROWS_AS(unit_sum_height_bound(2, -1), DomainError);

    // Monotone in every argument.
    for (long k = 2; k <= 5; ++k)
        for (long s = 0; s <= 4; ++s) {
            CHECK(unit_sum_height_bound(k + 1, s) >= unit_sum_height_bound(k, s));
            CHECK(unit_sum_height_bound(k, s + 1) >= unit_sum_height_bound(k, s));
            CHECK(unit_sum_height_bound(k, s, 3) >= unit_sum_height_bound(k, s, 0));
        }
}

TEST_CASE("lattice gap on fixed pairs") {
    CHECK(lattice_gap(RF("x"), RF("x+1")) == Rat(1));
    CHECK(lattice_gap(RF("x^2/(x+1)"), RF("(x+1)^3/x")) == Rat(2));
    CHECK(lattice_gap(RF("x+1"), RF("x")) == Rat(1));
    CHECK_THROWS_AS(lattice_gap(RF("x"), RF("x^2")), HypothesisError);
    CHECK_THROWS_AS(lattice_gap(RF("3"), RF("x")), DomainError);
    CHECK_THROWS_AS(lattice_gap(RF("x"), RatFunc()), DomainError);
    try {
        lattice_gap(RF("x/(x+1)"), RF("(x+1)^2/x^2"));
        CHECK(false);
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "mult_independence");
    }
}

TEST_CASE("lattice gap scales heights on integer grids") {
    auto sound = [](const RatFunc& a, const RatFunc& b, int grid) {
        Rat gap = lattice_gap(a, b);
        for (int n = 0; n <= grid; ++n)
            for (int m = 0; m <= grid; ++m) {
                if (n == 0 && m == 0) continue;
                RatFunc f = a.pow(n) / b.pow(m);
                Rat h(height(f).value());
                CHECK(h >= gap * Rat(std::max(n, m)));
            }
    };
    sound(RF("x"), RF("x+1"), 10);
    sound(RF("x^2/(x+1)"), RF("(x+1)^3/x"), 8);
    sound(RF("x^2+1"), RF("x^3+x+1"), 6);

    // For x and x+1 the scaled bound is attained at every grid point.
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m) {
            if (n == 0 && m == 0) continue;
            RatFunc f = RF("x").pow(n) / RF("x+1").pow(m);
            CHECK(height(f).value() == std::max(n, m));
        }
}

TEST_CASE("single-index bound on the worked example") {
    BoundReport rep = bound_single(e1(), PlaceSet::make({}, false));
    CHECK(rep.mode == "single");
    CHECK(rep.enlarged_S.place_count() == 3);
    CHECK(rep.constant("C1") == Rat(3));
    CHECK(rep.constant("C2") == Rat(4));
    CHECK(rep.constant("C3") == Rat(4));
    CHECK(rep.final_bound == 4);
    CHECK(rep.gaps.empty());
    CHECK(rep.per_shift.empty());
}

TEST_CASE("single-index bound on a second sequence") {
    Recurrence r({RF("1"), RF("1")}, {RF("x"), RF("x+1")});
    BoundReport rep = bound_single(r, PlaceSet::make({}, false));
    CHECK(rep.constant("C1") == Rat(3));
    CHECK(rep.constant("C2") == Rat(3));
    CHECK(rep.constant("C3") == Rat(3));
    CHECK(rep.final_bound == 3);
}

TEST_CASE("single-index bound grows with the user place set") {
    Recurrence r = e1();
    BoundReport small = bound_single(r, PlaceSet::make({}, false));
    BoundReport big = bound_single(r, PlaceSet::make({P("x^2 + 1")}, false));
    CHECK(big.enlarged_S.place_count() == 5);
    CHECK(big.final_bound >= small.final_bound);
    CHECK(big.constant("C1") == Rat(5));
}

TEST_CASE("single-index bound rejects degenerate recurrences") {
    Recurrence r({RF("1"), RF("1")}, {RF("x"), RF("2*x")});
    try {
        bound_single(r, PlaceSet::make({}, false));
        CHECK(false);
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "nondegeneracy");
    }
}

TEST_CASE("pair bound on the worked example") {
    BoundReport rep = bound_pair(e2(), PlaceSet::make({}, false));
    CHECK(rep.mode == "pair");
    CHECK(rep.enlarged_S.place_count() == 3);
    CHECK(rep.constant("C4") == Rat(18));
    CHECK(rep.constant("C5") == Rat(18));
    CHECK(rep.constant("C6") == Rat(18));
    CHECK(rep.constant("C7") == Rat(36));
    CHECK(rep.constant("C8") == Rat(36));
    CHECK(rep.constant("C9") == Rat(18));
    CHECK(rep.constant("C10") == Rat(298));
    CHECK(rep.constant("C11") == Rat(316));
    CHECK(rep.constant("C12") == Rat(18));
    CHECK(rep.constant("C13") == Rat(18));
    CHECK(rep.final_bound == 316);

    CHECK(rep.S_prime.place_count() == 280);
    REQUIRE(rep.gaps.size() == 2);
    CHECK(std::get<2>(rep.gaps[0]) == Rat(1));
    CHECK(std::get<2>(rep.gaps[1]) == Rat(1));

    REQUIRE(rep.per_shift.size() == 18);
    const PerShiftBound& last = rep.per_shift.back();
    CHECK(last.b == 18);
    CHECK(last.coeff_ratio_height == Rat(18));
    CHECK(last.value == Rat(298));
    for (const PerShiftBound& row : rep.per_shift) CHECK(row.value <= Rat(298));
}

TEST_CASE("pair bound is recomputable from its recorded constants") {
    BoundReport rep = bound_pair(e2(), PlaceSet::make({}, false));
    Rat final_rat = std::max({rep.constant("C4"), rep.constant("C5"), rep.constant("C8"),
                              rep.constant("C11"), rep.constant("C13")});
    CHECK(rep.final_bound == rat_floor_long(final_rat));
    CHECK(rep.constant("C11") == rep.constant("C10") + rep.constant("C9"));
    CHECK(rep.constant("C8") == rep.constant("C7"));
    Rat c10(0);
    for (const PerShiftBound& row : rep.per_shift) c10 = std::max(c10, row.value);
    CHECK(c10 == rep.constant("C10"));
}

TEST_CASE("bounds are deterministic") {
    PlaceSet empty = PlaceSet::make({}, false);
    BoundReport a = bound_pair(e2(), empty);
    BoundReport b = bound_pair(e2(), empty);
    CHECK(a.final_bound == b.final_bound);
    CHECK(a.constants == b.constants);
    CHECK(a.S_prime == b.S_prime);
    REQUIRE(a.per_shift.size() == b.per_shift.size());
    for (std::size_t i = 0; i < a.per_shift.size(); ++i) {
        CHECK(a.per_shift[i].b == b.per_shift[i].b);
        CHECK(a.per_shift[i].value == b.per_shift[i].value);
    }
}

TEST_CASE("pair bound validates each hypothesis") {
    PlaceSet empty = PlaceSet::make({}, false);
    auto hyp = [&](std::vector<RatFunc> roots) {
        try {
            bound_pair(Recurrence({RF("1"), RF("-1")}, std::move(roots)), empty);
        } catch (const HypothesisError& e) {
            return e.hypothesis;
        }
        return std::string();
    };
    CHECK(hyp({RF("x"), RF("2*x")}) == "nondegeneracy");
    CHECK(hyp({RF("2"), RF("x")}) == "roots_nonconstant");
    CHECK(hyp({RF("x^2"), RF("x^3")}) == "mult_independence");
    CHECK(hyp({RF("x"), RF("x+1")}).empty());
}
