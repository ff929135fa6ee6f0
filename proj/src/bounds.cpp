#include "ffsunit/bounds.hpp"

#include <algorithm>
#include <tuple>

#include "ffsunit/errors.hpp"

namespace ffsunit {

Rat unit_sum_height_bound(long k, long s_count, long genus) {
    if (k < 1) throw DomainError("unit sum with fewer than one term");
    if (s_count < 0 || genus < 0) throw DomainError("negative place count or genus");
    long pairs = k * (k - 1) / 2;
    long extra = std::max(0L, 2 * genus - 2);
    return Rat(pairs) * Rat(s_count + extra);
}

namespace {

long finite_height(const RatFunc& f) {
    auto h = height(f);
    if (!h) throw DomainError("height of zero");
    return *h;
}

// Degree-weighted valuation data of two functions over a shared basis that
// refines both multiplicity structures.  Index layout: one entry per basis
// element, then the infinite place with weight 1.
struct PairValuations {
    std::vector<long> weight;
    std::vector<long> va, vb;
};

PairValuations shared_valuations(const RatFunc& a, const RatFunc& b) {
    std::vector<Poly> gens = multiplicity_parts(a);
    for (Poly& p : multiplicity_parts(b)) gens.push_back(std::move(p));
    std::vector<Poly> basis = gcd_free_basis(gens);
    PairValuations pv;
    for (const Poly& p : basis) {
        pv.weight.push_back(p.degree());
        pv.va.push_back(valuation_at(a, p));
        pv.vb.push_back(valuation_at(b, p));
    }
    pv.weight.push_back(1);
    pv.va.push_back(valuation_at_infinity(a));
    pv.vb.push_back(valuation_at_infinity(b));
    return pv;
}

// H(a^s / b^t) extended to rational exponents: half the weighted sum of
// |s*va_i - t*vb_i| (the positive and negative parts agree because the full
// weighted vector of any function sums to zero).
Rat seminorm(const PairValuations& pv, const Rat& s, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = 0; i < pv.weight.size(); ++i) {
        Rat term = s * Rat(pv.va[i]) - t * Rat(pv.vb[i]);
        acc += Rat(pv.weight[i]) * abs(term);
    }
    return acc / 2;
}

} // namespace

Rat lattice_gap(const RatFunc& g, const RatFunc& d) {
    if (g.is_zero() || d.is_zero()) throw DomainError("lattice gap of zero");
    if (g.is_constant() || d.is_constant())
        throw DomainError("lattice gap requires nonconstant functions");
    PairValuations pv = shared_valuations(g, d);

    bool independent = false;
    for (std::size_t i = 0; i < pv.weight.size() && !independent; ++i)
        for (std::size_t j = i + 1; j < pv.weight.size(); ++j) {
            long mi = pv.weight[i] * pv.va[i] * pv.weight[j] * pv.vb[j] -
                      pv.weight[j] * pv.va[j] * pv.weight[i] * pv.vb[i];
            if (mi != 0) {
                independent = true;
                break;
            }
        }
    if (!independent)
        throw HypothesisError("mult_independence",
                              "lattice gap of multiplicatively dependent functions");

    // The seminorm is piecewise linear on each edge of the unit square
    // {max(s, t) = 1}; its minimum there is attained at an endpoint or at a
    // breakpoint where one absolute-value term crosses zero.
    Rat best;
    bool have = false;
    auto consider = [&](const Rat& s, const Rat& t) {
        Rat v = seminorm(pv, s, t);
        if (!have || v < best) {
            best = v;
            have = true;
        }
    };
    consider(Rat(1), Rat(0));
    consider(Rat(0), Rat(1));
    consider(Rat(1), Rat(1));
    for (std::size_t i = 0; i < pv.weight.size(); ++i) {
        if (pv.vb[i] != 0) {
            Rat t = rat(pv.va[i], pv.vb[i]);
            if (t >= 0 && t <= 1) consider(Rat(1), t);
        }
        if (pv.va[i] != 0) {
            Rat s = rat(pv.vb[i], pv.va[i]);
            if (s >= 0 && s <= 1) consider(s, Rat(1));
        }
    }
    internal_check(have && best > 0, "lattice gap must be positive");
    return best;
}

const Rat& BoundReport::constant(const std::string& name) const {
    for (const auto& [n, v] : constants)
        if (n == name) return v;
    throw InternalError("unknown bound constant: " + name);
}

namespace {

std::vector<RatFunc> all_functions(const Recurrence& r) {
    std::vector<RatFunc> fs = r.coefficients();
    for (const RatFunc& a : r.roots()) fs.push_back(a);
    return fs;
}

// max over k != l of H(f_k / f_l).
long max_ratio_height(const std::vector<RatFunc>& fs) {
    long best = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (i != j) best = std::max(best, finite_height(fs[i] / fs[j]));
    return best;
}

long min_root_ratio_height(const std::vector<RatFunc>& roots) {
    long best = -1;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (i != j) {
                long h = finite_height(roots[i] / roots[j]);
                if (best < 0 || h < best) best = h;
            }
    return best;
}

} // namespace

BoundReport bound_single(const Recurrence& r, const PlaceSet& S, long genus) {
    if (!r.is_nondegenerate())
        throw HypothesisError("nondegeneracy", "some ratio of two roots is constant");

    BoundReport rep;
    rep.mode = "single";
    rep.enlarged_S = enlarge(S, all_functions(r));
    long d = r.order();
    long s_count = rep.enlarged_S.place_count();

    // If G_n is an S-unit u, dividing by u makes f_i a_i^n / u a vanishing
    // d-term unit sum for the enlarged set, so every coordinate has bounded
    // height; unwinding through the coefficient and root-ratio heights turns
    // that into a bound on n.
    Rat c1 = unit_sum_height_bound(d, s_count, genus);
    Rat c2 = c1 + Rat(max_ratio_height(r.coefficients()));
    long h_min = min_root_ratio_height(r.roots());
    internal_check(h_min >= 1, "nondegenerate root ratios have positive height");
    Rat c3 = c2 / Rat(h_min);

    rep.constants = {{"C1", c1}, {"C2", c2}, {"C3", c3}};
    rep.final_bound = rat_floor_long(c3);
    return rep;
}

BoundReport bound_pair(const Recurrence& r, const PlaceSet& S, long genus) {
    if (!r.is_nondegenerate())
        throw HypothesisError("nondegeneracy", "some ratio of two roots is constant");
    if (!r.roots_nonconstant())
        throw HypothesisError("roots_nonconstant", "every root must be nonconstant");
    if (!r.pairwise_mult_independent())
        throw HypothesisError("mult_independence",
                              "roots must be pairwise multiplicatively independent");

    BoundReport rep;
    rep.mode = "pair";
    rep.enlarged_S = enlarge(S, all_functions(r));
    long d = r.order();
    long s_count = rep.enlarged_S.place_count();

    long h_f = 0, h_a = 0, a_min = -1;
    for (const RatFunc& f : r.coefficients()) h_f = std::max(h_f, finite_height(f));
    for (const RatFunc& a : r.roots()) {
        long h = finite_height(a);
        h_a = std::max(h_a, h);
        if (a_min < 0 || h < a_min) a_min = h;
    }
    long h_min = min_root_ratio_height(r.roots());
    long f_max = max_ratio_height(r.coefficients());
    internal_check(h_min >= 1 && a_min >= 1, "pair mode needs nonconstant roots");

    // The difference b = n - m is bounded first (C4, C5, C9), then n itself
    // for each of the finitely many b through a once-enlarged place set
    // (C10, C11), and independently through the pair gap of the root lattice
    // (C12, C13).
    Rat c6 = unit_sum_height_bound(2 * d, s_count, genus);
    Rat c4 = (c6 + Rat(f_max)) / Rat(h_min);
    Rat c5 = c4;
    Rat c7 = c6 + Rat(2 * h_f) + c4 * Rat(h_a);
    Rat c8 = c7 / Rat(a_min);
    Rat c9 = c6 / Rat(a_min);
    long b_max = std::max(0L, rat_floor_long(c9));

    std::vector<RatFunc> shift_units;
    std::vector<std::vector<RatFunc>> shifted(b_max);
    {
        std::vector<RatFunc> pw(r.roots().size(), RatFunc(Rat(1)));
        for (long b = 1; b <= b_max; ++b) {
            auto& row = shifted[static_cast<std::size_t>(b - 1)];
            for (std::size_t i = 0; i < r.roots().size(); ++i) {
                pw[i] = pw[i] * r.roots()[i];
                RatFunc s = RatFunc(Rat(1)) + pw[i];
                internal_check(!s.is_zero(), "1 + a^b cannot vanish for nonconstant a");
                shift_units.push_back(s);
                row.push_back(r.coefficients()[i] * s);
            }
        }
    }
    rep.S_prime = enlarge(rep.enlarged_S, shift_units);
    long sp_count = rep.S_prime.place_count();

    Rat c10(0);
    Rat base_prime = unit_sum_height_bound(d, sp_count, genus);
    for (long b = 1; b <= b_max; ++b) {
        const auto& row = shifted[static_cast<std::size_t>(b - 1)];
        long fh = max_ratio_height(row);
        Rat value = (base_prime + Rat(fh)) / Rat(h_min);
        rep.per_shift.push_back({b, Rat(fh), value});
        c10 = std::max(c10, value);
    }
    Rat c11 = c10 + c9;
    Rat c12 = c6 + Rat(2 * h_f);

    Rat gap_min;
    bool have_gap = false;
    for (std::size_t i = 0; i < r.roots().size(); ++i)
        for (std::size_t j = 0; j < r.roots().size(); ++j)
            if (i != j) {
                Rat gp = lattice_gap(r.roots()[i], r.roots()[j]);
                rep.gaps.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1, gp);
                if (!have_gap || gp < gap_min) {
                    gap_min = gp;
                    have_gap = true;
                }
            }
    internal_check(have_gap && gap_min > 0, "pair gaps must be positive");
    Rat c13 = c12 / gap_min;

    rep.constants = {{"C4", c4},   {"C5", c5},   {"C6", c6},  {"C7", c7},
                     {"C8", c8},   {"C9", c9},   {"C10", c10}, {"C11", c11},
                     {"C12", c12}, {"C13", c13}};
    Rat final_rat = std::max({c4, c5, c8, c11, c13});
    rep.final_bound = rat_floor_long(final_rat);
    for (const auto& [name, v] : rep.constants)
        internal_check(v >= 0, "bound constants are nonnegative");
    return rep;
}

} // namespace ffsunit
