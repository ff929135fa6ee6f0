#include "ffsunit/solver.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "ffsunit/errors.hpp"

namespace ffsunit {

namespace {

// G_0 .. G_N by incremental powering.
std::vector<RatFunc> term_table(const Recurrence& r, long up_to) {
    std::vector<RatFunc> terms;
    if (up_to < 0) return terms;
    terms.reserve(static_cast<std::size_t>(up_to) + 1);
    std::vector<RatFunc> pw(r.roots().size(), RatFunc(Rat(1)));
    for (long n = 0; n <= up_to; ++n) {
        RatFunc g;
        for (std::size_t i = 0; i < pw.size(); ++i) g += r.coefficients()[i] * pw[i];
        terms.push_back(std::move(g));
        if (n < up_to)
            for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = pw[i] * r.roots()[i];
    }
    return terms;
}

Witness certify(const RatFunc& value, const PlaceSet& T) {
    auto [div, basis] = divisor(value, T.finite());
    auto h = height(value);
    internal_check(h && height_from_divisor(div) == *h,
                   "height from divisor disagrees with height from degrees");
    return Witness{value, std::move(div), std::move(basis)};
}

// Run fn(n) for n in [lo, hi] split across contiguous chunks, one thread per
// chunk, collecting each chunk's hits separately; concatenation in chunk
// order makes the result independent of the thread count.
template <typename Hit, typename Fn>
std::vector<Hit> parallel_collect(long lo, long hi, int threads, Fn fn) {
    std::vector<Hit> all;
    if (hi < lo) return all;
    long len = hi - lo + 1;
    int k = static_cast<int>(std::max<long>(1, std::min<long>(threads, len)));
    std::vector<std::vector<Hit>> chunk_hits(static_cast<std::size_t>(k));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(k));

    auto worker = [&](int c) {
        long from = lo + len * c / k;
        long to = lo + len * (c + 1) / k - 1;
        try {
            for (long n = from; n <= to; ++n) fn(n, chunk_hits[static_cast<std::size_t>(c)]);
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    };

    if (k == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int c = 0; c < k; ++c) pool.emplace_back(worker, c);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& hits : chunk_hits)
        for (auto& h : hits) all.push_back(std::move(h));
    return all;
}

} // namespace

SolveSingleReport solve_single(const Recurrence& r, const PlaceSet& S, int threads,
                               long genus) {
    SolveSingleReport rep;
    rep.bound = bound_single(r, S, genus);
    const PlaceSet& T = rep.bound.enlarged_S;
    std::vector<RatFunc> terms = term_table(r, rep.bound.final_bound);

    std::vector<long> hits = parallel_collect<long>(
        0, rep.bound.final_bound, threads, [&](long n, std::vector<long>& out) {
            const RatFunc& g = terms[static_cast<std::size_t>(n)];
            if (!g.is_zero() && is_s_unit(g, T)) out.push_back(n);
        });

    for (long n : hits) {
        const RatFunc& g = terms[static_cast<std::size_t>(n)];
        rep.enlarged.push_back({n, certify(g, T)});
        if (is_s_unit(g, S)) rep.user.push_back(rep.enlarged.back());
    }
    return rep;
}

SolvePairReport solve_pair(const Recurrence& r, const PlaceSet& S, int threads,
                           long genus) {
    SolvePairReport rep;
    rep.bound = bound_pair(r, S, genus);
    const PlaceSet& T = rep.bound.enlarged_S;
    std::vector<RatFunc> terms = term_table(r, rep.bound.final_bound);

    using NM = std::pair<long, long>;
    std::vector<NM> hits = parallel_collect<NM>(
        1, rep.bound.final_bound, threads, [&](long n, std::vector<NM>& out) {
            for (long m = 0; m < n; ++m) {
                RatFunc v = terms[static_cast<std::size_t>(n)] + terms[static_cast<std::size_t>(m)];
                if (!v.is_zero() && is_s_unit(v, T)) out.emplace_back(n, m);
            }
        });

    for (const auto& [n, m] : hits) {
        RatFunc v = terms[static_cast<std::size_t>(n)] + terms[static_cast<std::size_t>(m)];
        rep.enlarged.push_back({n, m, certify(v, T)});
        if (is_s_unit(v, S)) rep.user.push_back(rep.enlarged.back());
    }
    return rep;
}

VerifyReport verify_sum(const Recurrence& r, const PlaceSet& S,
                        const std::vector<long>& indices) {
    if (indices.empty())
        throw HypothesisError("indices_decreasing", "at least one index is required");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0)
            throw HypothesisError("indices_decreasing", "indices must be nonnegative");
        if (i + 1 < indices.size() && indices[i] <= indices[i + 1])
            throw HypothesisError("indices_decreasing",
                                  "indices must be strictly decreasing");
    }
    std::vector<RatFunc> fs = r.coefficients();
    for (const RatFunc& a : r.roots()) fs.push_back(a);
    PlaceSet T = enlarge(S, fs);

    VerifyReport rep;
    rep.indices = indices;
    rep.value = r.sum_terms(indices);
    if (rep.value.is_zero()) return rep;
    rep.is_unit = is_s_unit(rep.value, T);
    rep.is_unit_user = is_s_unit(rep.value, S);
    rep.witness = certify(rep.value, T);
    return rep;
}

WindowReport window_scan(const Recurrence& r, const PlaceSet& S, bool pair_mode,
                         long lo, long hi, int threads) {
    if (lo < 0 || hi < lo) throw DomainError("window must satisfy 0 <= lo <= hi");
    std::vector<RatFunc> fs = r.coefficients();
    for (const RatFunc& a : r.roots()) fs.push_back(a);
    PlaceSet T = enlarge(S, fs);
    std::vector<RatFunc> terms = term_table(r, hi);

    WindowReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.hits = parallel_collect<WindowHit>(
        lo, hi, threads, [&](long n, std::vector<WindowHit>& out) {
            const RatFunc& g = terms[static_cast<std::size_t>(n)];
            if (!pair_mode) {
                if (!g.is_zero() && is_s_unit(g, T)) out.push_back({n, -1});
                return;
            }
            for (long m = 0; m < n; ++m) {
                RatFunc v = g + terms[static_cast<std::size_t>(m)];
                if (!v.is_zero() && is_s_unit(v, T)) out.push_back({n, m});
            }
        });
    return rep;
}

} // namespace ffsunit
