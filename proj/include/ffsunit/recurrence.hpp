#pragma once

#include <vector>

#include "ffsunit/ratfunc.hpp"

namespace ffsunit {

// A simple linear recurrence sequence over Q(x), given in split form
//   G_n = f_1 a_1^n + ... + f_d a_d^n
// with nonzero coefficients f_i and distinct nonzero roots a_i.
class Recurrence {
  public:
    // Validates: equal lengths, order d >= 2, all f_i nonzero, all a_i
    // nonzero and pairwise distinct.  Violations raise HypothesisError with a
    // stable machine name ("order", "coefficient_zero", "root_zero",
    // "roots_distinct", "length_mismatch").
    Recurrence(std::vector<RatFunc> coefficients, std::vector<RatFunc> roots);

    int order() const { return static_cast<int>(coefficients_.size()); }
    const std::vector<RatFunc>& coefficients() const { return coefficients_; }
    const std::vector<RatFunc>& roots() const { return roots_; }

    // G_n, n >= 0.
    RatFunc term(long n) const;

    // G_{n_1} + ... + G_{n_k} for the given indices (each >= 0).
    RatFunc sum_terms(const std::vector<long>& indices) const;

    // No ratio a_i / a_j (i != j) is a constant.
    bool is_nondegenerate() const;

    // Every root is nonconstant.
    bool roots_nonconstant() const;

    // Every pair of roots is multiplicatively independent: a_i^p = c * a_j^q
    // with (p, q) != (0, 0) integers and c constant never holds.  Decided
    // exactly from the degree-weighted valuation vectors: the pair is
    // independent iff those two vectors are linearly independent over Q.
    bool pairwise_mult_independent() const;

  private:
    std::vector<RatFunc> coefficients_;
    std::vector<RatFunc> roots_;
};

// Multiplicative independence of two nonzero, nonconstant functions (see
// Recurrence::pairwise_mult_independent).
bool multiplicatively_independent(const RatFunc& a, const RatFunc& b);

} // namespace ffsunit
