#pragma once

// Rising factorials and the two polynomial facts every proof here rests on:
// an n-th alternating binomial sum kills polynomials of degree < n, and a
// ratio of rising factorials whose parameters differ by a nonnegative
// integer d is a degree-d polynomial in the index.

#include "hypercert/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypercert {

/// (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rat rf_num(const Rat &a, unsigned k);

/// Symbolic rising factorial of a linear form.
Poly rf_sym(const LinForm &a, unsigned k);

/// Rising factorial of a polynomial argument, (p)(p+1)...(p+k-1).
Poly rf_poly(const Poly &a, unsigned k);

/// q with q*d == n, or nullopt when no such polynomial exists.
/// Throws DivisionByZeroPoly when d is zero.
std::optional<Poly> poly_exact_div(const Poly &n, const Poly &d);

/// Unique polynomial in `var` of degree <= degree_bound through the first
/// degree_bound+1 points. nullopt when a later point disagrees
/// (inconsistent data). Throws DuplicateAbscissa, or PreconditionViolated
/// when fewer than degree_bound+1 points are supplied.
std::optional<Poly> poly_interp_univar(const std::vector<std::pair<Rat, Rat>> &points,
                                       unsigned degree_bound,
                                       std::string_view var = kKappa);

/// C(n, k) for 0 <= k <= n, one row of Pascal's triangle.
std::vector<BigInt> binomial_row(unsigned n);

/// sum_{k=0}^{n} (-1)^k C(n,k) p(k), with κ substituted by k. Any other
/// symbols of p survive into the result.
Poly alt_binom_sum(const Poly &p, unsigned n);

struct PochRatio {
    unsigned d = 0;
    /// ((beta+κ)_d) / ((beta)_d)
    KPolyRat closed_form;
};

/// Closed form of (alpha)_κ/(beta)_κ when alpha-beta is a nonnegative integer d.
/// Throws NotIntegerDifference otherwise.
PochRatio poch_ratio_poly(const LinForm &alpha, const LinForm &beta);

/// alpha - beta when that difference is a constant nonnegative integer.
std::optional<unsigned> nonneg_int_difference(const LinForm &alpha, const LinForm &beta);

} // namespace hypercert
