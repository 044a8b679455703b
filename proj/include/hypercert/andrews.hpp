#pragma once

#include "hypercert/prover.hpp"

#include <json.hpp>

#include <vector>

namespace hypercert::andrews {

/// The balanced 5F4 in x, z with integer m.
HypSeries series_x();
/// Same series after x = y + 2z.
HypSeries series_y();

/// Value of the 5F4 at (m, x, z). Throws PoleError.
Rat sum_numeric(unsigned m, const Rat &x, const Rat &z);

/// Value of the y-form at (m, y, z).
Rat sum_numeric_y(unsigned m, const Rat &y, const Rat &z);

/// P1(κ) P2(κ) for integer y in [0, 2m+1], with z a spectator, built from the
/// case-dependent pairings of numerator and denominator parameters.
KPolyRat build_P1P2(unsigned y, unsigned m);

/// Vanishing at y = 0..2m+1, one certificate per y.
std::vector<Certificate> integer_y_vanish(unsigned m);

/// Closed forms, polynomials in y over z, each checked against its defining
/// ratio by exact division.
Poly build_Q1(unsigned k, unsigned m);
Poly build_Q2(unsigned k, unsigned m);

/// Q2 with the k >= m+1 factor written as (y+z+2m+2)_{k-m-1}; kept only so
/// tests can show it fails the exact-division check.
Poly build_Q2_misprinted(unsigned k, unsigned m);
/// True iff closed * (y+2z+1)_{2k} == 2^{2k} (y+2z+1)_{m+k} (y+2z+2m+2)_k.
bool q2_division_check(const Poly &closed, unsigned k, unsigned m);

/// C * ratio(y) with y as the rising-factorial index, for integer y. Returns
/// (numerator, denominator) polynomials in z of the ratio part.
struct AltForm {
    Poly num;
    Poly den;
};
AltForm q1_alternative(unsigned k, unsigned m, unsigned y);
AltForm q2_alternative(unsigned k, unsigned m, unsigned y);

/// The y-polynomial obtained by clearing (y+z+1)_m (y+2z+1)_m and the y-free
/// factor (2z+2m+2)_{2m+1}.
Poly master_poly(unsigned m);

struct ProofResult {
    Poly master;
    nlohmann::json certificate;
};

/// Full replay: Lemma-3 vanishing, Q1/Q2 degrees, master assembly, degree
/// bound, vanishing at y = 0..2m+1, structural zero.
ProofResult master_poly_and_prove(unsigned m);

/// Replays a composite certificate produced by master_poly_and_prove.
CheckResult check_composite(const nlohmann::json &j);

} // namespace hypercert::andrews
