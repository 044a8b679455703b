#pragma once

#include "hypercert/series.hpp"

namespace hypercert::saalschutz {

/// 3F2(-m, a, b; c, 1-m+a+b-c; 1) with m bound, a, b, c symbolic.
HypSeries series();

/// (c-a)_m (c-b)_m / ((c)_m (c-a-b)_m). Throws PoleError.
Rat rhs_product(const Rat &a, const Rat &b, const Rat &c, unsigned m);

/// Exact 3F2 left side. Throws PoleError.
Rat lhs_value(const Rat &a, const Rat &b, const Rat &c, unsigned m);

struct NumericReport {
    Rat lhs;
    Rat rhs;
    bool equal = false;
};

NumericReport verify_numeric(const Rat &a, const Rat &b, const Rat &c, unsigned m);

/// sum_k C(m,k) (a)_k (b)_k (c+k)_{m-k} (c-a-b)_{m-k} as a polynomial in c,
/// with every step of the root/leading-coefficient argument asserted
/// (ProofReplayFailure on any miss). Requires a-b non-integer.
Poly master_poly_in_c(const Rat &a, const Rat &b, unsigned m);

/// Same sum without the assertions.
Poly master_sum_in_c(const Rat &a, const Rat &b, unsigned m);

} // namespace hypercert::saalschutz
