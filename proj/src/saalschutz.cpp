#include "hypercert/saalschutz.hpp"
#include "hypercert/error.hpp"
#include "hypercert/lemmas.hpp"

namespace hypercert::saalschutz {

HypSeries series() {
    HypSeries s;
    s.symbols = SymbolTable({"m", "a", "b", "c"});
    s.integer_symbols = {"m"};
    const LinForm m = LinForm::var("m"), a = LinForm::var("a"), b = LinForm::var("b"),
                  c = LinForm::var("c");
    s.upper = {-m, a, b};
    s.lower = {c, LinForm(1) - m + a + b - c};
    s.arg = 1;
    return s;
}

Rat rhs_product(const Rat &a, const Rat &b, const Rat &c, unsigned m) {
    const Rat den = rf_num(c, m) * rf_num(c - a - b, m);
    if (den == 0)
        throw Error(ErrorKind::PoleError, "(c)_m (c-a-b)_m vanishes");
    return rf_num(c - a, m) * rf_num(c - b, m) / den;
}

Rat lhs_value(const Rat &a, const Rat &b, const Rat &c, unsigned m) {
    return evaluate_terminating(series(), {{"m", Rat(m)}, {"a", a}, {"b", b}, {"c", c}});
}

NumericReport verify_numeric(const Rat &a, const Rat &b, const Rat &c, unsigned m) {
    NumericReport r;
    r.lhs = lhs_value(a, b, c, m);
    r.rhs = rhs_product(a, b, c, m);
    r.equal = r.lhs == r.rhs;
    return r;
}

Poly master_sum_in_c(const Rat &a, const Rat &b, unsigned m) {
    const auto binom = binomial_row(m);
    const LinForm c = LinForm::var("c");
    Poly total;
    for (unsigned k = 0; k <= m; ++k) {
        const Rat coeff = Rat(binom[k]) * rf_num(a, k) * rf_num(b, k);
        total += coeff * (rf_sym(c + LinForm(Rat(k)), m - k) * rf_sym(c - LinForm(a + b), m - k));
    }
    return total;
}

namespace {

[[noreturn]] void fail(const std::string &what) {
    throw Error(ErrorKind::ProofReplayFailure, "Saalschutz replay: " + what);
}

} // namespace

Poly master_poly_in_c(const Rat &a, const Rat &b, unsigned m) {
    if (is_integer(Rat(a - b)))
        throw Error(ErrorKind::PreconditionViolated, "a - b must not be an integer");
    const Poly master = master_sum_in_c(a, b, m);

    if (master.degree("c") != static_cast<int>(2 * m) || master.total_degree() != static_cast<int>(2 * m))
        fail("degree is not 2m");
    if (master.leading_term().second != 1)
        fail("not monic");

    // 2m distinct roots, distinct because a - b is not an integer.
    std::vector<Rat> roots;
    for (unsigned i = 0; i < m; ++i) {
        roots.push_back(a - i);
        roots.push_back(b - i);
    }
    for (const Rat &r : roots)
        if (master.evaluate({{"c", r}}) != 0)
            fail("does not vanish at c = " + to_string(r));

    // Monic of degree 2m with these roots: the difference from prod(c - r) has
    // degree < 2m and 2m zeros, so interpolation through them gives zero.
    Poly monic(Rat(1));
    for (const Rat &r : roots)
        monic *= Poly::var("c") - Poly(r);
    const Poly diff = master - monic;
    if (diff.degree("c") >= static_cast<int>(2 * m) && !diff.is_zero())
        fail("leading terms do not cancel");
    if (m > 0) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (const Rat &r : roots)
            pts.emplace_back(r, diff.evaluate({{"c", r}}));
        auto interp = poly_interp_univar(pts, 2 * m - 1, "c");
        if (!interp || !interp->is_zero())
            fail("difference is not determined to be zero");
    }
    if (!diff.is_zero())
        fail("master polynomial differs from the root product");

    const LinForm c = LinForm::var("c");
    if (master != rf_sym(c - LinForm(a), m) * rf_sym(c - LinForm(b), m))
        fail("master polynomial differs from (c-a)_m (c-b)_m");
    return master;
}

} // namespace hypercert::saalschutz
