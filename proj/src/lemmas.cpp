#include "hypercert/lemmas.hpp"
#include "hypercert/error.hpp"

#include <set>

namespace hypercert {

Rat rf_num(const Rat &a, unsigned k) {
    Rat r = 1;
    Rat f = a;
    for (unsigned j = 0; j < k; ++j, f += 1) {
        if (f == 0)
            return 0;
        r *= f;
    }
    return r;
}

Poly rf_poly(const Poly &a, unsigned k) {
    std::vector<Poly> factors;
    factors.reserve(k);
    for (unsigned j = 0; j < k; ++j)
        factors.push_back(a + Poly(Rat(j)));
    return product(factors);
}

Poly rf_sym(const LinForm &a, unsigned k) { return rf_poly(a.to_poly(), k); }

std::optional<Poly> poly_exact_div(const Poly &n, const Poly &d) {
    if (d.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
    const auto &[lead_m, lead_c] = d.leading_term();
    Poly q;
    Poly r = n;
    // With a single divisor, exact divisibility forces every leading term of
    // the running remainder to be divisible by lt(d).
    while (!r.is_zero()) {
        const auto &[rm, rc] = r.leading_term();
        if (!lead_m.divides(rm))
            return std::nullopt;
        Poly t = Poly::term(Rat(rc / lead_c), rm / lead_m);
        r -= t * d;
        q += t;
    }
    return q;
}

std::optional<Poly> poly_interp_univar(const std::vector<std::pair<Rat, Rat>> &points,
                                       unsigned degree_bound, std::string_view var) {
    std::set<Rat> seen;
    for (const auto &p : points)
        if (!seen.insert(p.first).second)
            throw Error(ErrorKind::DuplicateAbscissa, "duplicate abscissa " + to_string(p.first));
    const std::size_t used = degree_bound + 1;
    if (points.size() < used)
        throw Error(ErrorKind::PreconditionViolated, "need degree_bound+1 interpolation points");

    // Newton divided differences over the first degree_bound+1 points.
    std::vector<Rat> coef(used);
    for (std::size_t i = 0; i < used; ++i)
        coef[i] = points[i].second;
    for (std::size_t j = 1; j < used; ++j)
        for (std::size_t i = used - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - j].first);

    const Poly x = Poly::var(var);
    Poly result(coef[used - 1]);
    for (std::size_t i = used - 1; i-- > 0;)
        result = result * (x - Poly(points[i].first)) + Poly(coef[i]);

    for (std::size_t i = used; i < points.size(); ++i) {
        Env env;
        env.emplace(std::string(var), points[i].first);
        if (result.evaluate(env) != points[i].second)
            return std::nullopt;
    }
    return result;
}

std::vector<BigInt> binomial_row(unsigned n) {
    std::vector<BigInt> row{1};
    for (unsigned r = 1; r <= n; ++r) {
        std::vector<BigInt> next(r + 1);
        next[0] = next[r] = 1;
        for (unsigned i = 1; i < r; ++i)
            next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return row;
}

Poly alt_binom_sum(const Poly &p, unsigned n) {
    const auto row = binomial_row(n);
    Poly total;
    for (unsigned k = 0; k <= n; ++k) {
        Rat w(row[k]);
        if (k % 2)
            w = -w;
        total += p.substitute(kKappa, Rat(k)) * w;
    }
    return total;
}

std::optional<unsigned> nonneg_int_difference(const LinForm &alpha, const LinForm &beta) {
    const LinForm diff = alpha - beta;
    if (!diff.is_constant())
        return std::nullopt;
    auto v = to_int64(diff.constant());
    if (!v || *v < 0 || *v > 1'000'000)
        return std::nullopt;
    return static_cast<unsigned>(*v);
}

PochRatio poch_ratio_poly(const LinForm &alpha, const LinForm &beta) {
    auto d = nonneg_int_difference(alpha, beta);
    if (!d)
        throw Error(ErrorKind::NotIntegerDifference,
                    "(" + alpha.to_string() + ") - (" + beta.to_string() +
                        ") is not a nonnegative integer");
    Poly den = rf_sym(beta, *d);
    if (den.is_zero())
        throw Error(ErrorKind::PoleError, "(" + beta.to_string() + ")_" + std::to_string(*d) + " vanishes");
    Poly num = rf_poly(beta.to_poly() + Poly::var(kKappa), *d);
    return {*d, KPolyRat(std::move(num), std::move(den))};
}

} // namespace hypercert
