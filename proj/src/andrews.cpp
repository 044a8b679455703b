#include "hypercert/andrews.hpp"
#include "hypercert/error.hpp"
#include "hypercert/random.hpp"

#include <array>
#include <functional>

namespace hypercert::andrews {

namespace {

const LinForm kY = LinForm::var("y");
const LinForm kZ = LinForm::var("z");

LinForm lf(const Rat &cy, const Rat &cz, const Rat &c0) {
    return LinForm::var("y", cy) + LinForm::var("z", cz) + LinForm(c0);
}

Rat half(long v) {
    Rat r(v);
    r /= 2;
    return r;
}

[[noreturn]] void fail(const std::string &what) {
    throw Error(ErrorKind::ProofReplayFailure, "Andrews replay: " + what);
}

void check_range(unsigned v, unsigned m, const char *name) {
    if (v > 2 * m + 1)
        throw Error(ErrorKind::RangeError, std::string(name) + " = " + std::to_string(v) +
                                               " outside [0, 2m+1] for m = " + std::to_string(m));
}

} // namespace

HypSeries series_x() {
    HypSeries s;
    s.symbols = SymbolTable({"m", "x", "z"});
    s.integer_symbols = {"m"};
    const LinForm m = LinForm::var("m"), x = LinForm::var("x"), z = kZ;
    const LinForm one(1);
    s.upper = {Rat(-2) * m - one, x + Rat(2) * m + LinForm(2), x - z + LinForm(half(1)), x + m + one, z + m + one};
    s.lower = {half(1) * x + LinForm(half(1)), half(1) * x + one, Rat(2) * z + Rat(2) * m + LinForm(2),
               Rat(2) * x - Rat(2) * z + one};
    return s;
}

HypSeries series_y() {
    HypSeries s;
    s.symbols = SymbolTable({"m", "y", "z"});
    s.integer_symbols = {"m"};
    const LinForm m = LinForm::var("m"), y = kY, z = kZ;
    const LinForm one(1);
    s.upper = {Rat(-2) * m - one, y + Rat(2) * z + Rat(2) * m + LinForm(2), y + z + LinForm(half(1)),
               y + Rat(2) * z + m + one, z + m + one};
    s.lower = {half(1) * y + z + LinForm(half(1)), half(1) * y + z + one, Rat(2) * z + Rat(2) * m + LinForm(2),
               Rat(2) * y + Rat(2) * z + one};
    return s;
}

Rat sum_numeric(unsigned m, const Rat &x, const Rat &z) {
    return evaluate_terminating(series_x(), {{"m", Rat(m)}, {"x", x}, {"z", z}});
}

Rat sum_numeric_y(unsigned m, const Rat &y, const Rat &z) {
    return evaluate_terminating(series_y(), {{"m", Rat(m)}, {"y", y}, {"z", z}});
}

// ---------------------------------------------------------------- integer y

namespace {

struct PairChoice {
    const char *name;
    std::function<bool(unsigned y, unsigned m)> applies;
    // indices into the numerator/denominator parameter arrays below
    std::array<std::pair<int, int>, 2> pairs;
};

// P1 numerators {y+2z+2m+2, y+2z+m+1}, denominators {2z+2m+2, 2y+2z+1}.
const std::array<PairChoice, 2> kP1Cases = {{
    {"y <= m", [](unsigned y, unsigned m) { return y <= m; }, {{{0, 0}, {1, 1}}}},
    {"y >= m+1", [](unsigned y, unsigned m) { return y >= m + 1; }, {{{0, 1}, {1, 0}}}},
}};

// P2 numerators {y+z+1/2, z+m+1}, denominators {y/2+z+1/2, y/2+z+1}.
const std::array<PairChoice, 2> kP2Cases = {{
    {"y even", [](unsigned y, unsigned) { return y % 2 == 0; }, {{{0, 0}, {1, 1}}}},
    {"y odd", [](unsigned y, unsigned) { return y % 2 == 1; }, {{{0, 1}, {1, 0}}}},
}};

const PairChoice &select(const std::array<PairChoice, 2> &table, unsigned y, unsigned m) {
    const PairChoice *hit = nullptr;
    for (const auto &row : table)
        if (row.applies(y, m)) {
            if (hit)
                fail(std::string("case split overlaps: ") + hit->name + " / " + row.name);
            hit = &row;
        }
    if (!hit)
        fail("case split is not exhaustive");
    return *hit;
}

KPolyRat pair_product(const std::array<LinForm, 2> &num, const std::array<LinForm, 2> &den,
                      const PairChoice &choice) {
    KPolyRat out(Poly(Rat(1)), Poly(Rat(1)));
    for (const auto &[i, j] : choice.pairs)
        out = out * poch_ratio_poly(num[i], den[j]).closed_form;
    return out;
}

} // namespace

KPolyRat build_P1P2(unsigned y, unsigned m) {
    check_range(y, m, "y");
    const Rat Y(y), M(m);
    const std::array<LinForm, 2> p1_num = {lf(0, 2, Y + 2 * M + 2), lf(0, 2, Y + M + 1)};
    const std::array<LinForm, 2> p1_den = {lf(0, 2, 2 * M + 2), lf(0, 2, 2 * Y + 1)};
    const std::array<LinForm, 2> p2_num = {lf(0, 1, Y + half(1)), lf(0, 1, M + 1)};
    const std::array<LinForm, 2> p2_den = {lf(0, 1, Y / 2 + half(1)), lf(0, 1, Y / 2 + 1)};

    const KPolyRat product = pair_product(p1_num, p1_den, select(kP1Cases, y, m)) *
                             pair_product(p2_num, p2_den, select(kP2Cases, y, m));
    if (product.kappa_degree() != static_cast<int>(2 * m))
        fail("P1 P2 has κ-degree " + std::to_string(product.kappa_degree()) + ", expected 2m");
    return product;
}

std::vector<Certificate> integer_y_vanish(unsigned m) {
    std::vector<Certificate> certs;
    for (unsigned y = 0; y <= 2 * m + 1; ++y) {
        const KPolyRat summand = build_P1P2(y, m);
        if (!alt_binom_sum(summand.num(), 2 * m + 1).is_zero())
            fail("alternating sum is non-zero at y = " + std::to_string(y));
        Certificate cert = prove_vanishing(series_y(), {{"m", Rat(m)}, {"y", Rat(y)}},
                                           ProveOptions{2, 1000 * m + y + 1});
        if (cert.total_degree != 2 * m || cert.n != 2 * m + 1)
            fail("prover degree bookkeeping disagrees at y = " + std::to_string(y));
        certs.push_back(std::move(cert));
    }
    return certs;
}

// ---------------------------------------------------------------- correction factors

Poly build_Q1(unsigned k, unsigned m) {
    check_range(k, m, "k");
    Poly closed;
    if (k <= m)
        closed = pow2(-2 * static_cast<long>(k)) * (rf_sym(lf(1, 1, 1 + k), m - k) * rf_sym(lf(2, 2, 1 + k), k));
    else
        closed = pow2(-2 * static_cast<long>(m) - 1) *
                 (rf_sym(lf(2, 2, 1 + k), 2 * m + 1 - k) * rf_sym(lf(1, 1, Rat(m) + half(3)), k - m - 1));
    if (closed.degree("y") != static_cast<int>(m))
        fail("Q1 has y-degree " + std::to_string(closed.degree("y")));

    const Poly num = rf_sym(lf(1, 1, 1), m) * rf_sym(lf(1, 1, half(1)), k);
    const Poly den = rf_sym(lf(2, 2, 1), k);
    auto q = poly_exact_div(num, den);
    if (!q || *q != closed)
        fail("Q1 closed form fails the exact-division check at k = " + std::to_string(k));
    return closed;
}

bool q2_division_check(const Poly &closed, unsigned k, unsigned m) {
    const Poly lhs = pow2(2 * static_cast<long>(k)) *
                     (rf_sym(lf(1, 2, 1), m + k) * rf_sym(lf(1, 2, 2 * Rat(m) + 2), k));
    auto q = poly_exact_div(lhs, rf_sym(lf(1, 2, 1), 2 * k));
    return q && *q == closed;
}

namespace {

Poly q2_closed(unsigned k, unsigned m, const Rat &z_coeff_in_tail) {
    const Rat pk = pow2(2 * static_cast<long>(k));
    if (k <= m)
        return pk * (rf_sym(lf(1, 2, 1 + 2 * k), m - k) * rf_sym(lf(1, 2, 2 * Rat(m) + 2), k));
    return pk * (rf_sym(lf(1, z_coeff_in_tail, 2 * Rat(m) + 2), k - m - 1) *
                 rf_sym(lf(1, 2, 1 + 2 * k), 2 * m + 1 - k));
}

} // namespace

Poly build_Q2_misprinted(unsigned k, unsigned m) {
    check_range(k, m, "k");
    return q2_closed(k, m, 1);
}

Poly build_Q2(unsigned k, unsigned m) {
    check_range(k, m, "k");
    const Poly closed = q2_closed(k, m, 2);
    if (closed.degree("y") != static_cast<int>(m))
        fail("Q2 has y-degree " + std::to_string(closed.degree("y")));

    // Definition with the half-parameter denominators kept as they are.
    const Poly num = rf_sym(lf(1, 2, 1), m) * rf_sym(lf(1, 2, 2 * Rat(m) + 2), k) *
                     rf_sym(lf(1, 2, Rat(m) + 1), k);
    const Poly den = rf_sym(lf(half(1), 1, half(1)), k) * rf_sym(lf(half(1), 1, 1), k);
    auto q = poly_exact_div(num, den);
    if (!q || *q != closed)
        fail("Q2 closed form fails the definitional exact-division check at k = " + std::to_string(k));

    // Same cancellation after the duplication formula turns the two half
    // parameters into 2^{-2k} (y+2z+1)_{2k}.
    if (pow2(2 * static_cast<long>(k)) * den != rf_sym(lf(1, 2, 1), 2 * k))
        fail("duplication formula mismatch at k = " + std::to_string(k));
    if (!q2_division_check(closed, k, m))
        fail("Q2 closed form fails the duplicated exact-division check at k = " + std::to_string(k));
    return closed;
}

AltForm q1_alternative(unsigned k, unsigned m, unsigned y) {
    return {rf_sym(kZ + LinForm(Rat(m) + 1), y) * rf_sym(kZ + LinForm(Rat(k) + half(1)), y),
            rf_sym(kZ + LinForm(half(k) + half(1)), y) * rf_sym(kZ + LinForm(half(k) + 1), y)};
}

AltForm q2_alternative(unsigned k, unsigned m, unsigned y) {
    return {rf_sym(Rat(2) * kZ + LinForm(Rat(m) + k + 1), y) *
                rf_sym(Rat(2) * kZ + LinForm(2 * Rat(m) + k + 2), y),
            rf_sym(Rat(2) * kZ + LinForm(2 * Rat(k) + 1), y) * rf_sym(Rat(2) * kZ + LinForm(2 * Rat(m) + 2), y)};
}

// ---------------------------------------------------------------- master polynomial

namespace {

Poly master_term(unsigned k, unsigned m, const Poly &q1, const Poly &q2, const BigInt &binom) {
    Rat sign(binom);
    if (k % 2)
        sign = -sign;
    return sign * (rf_sym(kZ + LinForm(Rat(m) + 1), k) *
                   rf_sym(Rat(2) * kZ + LinForm(2 * Rat(m) + 2 + k), 2 * m + 1 - k) * q1 * q2);
}

// Numeric k-th term of the y-form series.
Rat series_term(unsigned k, unsigned m, const Rat &y, const Rat &z) {
    const HypSeries s = series_y();
    const Env env{{"m", Rat(m)}, {"y", y}, {"z", z}};
    Rat t = 1;
    for (const auto &a : s.upper)
        t *= rf_num(a.evaluate(env), k);
    Rat den = rf_num(Rat(1), k);
    for (const auto &b : s.lower)
        den *= rf_num(b.evaluate(env), k);
    return t / den;
}

Rat clearing_factor(unsigned m, const Rat &y, const Rat &z) {
    return rf_num(y + z + 1, m) * rf_num(y + 2 * z + 1, m) * rf_num(2 * z + 2 * m + 2, 2 * m + 1);
}

bool pole_free(unsigned m, const Rat &y, const Rat &z) {
    const HypSeries s = series_y();
    const Env env{{"m", Rat(m)}, {"y", y}, {"z", z}};
    for (const auto &b : s.lower)
        if (rf_num(b.evaluate(env), 2 * m + 1) == 0)
            return false;
    return true;
}

} // namespace

Poly master_poly(unsigned m) {
    const auto binom = binomial_row(2 * m + 1);
    Poly total;
    for (unsigned k = 0; k <= 2 * m + 1; ++k)
        total += master_term(k, m, build_Q1(k, m), build_Q2(k, m), binom[k]);
    return total;
}

ProofResult master_poly_and_prove(unsigned m) {
    nlohmann::json cert;
    cert["version"] = 1;
    const HypSeries s = series_y();
    std::vector<std::string> up, lo;
    for (const auto &f : s.upper)
        up.push_back(f.to_string());
    for (const auto &f : s.lower)
        lo.push_back(f.to_string());
    cert["series"] = {{"upper", up}, {"lower", lo}, {"arg", "1"}};
    cert["env"] = {{"m", std::to_string(m)}};
    cert["n"] = 2 * m + 1;

    // Vanishing at every integer y in [0, 2m+1].
    cert["lemma3"] = nlohmann::json::array();
    for (const auto &c : integer_y_vanish(m))
        cert["lemma3"].push_back(to_json(c));

    // Q1, Q2 have y-degree m, and each master term matches the
    // scaled series term.
    const auto binom = binomial_row(2 * m + 1);
    Sampler rng(0x5F4 + m);
    nlohmann::json degrees = nlohmann::json::array();
    Poly master;
    unsigned term_checks = 0;
    for (unsigned k = 0; k <= 2 * m + 1; ++k) {
        const Poly q1 = build_Q1(k, m);
        const Poly q2 = build_Q2(k, m);
        degrees.push_back({{"k", k}, {"q1", q1.degree("y")}, {"q2", q2.degree("y")}});
        const Poly term = master_term(k, m, q1, q2, binom[k]);
        for (int tries = 0, ok = 0; ok < 2 && tries < 50; ++tries) {
            const Rat y = rng.rational(), z = rng.rational();
            if (!pole_free(m, y, z))
                continue;
            Rat expected = clearing_factor(m, y, z) * series_term(k, m, y, z);
            if (term.evaluate({{"y", y}, {"z", z}}) != expected)
                fail("master term " + std::to_string(k) + " disagrees with the series term");
            ++ok;
            ++term_checks;
        }
        master += term;
    }
    cert["lemma4"] = {{"degrees", degrees}};

    const int ydeg = master.degree("y");
    if (ydeg > static_cast<int>(2 * m))
        fail("master polynomial has y-degree " + std::to_string(ydeg));

    nlohmann::json points = nlohmann::json::array();
    for (unsigned y = 0; y <= 2 * m + 1; ++y) {
        if (!master.substitute("y", Rat(y)).is_zero())
            fail("master polynomial does not vanish at y = " + std::to_string(y));
        points.push_back(y);
    }

    // Degree <= 2m with 2m+2 zeros: interpolation through them is identically
    // zero, checked at a few z slices.
    for (int slice = 0; slice < 3; ++slice) {
        const Rat z = rng.rational();
        std::vector<std::pair<Rat, Rat>> pts;
        for (unsigned y = 0; y <= 2 * m + 1; ++y)
            pts.emplace_back(Rat(y), master.evaluate({{"y", Rat(y)}, {"z", z}}));
        auto interp = poly_interp_univar(pts, 2 * m, "y");
        if (!interp || !interp->is_zero())
            fail("interpolation through the vanishing points is not zero");
    }
    if (!master.is_zero())
        fail("master polynomial is not identically zero");

    cert["master"] = {{"y_degree_bound", 2 * m}, {"vanishing_points", points}, {"zero", true},
                      {"term_checks", term_checks}};

    nlohmann::json spots = nlohmann::json::array();
    while (spots.size() < 3) {
        const Rat y = rng.rational(), z = rng.rational();
        if (!pole_free(m, y, z))
            continue;
        const Rat v = sum_numeric_y(m, y, z);
        if (v != 0)
            fail("numeric spot check is " + to_string(v));
        spots.push_back({{"env", {{"y", to_string(y)}, {"z", to_string(z)}}}, {"value", to_string(v)}});
    }
    cert["spot_checks"] = spots;
    cert["conclusion"] = "vanishes";
    return {std::move(master), std::move(cert)};
}

CheckResult check_composite(const nlohmann::json &j) {
    auto reject = [](RejectReason r, std::string why) { return CheckResult{false, r, std::move(why)}; };
    try {
        if (j.at("version") != 1 || j.at("conclusion") != "vanishes")
            return reject(RejectReason::Malformed, "bad version or conclusion");
        const auto mtext = j.at("env").at("m").get<std::string>();
        auto mr = parse_rat(mtext);
        if (!mr || to_string(*mr) != mtext || !is_integer(*mr) || *mr < 0 || *mr > 64)
            return reject(RejectReason::Malformed, "bad m");
        const unsigned m = static_cast<unsigned>(mr->get_num().get_ui());
        const HypSeries s = series_y();
        std::vector<std::string> up, lo;
        for (const auto &f : s.upper)
            up.push_back(f.to_string());
        for (const auto &f : s.lower)
            lo.push_back(f.to_string());
        if (j.at("series").at("upper") != up || j.at("series").at("lower") != lo ||
            j.at("series").at("arg") != "1")
            return reject(RejectReason::Malformed, "series is not the Andrews y-form");
        if (j.at("n") != 2 * m + 1)
            return reject(RejectReason::BadDegree, "n != 2m+1");

        const auto &l3 = j.at("lemma3");
        if (!l3.is_array() || l3.size() != 2 * m + 2)
            return reject(RejectReason::Malformed, "lemma3 must hold 2m+2 certificates");
        std::vector<char> seen(2 * m + 2, 0);
        for (const auto &c : l3) {
            CheckResult r = check_certificate(c);
            if (!r.accepted)
                return r;
            const Certificate cert = certificate_from_json(c);
            if (cert.upper != up || cert.lower != lo)
                return reject(RejectReason::Malformed, "lemma3 certificate for another series");
            auto it_m = cert.env.find("m");
            auto it_y = cert.env.find("y");
            if (it_m == cert.env.end() || it_m->second != Rat(m) || it_y == cert.env.end())
                return reject(RejectReason::Malformed, "lemma3 certificate env");
            auto yv = to_int64(it_y->second);
            if (!yv || *yv < 0 || *yv > static_cast<std::int64_t>(2 * m + 1) || seen[*yv])
                return reject(RejectReason::Malformed, "lemma3 y values do not cover 0..2m+1");
            seen[*yv] = 1;
        }

        const auto &deg = j.at("lemma4").at("degrees");
        if (!deg.is_array() || deg.size() != 2 * m + 2)
            return reject(RejectReason::BadDegree, "lemma4 degree table size");
        Poly master;
        const auto binom = binomial_row(2 * m + 1);
        for (unsigned k = 0; k <= 2 * m + 1; ++k) {
            const Poly q1 = build_Q1(k, m);
            const Poly q2 = build_Q2(k, m);
            if (deg[k].at("k") != k || deg[k].at("q1") != q1.degree("y") || deg[k].at("q2") != q2.degree("y") ||
                q1.degree("y") != static_cast<int>(m) || q2.degree("y") != static_cast<int>(m))
                return reject(RejectReason::BadDegree, "lemma4 degree entry " + std::to_string(k));
            master += master_term(k, m, q1, q2, binom[k]);
        }

        const auto &mj = j.at("master");
        if (mj.at("y_degree_bound") != 2 * m || master.degree("y") > static_cast<int>(2 * m))
            return reject(RejectReason::BadDegree, "master degree bound");
        nlohmann::json points = nlohmann::json::array();
        for (unsigned y = 0; y <= 2 * m + 1; ++y)
            points.push_back(y);
        if (mj.at("vanishing_points") != points)
            return reject(RejectReason::Malformed, "vanishing points must be 0..2m+1");
        if (mj.at("zero") != true || !master.is_zero())
            return reject(RejectReason::BadSum, "master polynomial is not zero");

        for (const auto &sc : j.at("spot_checks")) {
            const Rat y = *parse_rat(sc.at("env").at("y").get<std::string>());
            const Rat z = *parse_rat(sc.at("env").at("z").get<std::string>());
            auto v = parse_rat(sc.at("value").get<std::string>());
            if (!v || *v != 0 || sum_numeric_y(m, y, z) != *v)
                return reject(RejectReason::BadSum, "spot check mismatch");
        }
    } catch (const Error &e) {
        return reject(RejectReason::BadSum, e.what());
    } catch (const std::exception &e) {
        return reject(RejectReason::Malformed, e.what());
    }
    return {true, RejectReason::None, {}};
}

} // namespace hypercert::andrews
