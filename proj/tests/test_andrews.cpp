#include "hypercert/andrews.hpp"
#include "hypercert/error.hpp"
#include "hypercert/random.hpp"

#include <doctest.h>

using namespace hypercert;
using namespace hypercert::andrews;

namespace {

Rat q(long n, long d) {
    Rat r(n);
    r /= d;
    return r;
}

Poly Y() { return Poly::var("y"); }
Poly Z() { return Poly::var("z"); }
Poly K() { return Poly::var(kKappa); }

// Direct summation of the 5F4 with the parameters written out by hand.
Rat direct_sum(unsigned m, const Rat &x, const Rat &z) {
    const Rat up[] = {Rat(-2) * m - 1, x + 2 * m + 2, x - z + q(1, 2), x + m + 1, z + m + 1};
    const Rat lo[] = {x / 2 + q(1, 2), x / 2 + 1, 2 * z + 2 * m + 2, 2 * x - 2 * z + 1};
    Rat sum = 0, term = 1;
    for (unsigned k = 0; k <= 2 * m + 1; ++k) {
        sum += term;
        Rat num = 1, den = k + 1;
        for (const Rat &a : up)
            num *= a + k;
        for (const Rat &b : lo)
            den *= b + k;
        term *= num / den;
    }
    return sum;
}

// P1(k)P2(k) from the definition at integer y, rational z.
Rat p1p2_numeric(unsigned y, unsigned m, const Rat &z, unsigned k) {
    const Rat Yr(y);
    const Rat num = rf_num(Yr + 2 * z + 2 * m + 2, k) * rf_num(Yr + 2 * z + m + 1, k) *
                    rf_num(Yr + z + q(1, 2), k) * rf_num(z + m + 1, k);
    const Rat den = rf_num(2 * z + 2 * m + 2, k) * rf_num(2 * Yr + 2 * z + 1, k) *
                    rf_num(Yr / 2 + z + q(1, 2), k) * rf_num(Yr / 2 + z + 1, k);
    return num / den;
}

} // namespace

TEST_CASE("sum_numeric examples") {
    CHECK(sum_numeric(0, 1, q(1, 3)) == 0);
    CHECK(sum_numeric(1, q(1, 5), q(1, 7)) == 0);
    CHECK(sum_numeric(2, q(7, 2), q(-1, 4)) == 0);
    CHECK(direct_sum(1, q(1, 5), q(1, 7)) == 0);
    CHECK(direct_sum(2, q(7, 2), q(-1, 4)) == 0);
    // the k = 1 term alone is -1 at m = 0
    CHECK(direct_sum(0, 1, q(1, 3)) == 0);
}

TEST_CASE("build_P1P2") {
    CHECK(build_P1P2(0, 0).equals(KPolyRat(Poly(1), Poly(1))));
    CHECK(build_P1P2(1, 0).equals(KPolyRat(Poly(1), Poly(1))));
    // sympy interpolation of the definition at k = 0, 1, 2
    const KPolyRat expected((K() + Poly(2) * Z() + Poly(4)) * (K() + Z() + Poly(1)),
                            Poly(2) * (Z() + Poly(1)) * (Z() + Poly(2)));
    const KPolyRat p = build_P1P2(1, 1);
    CHECK(p.kappa_degree() == 2);
    CHECK(p.equals(expected));
    CHECK_THROWS_AS(build_P1P2(4, 1), Error);
}

TEST_CASE("build_P1P2 agrees with the definition and has degree 2m") {
    Sampler rng(3);
    for (unsigned m = 0; m <= 8; ++m)
        for (unsigned y = 0; y <= 2 * m + 1; ++y) {
            const KPolyRat p = build_P1P2(y, m);
            CHECK(p.kappa_degree() == static_cast<int>(2 * m));
            if (m > 4)
                continue;
            for (int s = 0; s < 3; ++s) {
                const Rat z = rng.rational();
                const Rat den = p.den().evaluate({{"z", z}});
                if (den == 0)
                    continue;
                for (unsigned k = 0; k <= 2 * m + 1; ++k) {
                    const Rat def = p1p2_numeric(y, m, z, k);
                    CHECK(p.num_at(k).evaluate({{"z", z}}) / den == def);
                }
            }
        }
}

TEST_CASE("integer_y_vanish") {
    CHECK(integer_y_vanish(0).size() == 2);
    const auto certs = integer_y_vanish(1);
    CHECK(certs.size() == 4);
    for (const auto &c : certs) {
        CHECK(c.total_degree == 2);
        CHECK(check_certificate(c).accepted);
    }
    CHECK(integer_y_vanish(3).size() == 8);

    // numeric cross-check at random z
    Sampler rng(10);
    for (unsigned y = 0; y <= 3; ++y) {
        int done = 0;
        while (done < 10) {
            const Rat z = rng.rational();
            const Env env{{"m", 1}, {"y", Rat(y)}, {"z", z}};
            if (!generic_point(series_y(), env, 3))
                continue;
            CHECK(sum_numeric_y(1, y, z) == 0);
            ++done;
        }
    }
}

TEST_CASE("Q1 closed forms") {
    CHECK(build_Q1(0, 1) == Y() + Z() + Poly(1));
    CHECK(build_Q1(1, 0) == Poly(q(1, 2)));
    // (y+z+1)(y+z+1/2)(y+z+3/2) / ((2y+2z+1)(2y+2z+2)) simplified by hand
    CHECK(build_Q1(2, 1) == Poly(q(1, 8)) * (Poly(2) * Y() + Poly(2) * Z() + Poly(3)));
    CHECK_THROWS_AS(build_Q1(4, 1), Error);
}

TEST_CASE("Q2 closed forms") {
    CHECK(build_Q2(0, 1) == Y() + Poly(2) * Z() + Poly(1));
    CHECK(build_Q2(1, 0) == Poly(4));
    CHECK(build_Q2(1, 1) == Poly(4) * (Y() + Poly(2) * Z() + Poly(4)));
    CHECK_THROWS_AS(build_Q2(4, 1), Error);
}

TEST_CASE("Q1/Q2 degrees and division checks for all small (k, m)") {
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned k = 0; k <= 2 * m + 1; ++k) {
            CHECK(build_Q1(k, m).degree("y") == static_cast<int>(m));
            CHECK(build_Q2(k, m).degree("y") == static_cast<int>(m));
        }
}

TEST_CASE("the printed (y+z+2m+2) factor in Q2 fails the division check") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned k = m + 2; k <= 2 * m + 1; ++k)
            CHECK_FALSE(q2_division_check(build_Q2_misprinted(k, m), k, m));
    // where the factor is an empty product both readings coincide
    for (unsigned m = 0; m <= 4; ++m)
        CHECK(q2_division_check(build_Q2_misprinted(m + 1, m), m + 1, m));
}

TEST_CASE("alternative rising-factorial forms in y") {
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned k = 0; k <= 2 * m + 1; ++k) {
            const Poly q1 = build_Q1(k, m);
            const Poly q2 = build_Q2(k, m);
            const Poly c1 = q1.substitute("y", 0);
            const Poly c2 = q2.substitute("y", 0);
            CHECK_FALSE(c1.involves("y"));
            for (unsigned y = 0; y <= 2 * m + 2; ++y) {
                const AltForm a1 = q1_alternative(k, m, y);
                const AltForm a2 = q2_alternative(k, m, y);
                CHECK(q1.substitute("y", Rat(y)) * a1.den == c1 * a1.num);
                CHECK(q2.substitute("y", Rat(y)) * a2.den == c2 * a2.num);
            }
        }
}

TEST_CASE("master polynomial") {
    // m = 0 terms: (2z+2) and -(z+1) * 1/2 * 4
    CHECK(master_poly(0).is_zero());
    CHECK(master_poly(1).is_zero());
    auto r = master_poly_and_prove(1);
    CHECK(r.master.is_zero());
    CHECK(r.certificate.at("master").at("zero") == true);
    CHECK(r.certificate.at("lemma3").size() == 4);
    CHECK(check_composite(r.certificate).accepted);

    auto tampered = r.certificate;
    tampered["lemma4"]["degrees"][1]["q2"] = 3;
    CHECK(check_composite(tampered).reason == RejectReason::BadDegree);
    tampered = r.certificate;
    tampered["lemma3"][2]["total_degree"] = 1;
    CHECK_FALSE(check_composite(tampered).accepted);
    tampered = r.certificate;
    tampered["master"]["vanishing_points"][0] = 7;
    CHECK(check_composite(tampered).reason == RejectReason::Malformed);
}

TEST_CASE("master polynomial m = 4 is identically zero") { CHECK(master_poly_and_prove(4).master.is_zero()); }

TEST_CASE("sum_numeric vanishes at random points") {
    Sampler rng(500);
    int done = 0;
    while (done < 200) {
        const unsigned m = static_cast<unsigned>(rng.uniform(0, 10));
        const Rat x = rng.rational(), z = rng.rational();
        const Env env{{"m", Rat(m)}, {"x", x}, {"z", z}};
        bool pole = false;
        for (const auto &b : series_x().lower)
            pole = pole || rf_num(b.evaluate(env), 2 * m + 1) == 0;
        if (pole)
            continue;
        CHECK(sum_numeric(m, x, z) == 0);
        ++done;
    }
}
