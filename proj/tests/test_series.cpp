#include "hypercert/andrews.hpp"
#include "hypercert/error.hpp"
#include "hypercert/lemmas.hpp"
#include "hypercert/random.hpp"
#include "hypercert/saalschutz.hpp"

#include <doctest.h>

#include <functional>

using namespace hypercert;

namespace {

Rat q(long n, long d) {
    Rat r(n);
    r /= d;
    return r;
}

HypSeries f21(const std::vector<long> &up, const std::vector<long> &lo) {
    HypSeries s;
    for (long v : up)
        s.upper.emplace_back(Rat(v));
    for (long v : lo)
        s.lower.emplace_back(Rat(v));
    return s;
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::RangeError;
}

} // namespace

TEST_CASE("termination_index") {
    auto t = termination_index(andrews::series_x(), {{"m", 2}, {"x", 1}, {"z", 1}});
    CHECK(t.index == 0);
    CHECK(t.n == 5);
    auto s = termination_index(saalschutz::series(), {{"m", 0}, {"a", 1}, {"b", 2}, {"c", 3}});
    CHECK(s.index == 0);
    CHECK(s.n == 0);
    CHECK(kind_of([] { termination_index(f21({1, 2}, {3}), {}); }) == ErrorKind::NoTermination);

    // ties go to the smallest n
    auto tie = termination_index(f21({-4, -1, -2}, {3, 5}), {});
    CHECK(tie.index == 1);
    CHECK(tie.n == 1);
}

TEST_CASE("evaluate_terminating") {
    CHECK(evaluate_terminating(f21({-2, 1}, {1}), {}) == 0);
    CHECK(saalschutz::lhs_value(2, 3, 4, 1) == q(-1, 2));
    CHECK(saalschutz::lhs_value(q(1, 2), q(1, 3), q(1, 5), 0) == 1);

    HypSeries arg2 = f21({-3}, {});
    arg2.arg = 2;
    // (1-2)^3
    CHECK(evaluate_terminating(arg2, {}) == -1);

    CHECK(kind_of([] { evaluate_terminating(f21({-3, 1}, {-1}), {}); }) == ErrorKind::PoleError);
    // pole at (b)_k only for k beyond the truncation: fine
    CHECK_NOTHROW(evaluate_terminating(f21({-1, 1}, {-1}), {}));
    CHECK(kind_of([] { evaluate_terminating(f21({1, 2}, {3}), {}); }) == ErrorKind::NoTermination);
    CHECK(kind_of([] { evaluate_terminating(saalschutz::series(), {{"m", 1}, {"a", 1}}); }) ==
          ErrorKind::UnboundSymbol);
}

TEST_CASE("truncation: terms past n vanish") {
    Sampler rng(21);
    const HypSeries s = saalschutz::series();
    for (int i = 0; i < 30; ++i) {
        const unsigned m = static_cast<unsigned>(rng.uniform(0, 6));
        const Env env{{"m", Rat(m)}, {"a", rng.rational()}, {"b", rng.rational()}, {"c", rng.rational()}};
        for (unsigned k = m + 1; k <= m + 5; ++k)
            CHECK(rf_num(s.upper[0].evaluate(env), k) == 0);
    }
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(saalschutz::series()));
    CHECK(is_balanced(andrews::series_x()));
    CHECK(is_balanced(andrews::series_y()));
    CHECK_FALSE(is_balanced(f21({-2, 1}, {1})));
    HypSeries s = saalschutz::series();
    s.arg = 2;
    CHECK_FALSE(is_balanced(s));
}

TEST_CASE("validate and integer bindings") {
    HypSeries s = saalschutz::series();
    CHECK_NOTHROW(s.validate());
    s.upper.push_back(LinForm::var("w"));
    CHECK(kind_of([&] { s.validate(); }) == ErrorKind::UndeclaredSymbol);
    CHECK(kind_of([] { check_integer_bindings(saalschutz::series(), {{"m", q(1, 2)}}); }) ==
          ErrorKind::PreconditionViolated);
    CHECK(kind_of([] { check_integer_bindings(saalschutz::series(), {{"m", -1}}); }) ==
          ErrorKind::PreconditionViolated);
}

TEST_CASE("x = y + 2z substitution coherence") {
    const HypSeries sub = andrews::series_x().substitute("x", LinForm::var("y") + LinForm::var("z", 2));
    CHECK(sub.upper == andrews::series_y().upper);
    CHECK(sub.lower == andrews::series_y().lower);

    Sampler rng(99);
    int done = 0;
    while (done < 200) {
        const unsigned m = static_cast<unsigned>(rng.uniform(0, 6));
        const Rat y = rng.rational(), z = rng.rational();
        const Rat x = y + 2 * z;
        Rat lhs, rhs;
        try {
            lhs = andrews::sum_numeric(m, x, z);
            rhs = andrews::sum_numeric_y(m, y, z);
        } catch (const Error &e) {
            REQUIRE(e.kind() == ErrorKind::PoleError);
            continue;
        }
        CHECK(lhs == rhs);
        ++done;
    }
}
