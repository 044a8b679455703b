#include "hypercert/andrews.hpp"
#include "hypercert/error.hpp"
#include "hypercert/random.hpp"
#include "hypercert/spec_text.hpp"

#include <doctest.h>

using namespace hypercert;

namespace {

constexpr const char *kAndrews =
    "sym m:int, x, z; upper: -2*m-1, x+2*m+2, x-z+1/2, x+m+1, z+m+1; "
    "lower: 1/2*x+1/2, 1/2*x+1, 2*z+2*m+2, 2*x-2*z+1; arg: 1";

SeriesSpec random_spec(Sampler &rng) {
    static const std::vector<std::string> pool = {"a", "b", "c", "m", "x", "y", "z", "t1", "long_name"};
    SeriesSpec spec;
    std::vector<std::string> names;
    for (const auto &n : pool)
        if (rng.uniform(0, 2) == 0)
            names.push_back(n);
    for (const auto &n : names) {
        spec.series.symbols.add(n);
        if (rng.uniform(0, 3) == 0)
            spec.series.integer_symbols.insert(n);
    }
    auto form = [&] {
        LinForm f(rng.uniform(0, 2) ? rng.rational(9, 20) : Rat(0));
        for (const auto &n : names)
            if (rng.uniform(0, 1))
                f += LinForm::var(n, rng.rational(6, 4));
        return f;
    };
    const auto p = rng.uniform(0, 5), qn = rng.uniform(0, 5);
    for (int i = 0; i < p; ++i)
        spec.series.upper.push_back(form());
    for (int i = 0; i < qn; ++i)
        spec.series.lower.push_back(form());
    spec.series.arg = rng.rational(7, 3);
    for (const auto &n : names)
        if (rng.uniform(0, 2) == 0)
            spec.bindings[n] = rng.rational();
    return spec;
}

} // namespace

TEST_CASE("parse the Andrews series") {
    const SeriesSpec spec = parse_series_spec(kAndrews);
    CHECK(spec.series.upper == andrews::series_x().upper);
    CHECK(spec.series.lower == andrews::series_x().lower);
    CHECK(spec.series.symbols == andrews::series_x().symbols);
    CHECK(spec.series.integer_symbols == std::set<std::string>{"m"});
    CHECK(spec.series.arg == 1);
    CHECK(spec.bindings.empty());
}

TEST_CASE("parse small specs") {
    const SeriesSpec s = parse_series_spec("sym a; upper: a; lower: a; arg: 1");
    CHECK(s.series.upper.size() == 1);
    CHECK(s.series.lower.size() == 1);

    const SeriesSpec b = parse_series_spec("sym m:int,a ; upper: -m , a ; lower: ; arg: -1/2; bind: m=3, a=-2/4");
    CHECK(b.series.lower.empty());
    CHECK(b.series.arg == Rat(-1) / 2);
    CHECK(b.bindings.at("m") == 3);
    CHECK(b.bindings.at("a") == Rat(-1) / 2);

    // U+2212 minus sign
    const SeriesSpec u = parse_series_spec("sym a; upper: \xE2\x88\x92" "a\xE2\x88\x92" "1; lower: ; arg: 1");
    CHECK(u.series.upper[0] == -LinForm::var("a") - LinForm(1));
}

TEST_CASE("parse errors carry offset and expectation") {
    const std::string text = "sym a; upper: a+; lower: a; arg: 1";
    try {
        parse_series_spec(text);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.offset() == text.find('+'));
        CHECK(e.expected().find("term") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_series_spec("sym a; upper: a; lower: a"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("sym a; upper: 1/0; lower: ; arg: 1"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("sym a, a; upper: ; lower: ; arg: 1"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("sym a; upper: a; lower: ; arg: 1; junk"), ParseError);
    try {
        parse_series_spec("sym a; upper: b; lower: ; arg: 1");
        FAIL("expected UndeclaredSymbol");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UndeclaredSymbol);
    }
}

TEST_CASE("print is canonical and round-trips") {
    CHECK(print_series_spec(parse_series_spec(kAndrews)) ==
          "sym m:int, x, z; upper: -2*m-1, 2*m+x+2, x-z+1/2, m+x+1, m+z+1; "
          "lower: 1/2*x+1/2, 1/2*x+1, 2*m+2*z+2, 2*x-2*z+1; arg: 1");
    Sampler rng(2024);
    for (int i = 0; i < 200; ++i) {
        const SeriesSpec spec = random_spec(rng);
        const std::string text = print_series_spec(spec);
        const SeriesSpec back = parse_series_spec(text);
        CHECK(back == spec);
        CHECK(print_series_spec(back) == text);
    }
}

TEST_CASE("parse_linform") {
    CHECK(parse_linform("y+2*z+2*m+2") ==
          LinForm::var("y") + LinForm::var("z", 2) + LinForm::var("m", 2) + LinForm(2));
    CHECK(parse_linform("0") == LinForm());
    CHECK_THROWS_AS(parse_linform("y+"), ParseError);
}
