#pragma once

#include "hypercert/series.hpp"

#include <string>
#include <string_view>

namespace hypercert {

struct SeriesSpec {
    HypSeries series;
    Env bindings;

    bool operator==(const SeriesSpec &) const = default;
};

/// Parses
///   sym m:int, x, z; upper: -2*m-1, x+1/2; lower: 1/2*x+1; arg: 1; bind: m=2
/// Throws ParseError (offset, expectation) or UndeclaredSymbol.
SeriesSpec parse_series_spec(std::string_view text);

/// A bare linear form, symbols unrestricted.
LinForm parse_linform(std::string_view text);

/// Canonical text; parse(print(s)) == s.
std::string print_series_spec(const SeriesSpec &spec);

} // namespace hypercert
