#pragma once

#include "hypercert/poly.hpp"

#include <set>
#include <string>
#include <vector>

namespace hypercert {

/// A pFq specification: upper and lower parameter lists at a rational argument.
struct HypSeries {
    std::vector<LinForm> upper;
    std::vector<LinForm> lower;
    Rat arg = 1;
    SymbolTable symbols;
    /// Symbols declared to range over the nonnegative integers.
    std::set<std::string> integer_symbols;

    bool operator==(const HypSeries &) const = default;

    /// Throws UndeclaredSymbol if a parameter uses a symbol missing from the table.
    void validate() const;

    /// Binds symbols in every parameter; bound symbols stay declared.
    HypSeries substitute(const Env &env) const;
    /// Replaces one symbol by a linear form in every parameter.
    HypSeries substitute(std::string_view name, const LinForm &replacement) const;
};

struct Termination {
    std::size_t index = 0;
    unsigned n = 0;
};

/// Upper parameter that is a nonpositive integer -n under env, smallest n on
/// ties. Parameters still involving unbound symbols are skipped. Throws
/// NoTermination.
Termination termination_index(const HypSeries &s, const Env &env);

/// Every upper parameter that terminates under env, ordered by n.
std::vector<Termination> termination_candidates(const HypSeries &s, const Env &env);

/// Exact value of the terminating sum. env must bind every symbol used.
/// Throws NoTermination, PoleError, UnboundSymbol.
Rat evaluate_terminating(const HypSeries &s, const Env &env);

/// True iff sum(lower) - sum(upper) == 1 identically and arg == 1.
bool is_balanced(const HypSeries &s);

/// Checks an Env against the series' integer declarations; throws
/// PreconditionViolated when an integer symbol is bound to a non-integer or
/// negative value.
void check_integer_bindings(const HypSeries &s, const Env &env);

} // namespace hypercert
