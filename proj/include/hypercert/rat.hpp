#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hypercert {

/// Exact rational scalar. GMP keeps mpq_class canonical (den > 0, gcd 1)
/// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms, "/1" suppressed.
std::string to_string(const Rat &r);

/// Parses "[-]digits[/digits]"; returns nullopt on malformed text or zero denominator.
std::optional<Rat> parse_rat(std::string_view text);

bool is_integer(const Rat &r);

/// Integer value of r when it is an integer that fits in int64.
std::optional<std::int64_t> to_int64(const Rat &r);

/// 2^e for any signed e.
Rat pow2(long e);

} // namespace hypercert
