#pragma once

#include "hypercert/rat.hpp"

#include <cstdint>
#include <random>

namespace hypercert {

/// Portable sampler for randomized suites. std::mt19937_64 is bit-exact across
/// standard libraries; the std distributions are not, so ranges are mapped by
/// rejection sampling here.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// Rational with denominator in [1, max_den] and |value| <= max_abs.
    Rat rational(std::int64_t max_den = 50, std::int64_t max_abs = 5);

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace hypercert
