#include "hypercert/random.hpp"

#include <limits>

namespace hypercert {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % range + 1) % range;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v > limit);
    return lo + static_cast<std::int64_t>(v % range);
}

Rat Sampler::rational(std::int64_t max_den, std::int64_t max_abs) {
    const std::int64_t den = uniform(1, max_den);
    const std::int64_t num = uniform(-max_abs * den, max_abs * den);
    Rat r(static_cast<long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
}

} // namespace hypercert
