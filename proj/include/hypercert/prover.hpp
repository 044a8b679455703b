#pragma once

#include "hypercert/lemmas.hpp"
#include "hypercert/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypercert {

struct PairEntry {
    std::size_t upper = 0;
    std::size_t lower = 0;
    unsigned d = 0;

    bool operator==(const PairEntry &) const = default;
};

/// Perfect matching of uppers to lowers, upper - lower a nonnegative integer d
/// on every edge. Indices are positions in the lists handed to find_pairing.
using Pairing = std::vector<PairEntry>;

/// Augmenting-path bipartite matching; nullopt when no perfect matching
/// exists (including unequal list lengths).
std::optional<Pairing> find_pairing(const std::vector<LinForm> &uppers,
                                    const std::vector<LinForm> &lowers);

struct SpotCheck {
    Env env;
    Rat value;
};

struct Certificate {
    int version = 1;
    std::vector<std::string> upper;
    std::vector<std::string> lower;
    std::string arg = "1";
    Env env;
    unsigned n = 0;
    /// Indices refer to the original upper and lower lists.
    Pairing pairing;
    unsigned total_degree = 0;
    std::vector<SpotCheck> spot_checks;
    std::string conclusion = "vanishes";
};

nlohmann::json to_json(const Certificate &cert);
/// Throws nlohmann::json exceptions on shape errors.
Certificate certificate_from_json(const nlohmann::json &j);

/// True when env is a full environment at which the series terminates exactly
/// at order n and no lower parameter meets a pole before it.
bool generic_point(const HypSeries &s, const Env &env, unsigned n);

struct ProveOptions {
    unsigned spot_checks = 3;
    std::uint64_t seed = 1;
};

/// Certifies that a balanced terminating series vanishes under a partial
/// environment. Unbound symbols are spectators; "vanishes" then means the
/// zero polynomial in them.
Certificate prove_vanishing(const HypSeries &s, const Env &env, const ProveOptions &opts = {});

enum class RejectReason { None, BadPairing, BadDegree, BadSum, Malformed };
std::string_view to_string(RejectReason reason);

struct CheckResult {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    std::string detail;
};

/// Replays a certificate from its stored data alone.
CheckResult check_certificate(const Certificate &cert);
/// Parses then replays; shape errors reject as Malformed.
CheckResult check_certificate(const nlohmann::json &j);

} // namespace hypercert
