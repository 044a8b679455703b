#include "hypercert/prover.hpp"
#include "hypercert/error.hpp"
#include "hypercert/random.hpp"
#include "hypercert/spec_text.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace hypercert {

// ---------------------------------------------------------------- matching

std::optional<Pairing> find_pairing(const std::vector<LinForm> &uppers,
                                    const std::vector<LinForm> &lowers) {
    if (uppers.size() != lowers.size())
        return std::nullopt;
    const std::size_t n = uppers.size();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::vector<std::vector<std::pair<std::size_t, unsigned>>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (auto d = nonneg_int_difference(uppers[i], lowers[j]))
                adj[i].emplace_back(j, *d);

    std::vector<std::size_t> match_of_lower(n, kNone);
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
        for (const auto &[l, d] : adj[u]) {
            if (visited[l])
                continue;
            visited[l] = 1;
            if (match_of_lower[l] == kNone || augment(match_of_lower[l])) {
                match_of_lower[l] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        visited.assign(n, 0);
        if (!augment(u))
            return std::nullopt;
    }

    Pairing out(n);
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t u = match_of_lower[l];
        out[u] = {u, l, *nonneg_int_difference(uppers[u], lowers[l])};
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json env_to_json(const Env &env) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[k, v] : env)
        j[k] = to_string(v);
    return j;
}

Rat strict_rat(const nlohmann::json &j) {
    const auto text = j.get<std::string>();
    auto r = parse_rat(text);
    if (!r || to_string(*r) != text)
        throw std::invalid_argument("rational not in lowest-terms p/q form: " + text);
    return *r;
}

Env env_from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw std::invalid_argument("env must be an object");
    Env env;
    for (const auto &[k, v] : j.items())
        env.emplace(k, strict_rat(v));
    return env;
}

unsigned strict_unsigned(const nlohmann::json &j) {
    if (!j.is_number_integer())
        throw std::invalid_argument("expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<int>::max())
        throw std::invalid_argument("integer out of range");
    return static_cast<unsigned>(v);
}

} // namespace

nlohmann::json to_json(const Certificate &cert) {
    nlohmann::json j;
    j["version"] = cert.version;
    j["series"] = {{"upper", cert.upper}, {"lower", cert.lower}, {"arg", cert.arg}};
    j["env"] = env_to_json(cert.env);
    j["n"] = cert.n;
    j["pairing"] = nlohmann::json::array();
    for (const auto &p : cert.pairing)
        j["pairing"].push_back({{"upper", p.upper}, {"lower", p.lower}, {"d", p.d}});
    j["total_degree"] = cert.total_degree;
    j["spot_checks"] = nlohmann::json::array();
    for (const auto &s : cert.spot_checks)
        j["spot_checks"].push_back({{"env", env_to_json(s.env)}, {"value", to_string(s.value)}});
    j["conclusion"] = cert.conclusion;
    return j;
}

Certificate certificate_from_json(const nlohmann::json &j) {
    Certificate c;
    if (!j.at("version").is_number_integer())
        throw std::invalid_argument("version must be an integer");
    c.version = j.at("version").get<int>();
    const auto &series = j.at("series");
    c.upper = series.at("upper").get<std::vector<std::string>>();
    c.lower = series.at("lower").get<std::vector<std::string>>();
    c.arg = series.at("arg").get<std::string>();
    c.env = env_from_json(j.at("env"));
    c.n = strict_unsigned(j.at("n"));
    for (const auto &p : j.at("pairing"))
        c.pairing.push_back({strict_unsigned(p.at("upper")), strict_unsigned(p.at("lower")),
                             strict_unsigned(p.at("d"))});
    c.total_degree = strict_unsigned(j.at("total_degree"));
    for (const auto &s : j.at("spot_checks"))
        c.spot_checks.push_back({env_from_json(s.at("env")), strict_rat(s.at("value"))});
    c.conclusion = j.at("conclusion").get<std::string>();
    return c;
}

// ---------------------------------------------------------------- prover

namespace {

struct Summand {
    KPolyRat value;
    unsigned total_degree = 0;
};

Summand build_summand(const std::vector<LinForm> &uppers, const std::vector<LinForm> &lowers,
                      const Pairing &pairing) {
    Summand s{KPolyRat(Poly(Rat(1)), Poly(Rat(1)))};
    for (const auto &p : pairing) {
        PochRatio r = poch_ratio_poly(uppers[p.upper], lowers[p.lower]);
        s.value = s.value * r.closed_form;
        s.total_degree += r.d;
    }
    return s;
}

bool lower_pole(const std::vector<LinForm> &lowers, unsigned n) {
    for (const auto &b : lowers) {
        if (!b.is_constant())
            continue;
        auto iv = to_int64(b.constant());
        if (iv && *iv <= 0 && -*iv < static_cast<std::int64_t>(n))
            return true;
    }
    return false;
}

HypSeries series_from_text(const std::vector<std::string> &upper,
                           const std::vector<std::string> &lower, const Rat &arg) {
    HypSeries s;
    s.arg = arg;
    std::set<std::string> names;
    for (const auto &t : upper) {
        s.upper.push_back(parse_linform(t));
        for (const auto &n : s.upper.back().symbols())
            names.insert(n);
    }
    for (const auto &t : lower) {
        s.lower.push_back(parse_linform(t));
        for (const auto &n : s.lower.back().symbols())
            names.insert(n);
    }
    s.symbols = SymbolTable(std::vector<std::string>(names.begin(), names.end()));
    return s;
}

std::set<std::string> parameter_symbols(const HypSeries &s) {
    std::set<std::string> out;
    for (const auto *list : {&s.upper, &s.lower})
        for (const auto &f : *list)
            for (const auto &n : f.symbols())
                out.insert(n);
    return out;
}

} // namespace

bool generic_point(const HypSeries &s, const Env &env, unsigned n) {
    if (termination_index(s, env).n != n)
        return false;
    for (const auto &b : s.lower)
        if (rf_num(b.evaluate(env), n) == 0)
            return false;
    return true;
}

Certificate prove_vanishing(const HypSeries &s, const Env &env, const ProveOptions &opts) {
    if (!is_balanced(s))
        throw Error(ErrorKind::NotBalanced, "series is not balanced at unit argument");
    check_integer_bindings(s, env);
    const HypSeries spec = s.substitute(env);
    const auto candidates = termination_candidates(spec, {});
    if (candidates.empty())
        throw Error(ErrorKind::NoTermination, "no upper parameter is a nonpositive integer under env");

    for (const auto &term : candidates) {
        const unsigned n = term.n;
        std::vector<LinForm> rest;
        std::vector<std::size_t> rest_index;
        for (std::size_t i = 0; i < spec.upper.size(); ++i)
            if (i != term.index) {
                rest.push_back(spec.upper[i]);
                rest_index.push_back(i);
            }
        auto pairing = find_pairing(rest, spec.lower);
        if (!pairing)
            continue;
        if (lower_pole(spec.lower, n))
            throw Error(ErrorKind::PoleError, "a lower parameter meets a pole within the summation range");

        Summand summand = build_summand(rest, spec.lower, *pairing);
        const unsigned D = summand.total_degree;
        if (summand.value.kappa_degree() != static_cast<int>(D))
            throw Error(ErrorKind::ProofReplayFailure, "summand degree differs from the pairing degree");
        if (D >= n)
            throw Error(ErrorKind::DegreeTooHigh, "summand degree " + std::to_string(D) +
                                                      " is not below termination order " + std::to_string(n));
        if (D != n - 1)
            throw Error(ErrorKind::ProofReplayFailure, "balanced series with pairing degree != n-1");
        const Poly sum = alt_binom_sum(summand.value.num(), n);
        if (!sum.is_zero())
            throw Error(ErrorKind::ProofReplayFailure, "alternating sum is " + sum.to_string());

        Certificate cert;
        for (const auto &f : s.upper)
            cert.upper.push_back(f.to_string());
        for (const auto &f : s.lower)
            cert.lower.push_back(f.to_string());
        cert.arg = to_string(s.arg);
        cert.env = env;
        cert.n = n;
        for (const auto &p : *pairing)
            cert.pairing.push_back({rest_index[p.upper], p.lower, p.d});
        cert.total_degree = D;

        const auto spectators = parameter_symbols(spec);
        Sampler rng(opts.seed);
        unsigned attempts = 0;
        while (cert.spot_checks.size() < opts.spot_checks && attempts++ < 100 * (opts.spot_checks + 1)) {
            Env sample;
            for (const auto &name : spectators)
                sample[name] = s.integer_symbols.count(name) ? Rat(rng.uniform(0, 6)) : rng.rational();
            Env full = env;
            full.insert(sample.begin(), sample.end());
            if (!generic_point(s, full, n))
                continue;
            const Rat value = evaluate_terminating(s, full);
            if (value != 0)
                throw Error(ErrorKind::ProofReplayFailure,
                            "spot check evaluates to " + to_string(value));
            cert.spot_checks.push_back({std::move(sample), value});
        }
        return cert;
    }
    throw Error(ErrorKind::NoneExists, "no perfect pairing with nonnegative integer differences");
}

// ---------------------------------------------------------------- checker

std::string_view to_string(RejectReason reason) {
    switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::BadPairing: return "BadPairing";
    case RejectReason::BadDegree: return "BadDegree";
    case RejectReason::BadSum: return "BadSum";
    case RejectReason::Malformed: return "Malformed";
    }
    return "Malformed";
}

namespace {

CheckResult reject(RejectReason r, std::string detail) { return {false, r, std::move(detail)}; }

} // namespace

CheckResult check_certificate(const Certificate &cert) {
    if (cert.version != 1)
        return reject(RejectReason::Malformed, "unsupported version");
    if (cert.conclusion != "vanishes")
        return reject(RejectReason::Malformed, "unknown conclusion '" + cert.conclusion + "'");

    HypSeries series;
    try {
        auto arg = parse_rat(cert.arg);
        if (!arg || to_string(*arg) != cert.arg)
            return reject(RejectReason::Malformed, "bad argument text");
        series = series_from_text(cert.upper, cert.lower, *arg);
    } catch (const Error &e) {
        return reject(RejectReason::Malformed, e.what());
    }
    if (series.arg != 1)
        return reject(RejectReason::BadSum, "argument is not 1");

    const HypSeries spec = series.substitute(cert.env);
    const std::size_t p = spec.upper.size();
    const std::size_t q = spec.lower.size();
    if (p != q + 1 || cert.pairing.size() != q)
        return reject(RejectReason::BadPairing, "pairing does not cover the parameters");

    std::vector<char> upper_used(p, 0), lower_used(q, 0);
    for (const auto &e : cert.pairing) {
        if (e.upper >= p || e.lower >= q || upper_used[e.upper] || lower_used[e.lower])
            return reject(RejectReason::BadPairing, "pairing is not a matching");
        upper_used[e.upper] = lower_used[e.lower] = 1;
        auto d = nonneg_int_difference(spec.upper[e.upper], spec.lower[e.lower]);
        if (!d || *d != e.d)
            return reject(RejectReason::BadPairing,
                          "upper " + std::to_string(e.upper) + " - lower " + std::to_string(e.lower) +
                              " is not " + std::to_string(e.d));
    }
    const std::size_t t =
        static_cast<std::size_t>(std::find(upper_used.begin(), upper_used.end(), 0) - upper_used.begin());

    const LinForm &top = spec.upper[t];
    auto top_value = top.is_constant() ? to_int64(top.constant()) : std::nullopt;
    if (!top_value || *top_value != -static_cast<std::int64_t>(cert.n))
        return reject(RejectReason::BadDegree, "unpaired upper parameter is not -n");
    const unsigned sum_d = std::accumulate(cert.pairing.begin(), cert.pairing.end(), 0u,
                                           [](unsigned acc, const PairEntry &e) { return acc + e.d; });
    if (cert.total_degree != sum_d || cert.n == 0 || cert.total_degree > cert.n - 1)
        return reject(RejectReason::BadDegree, "total degree does not match the pairing or the bound");
    if (lower_pole(spec.lower, cert.n))
        return reject(RejectReason::BadSum, "lower parameter pole inside the summation range");

    std::vector<LinForm> rest;
    std::vector<std::size_t> rest_pos(p, 0);
    for (std::size_t i = 0; i < p; ++i)
        if (i != t) {
            rest_pos[i] = rest.size();
            rest.push_back(spec.upper[i]);
        }
    Pairing local;
    for (const auto &e : cert.pairing)
        local.push_back({rest_pos[e.upper], e.lower, e.d});
    Summand summand;
    try {
        summand = build_summand(rest, spec.lower, local);
    } catch (const Error &e) {
        return reject(RejectReason::BadSum, e.what());
    }
    if (summand.value.kappa_degree() != static_cast<int>(cert.total_degree))
        return reject(RejectReason::BadDegree, "summand degree mismatch");
    if (!alt_binom_sum(summand.value.num(), cert.n).is_zero())
        return reject(RejectReason::BadSum, "alternating binomial sum is not zero");

    for (const auto &sc : cert.spot_checks) {
        Env full = cert.env;
        for (const auto &[k, v] : sc.env)
            full[k] = v;
        try {
            if (!generic_point(series, full, cert.n))
                return reject(RejectReason::BadSum, "spot check at a degenerate point");
            const Rat v = evaluate_terminating(series, full);
            if (v != sc.value || v != 0)
                return reject(RejectReason::BadSum, "spot check value mismatch");
        } catch (const Error &e) {
            return reject(RejectReason::BadSum, std::string("spot check failed: ") + e.what());
        }
    }
    return {true, RejectReason::None, {}};
}

CheckResult check_certificate(const nlohmann::json &j) {
    Certificate cert;
    try {
        cert = certificate_from_json(j);
    } catch (const std::exception &e) {
        return reject(RejectReason::Malformed, e.what());
    }
    return check_certificate(cert);
}

} // namespace hypercert
