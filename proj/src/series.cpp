#include "hypercert/series.hpp"
#include "hypercert/error.hpp"

#include <algorithm>

namespace hypercert {

void HypSeries::validate() const {
    auto check = [&](const LinForm &f) {
        for (const auto &name : f.symbols())
            if (!symbols.contains(name))
                throw Error(ErrorKind::UndeclaredSymbol, "undeclared symbol '" + name + "'");
    };
    std::for_each(upper.begin(), upper.end(), check);
    std::for_each(lower.begin(), lower.end(), check);
    for (const auto &name : integer_symbols)
        if (!symbols.contains(name))
            throw Error(ErrorKind::UndeclaredSymbol, "undeclared symbol '" + name + "'");
}

HypSeries HypSeries::substitute(const Env &env) const {
    HypSeries r = *this;
    for (auto &f : r.upper)
        f = f.substitute(env);
    for (auto &f : r.lower)
        f = f.substitute(env);
    return r;
}

HypSeries HypSeries::substitute(std::string_view name, const LinForm &replacement) const {
    HypSeries r = *this;
    for (auto &f : r.upper)
        f = f.substitute(name, replacement);
    for (auto &f : r.lower)
        f = f.substitute(name, replacement);
    return r;
}

void check_integer_bindings(const HypSeries &s, const Env &env) {
    for (const auto &name : s.integer_symbols) {
        auto it = env.find(name);
        if (it == env.end())
            continue;
        if (!is_integer(it->second) || it->second < 0)
            throw Error(ErrorKind::PreconditionViolated,
                        "integer symbol '" + name + "' bound to " + to_string(it->second));
    }
}

std::vector<Termination> termination_candidates(const HypSeries &s, const Env &env) {
    std::vector<Termination> out;
    for (std::size_t i = 0; i < s.upper.size(); ++i) {
        const LinForm v = s.upper[i].substitute(env);
        if (!v.is_constant())
            continue;
        auto iv = to_int64(v.constant());
        if (iv && *iv <= 0 && *iv > -100'000'000)
            out.push_back({i, static_cast<unsigned>(-*iv)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Termination &a, const Termination &b) { return a.n < b.n; });
    return out;
}

Termination termination_index(const HypSeries &s, const Env &env) {
    auto c = termination_candidates(s, env);
    if (c.empty())
        throw Error(ErrorKind::NoTermination, "no upper parameter is a nonpositive integer");
    return c.front();
}

Rat evaluate_terminating(const HypSeries &s, const Env &env) {
    const unsigned n = termination_index(s, env).n;
    std::vector<Rat> a, b;
    for (const auto &f : s.upper)
        a.push_back(f.evaluate(env));
    for (const auto &f : s.lower)
        b.push_back(f.evaluate(env));
    for (const auto &bj : b) {
        auto iv = to_int64(bj);
        if (iv && *iv <= 0 && -*iv < static_cast<std::int64_t>(n))
            throw Error(ErrorKind::PoleError,
                        "lower parameter " + to_string(bj) + " meets a pole within k <= " + std::to_string(n));
    }
    Rat term = 1;
    Rat sum = 1;
    for (unsigned k = 0; k < n; ++k) {
        Rat num = s.arg;
        Rat den = k + 1;
        for (const auto &ai : a)
            num *= ai + k;
        for (const auto &bj : b)
            den *= bj + k;
        term *= num / den;
        sum += term;
    }
    return sum;
}

bool is_balanced(const HypSeries &s) {
    if (s.arg != 1)
        return false;
    LinForm diff;
    for (const auto &f : s.lower)
        diff += f;
    for (const auto &f : s.upper)
        diff -= f;
    return diff == LinForm(1);
}

} // namespace hypercert
