#include "hypercert/rat.hpp"
#include "hypercert/error.hpp"

#include <cctype>

namespace hypercert {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::NotIntegerDifference: return "NotIntegerDifference";
    case ErrorKind::NoTermination: return "NoTermination";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NoneExists: return "NoneExists";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ProofReplayFailure: return "ProofReplayFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    }
    return "Unknown";
}

std::string to_string(const Rat &r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rat> parse_rat(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0)
        return std::nullopt;
    Rat r(negative ? BigInt(-n) : n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rat &r) { return r.get_den() == 1; }

std::optional<std::int64_t> to_int64(const Rat &r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        return std::nullopt;
    return r.get_num().get_si();
}

Rat pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return Rat(p);
    Rat r(BigInt(1), p);
    r.canonicalize();
    return r;
}

} // namespace hypercert
