#include "hypercert/poly.hpp"
#include "hypercert/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hypercert {

// ---------------------------------------------------------------- SymbolTable

SymbolTable::SymbolTable(std::vector<std::string> names) {
    for (auto &n : names)
        add(std::move(n));
}

void SymbolTable::add(std::string name) {
    if (contains(name))
        throw Error(ErrorKind::PreconditionViolated, "duplicate symbol '" + name + "'");
    names_.push_back(std::move(name));
}

bool SymbolTable::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::string_view name, unsigned exponent) {
    Monomial m;
    if (exponent > 0)
        m.factors_.emplace_back(std::string(name), exponent);
    return m;
}

unsigned Monomial::degree(std::string_view name) const {
    for (const auto &[n, e] : factors_)
        if (n == name)
            return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned t = 0;
    for (const auto &f : factors_)
        t += f.second;
    return t;
}

bool Monomial::divides(const Monomial &other) const {
    auto it = other.factors_.begin();
    for (const auto &[n, e] : factors_) {
        while (it != other.factors_.end() && it->first < n)
            ++it;
        if (it == other.factors_.end() || it->first != n || it->second < e)
            return false;
    }
    return true;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            r.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial operator/(const Monomial &a, const Monomial &b) {
    Monomial r;
    auto j = b.factors_.begin();
    for (const auto &[n, e] : a.factors_) {
        unsigned sub = 0;
        if (j != b.factors_.end() && j->first == n)
            sub = (j++)->second;
        if (e > sub)
            r.factors_.emplace_back(n, e - sub);
    }
    return r;
}

bool operator<(const Monomial &a, const Monomial &b) {
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        if (i->first != j->first)
            // the side carrying the alphabetically earlier symbol is larger
            return j->first < i->first;
        if (i->second != j->second)
            return i->second < j->second;
    }
    return i == a.factors_.end() && j != b.factors_.end();
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto &[n, e] : factors_) {
        if (!s.empty())
            s += "*";
        s += n;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat &constant) {
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Poly Poly::var(std::string_view name) { return term(Rat(1), Monomial::var(name)); }

Poly Poly::term(const Rat &coeff, Monomial monomial) {
    Poly p;
    if (coeff != 0)
        p.terms_.emplace(std::move(monomial), coeff);
    return p;
}

void Poly::add_term(const Monomial &m, const Rat &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Poly::degree(std::string_view name) const {
    if (is_zero())
        return -1;
    unsigned d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.degree(name));
    return static_cast<int>(d);
}

int Poly::total_degree() const {
    if (is_zero())
        return -1;
    unsigned d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.total_degree());
    return static_cast<int>(d);
}

std::set<std::string> Poly::symbols() const {
    std::set<std::string> s;
    for (const auto &[m, c] : terms_)
        for (const auto &f : m.factors())
            s.insert(f.first);
    return s;
}

bool Poly::involves(std::string_view name) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto &t) { return t.first.degree(name) > 0; });
}

const std::pair<const Monomial, Rat> &Poly::leading_term() const {
    if (is_zero())
        throw Error(ErrorKind::PreconditionViolated, "leading term of the zero polynomial");
    return *terms_.rbegin();
}

Poly Poly::coefficient(std::string_view name, unsigned exponent) const {
    Poly r;
    const Monomial strip = Monomial::var(name, exponent);
    for (const auto &[m, c] : terms_)
        if (m.degree(name) == exponent)
            r.add_term(m / strip, c);
    return r;
}

std::optional<Rat> Poly::constant_value() const {
    if (is_zero())
        return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one())
        return terms_.begin()->second;
    return std::nullopt;
}

Poly Poly::substitute(std::string_view name, const Rat &value) const {
    Env env;
    env.emplace(std::string(name), value);
    return substitute(env);
}

Poly Poly::substitute(const Env &env) const {
    Poly r;
    for (const auto &[m, c] : terms_) {
        Rat coeff = c;
        Monomial rest;
        for (const auto &[n, e] : m.factors()) {
            if (auto it = env.find(n); it != env.end()) {
                Rat p;
                mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
                mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
                coeff *= p;
            } else {
                rest = rest * Monomial::var(n, e);
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

Rat Poly::evaluate(const Env &env) const {
    Poly r = substitute(env);
    if (auto v = r.constant_value())
        return *v;
    throw Error(ErrorKind::UnboundSymbol, "unbound symbol '" + *r.symbols().begin() + "'");
}

Poly &Poly::operator+=(const Poly &other) {
    for (const auto &[m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &other) {
    for (const auto &[m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

namespace {

BigInt common_denominator(const std::map<Monomial, Rat> &terms) {
    BigInt d = 1;
    for (const auto &t : terms)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.second.get_den_mpz_t());
    return d;
}

std::vector<std::pair<const Monomial *, BigInt>> scaled(const std::map<Monomial, Rat> &terms, const BigInt &d) {
    std::vector<std::pair<const Monomial *, BigInt>> out;
    out.reserve(terms.size());
    for (const auto &[m, c] : terms)
        out.emplace_back(&m, BigInt(c.get_num() * (d / c.get_den())));
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept {
        std::size_t h = 0;
        for (const auto &[n, e] : m.factors())
            h = (h ^ std::hash<std::string>{}(n)) * 0x100000001b3ull + e;
        return h;
    }
};

} // namespace

namespace {

constexpr unsigned kPackBits = 16;
constexpr unsigned kPackSlots = 64 / kPackBits;
constexpr unsigned kPackLimit = (1u << (kPackBits - 1)) - 1;

// Packs exponent vectors over a shared symbol list into one word; keys then
// add under multiplication as long as no exponent reaches kPackLimit.
std::optional<std::vector<std::string>> packable_symbols(const std::vector<Poly> &factors) {
    std::set<std::string> names;
    for (const auto &f : factors)
        names.merge(f.symbols());
    if (names.size() > kPackSlots)
        return std::nullopt;
    std::vector<std::string> out(names.begin(), names.end());
    for (const auto &n : out) {
        long total = 0;
        for (const auto &f : factors)
            total += f.degree(n);
        if (total >= static_cast<long>(kPackLimit))
            return std::nullopt;
    }
    return out;
}

std::uint64_t pack(const Monomial &m, const std::vector<std::string> &names) {
    std::uint64_t key = 0;
    std::size_t slot = 0;
    for (const auto &[n, e] : m.factors()) {
        while (names[slot] != n)
            ++slot;
        key |= static_cast<std::uint64_t>(e) << (kPackBits * slot);
    }
    return key;
}

Monomial unpack(std::uint64_t key, const std::vector<std::string> &names) {
    Monomial m;
    for (std::size_t slot = 0; slot < names.size(); ++slot)
        if (const auto e = static_cast<unsigned>((key >> (kPackBits * slot)) & ((1u << kPackBits) - 1)))
            m = m * Monomial::var(names[slot], e);
    return m;
}

Poly::TermMap from_integral(std::vector<std::pair<Monomial, BigInt>> terms, const BigInt &den) {
    Poly::TermMap r;
    for (auto &[m, c] : terms) {
        Rat q(c, den);
        if (den != 1)
            q.canonicalize();
        r.emplace(std::move(m), std::move(q));
    }
    return r;
}

Poly::TermMap multiply_generic(const Poly::TermMap &a, const Poly::TermMap &b) {
    const BigInt da = common_denominator(a);
    const BigInt db = common_denominator(b);
    const auto ia = scaled(a, da);
    const auto ib = scaled(b, db);
    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    for (const auto &[ma, ca] : ia)
        for (const auto &[mb, cb] : ib)
            mpz_addmul(acc[*ma * *mb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    std::vector<std::pair<Monomial, BigInt>> out;
    for (auto &[m, c] : acc)
        if (c != 0)
            out.emplace_back(m, std::move(c));
    return from_integral(std::move(out), BigInt(da * db));
}

} // namespace

Poly product(const std::vector<Poly> &factors) {
    for (const auto &f : factors)
        if (f.is_zero())
            return {};
    const auto names = packable_symbols(factors);
    if (!names) {
        Poly r(Rat(1));
        for (const auto &f : factors)
            r.terms_ = multiply_generic(r.terms_, f.terms_);
        return r;
    }
    // Integer accumulation avoids a gcd per product; one division at the end.
    BigInt den = 1;
    std::vector<std::pair<std::uint64_t, BigInt>> cur{{0, BigInt(1)}};
    std::unordered_map<std::uint64_t, BigInt> acc;
    for (const auto &f : factors) {
        const BigInt d = common_denominator(f.terms());
        den *= d;
        std::vector<std::pair<std::uint64_t, BigInt>> fb;
        for (const auto &[m, c] : scaled(f.terms(), d))
            fb.emplace_back(pack(*m, *names), c);
        acc.clear();
        for (const auto &[ka, ca] : cur)
            for (const auto &[kb, cb] : fb)
                mpz_addmul(acc[ka + kb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        cur.clear();
        for (auto &[k, c] : acc)
            if (c != 0)
                cur.emplace_back(k, std::move(c));
    }
    std::vector<std::pair<Monomial, BigInt>> out;
    out.reserve(cur.size());
    for (auto &[k, c] : cur)
        out.emplace_back(unpack(k, *names), std::move(c));
    Poly r;
    r.terms_ = from_integral(std::move(out), den);
    return r;
}

Poly operator*(const Poly &a, const Poly &b) { return product({a, b}); }

Poly &Poly::operator*=(const Poly &other) { return *this = *this * other; }

Poly &Poly::operator*=(const Rat &scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_)
        t.second *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto &t : r.terms_)
        t.second = -t.second;
    return r;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Rat mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << hypercert::to_string(mag);
        else if (mag == 1)
            os << m.to_string();
        else
            os << hypercert::to_string(mag) << "*" << m.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------- LinForm

LinForm LinForm::var(std::string_view name, const Rat &coeff) {
    LinForm f;
    if (coeff != 0)
        f.coeffs_.emplace(std::string(name), coeff);
    return f;
}

Rat LinForm::coefficient(std::string_view name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

std::set<std::string> LinForm::symbols() const {
    std::set<std::string> s;
    for (const auto &c : coeffs_)
        s.insert(c.first);
    return s;
}

void LinForm::normalize() {
    std::erase_if(coeffs_, [](const auto &kv) { return kv.second == 0; });
}

LinForm &LinForm::operator+=(const LinForm &other) {
    constant_ += other.constant_;
    for (const auto &[n, c] : other.coeffs_)
        coeffs_[n] += c;
    normalize();
    return *this;
}

LinForm &LinForm::operator-=(const LinForm &other) {
    constant_ -= other.constant_;
    for (const auto &[n, c] : other.coeffs_)
        coeffs_[n] -= c;
    normalize();
    return *this;
}

LinForm &LinForm::operator*=(const Rat &scalar) {
    constant_ *= scalar;
    for (auto &kv : coeffs_)
        kv.second *= scalar;
    normalize();
    return *this;
}

LinForm LinForm::substitute(const Env &env) const {
    LinForm r(constant_);
    for (const auto &[n, c] : coeffs_) {
        if (auto it = env.find(n); it != env.end())
            r.constant_ += c * it->second;
        else
            r.coeffs_.emplace(n, c);
    }
    return r;
}

LinForm LinForm::substitute(std::string_view name, const LinForm &replacement) const {
    auto it = coeffs_.find(name);
    if (it == coeffs_.end())
        return *this;
    LinForm r = *this;
    const Rat c = it->second;
    r.coeffs_.erase(std::string(name));
    r += replacement * c;
    return r;
}

Rat LinForm::evaluate(const Env &env) const {
    LinForm r = substitute(env);
    if (!r.is_constant())
        throw Error(ErrorKind::UnboundSymbol,
                    "unbound symbol '" + r.coeffs_.begin()->first + "'");
    return r.constant_;
}

Poly LinForm::to_poly() const {
    Poly p(constant_);
    for (const auto &[n, c] : coeffs_)
        p += Poly::term(c, Monomial::var(n));
    return p;
}

std::string LinForm::to_string() const {
    std::string s;
    auto emit = [&](const Rat &c, const std::string &body) {
        Rat mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? "-" : "+";
        if (body.empty())
            s += hypercert::to_string(mag);
        else if (mag == 1)
            s += body;
        else
            s += hypercert::to_string(mag) + "*" + body;
    };
    for (const auto &[n, c] : coeffs_)
        emit(c, n);
    if (constant_ != 0 || coeffs_.empty())
        emit(constant_, "");
    return s;
}

// ---------------------------------------------------------------- KPolyRat

KPolyRat::KPolyRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error(ErrorKind::DivisionByZeroPoly, "KPolyRat with zero denominator");
    if (den_.involves(kKappa))
        throw Error(ErrorKind::PreconditionViolated, "KPolyRat denominator involves the summation symbol");
}

KPolyRat operator*(const KPolyRat &a, const KPolyRat &b) {
    return KPolyRat(a.num_ * b.num_, a.den_ * b.den_);
}

bool KPolyRat::equals(const KPolyRat &other) const {
    return num_ * other.den_ == other.num_ * den_;
}

} // namespace hypercert
