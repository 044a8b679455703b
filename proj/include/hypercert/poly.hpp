#pragma once

#include "hypercert/rat.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypercert {

/// Distinguished summation symbol. Non-ASCII, so it never collides with a
/// symbol accepted by the series-spec grammar.
inline constexpr std::string_view kKappa = "κ";

/// Symbol name -> value. Partial environments leave spectator symbols unbound.
using Env = std::map<std::string, Rat, std::less<>>;

/// Ordered list of distinct symbol names.
class SymbolTable {
public:
    SymbolTable() = default;
    explicit SymbolTable(std::vector<std::string> names);

    /// Appends a symbol; throws PreconditionViolated on duplicates.
    void add(std::string name);
    bool contains(std::string_view name) const;
    const std::vector<std::string> &names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    bool operator==(const SymbolTable &) const = default;

private:
    std::vector<std::string> names_;
};

/// Power product, stored as (name, exponent) pairs sorted by name with every
/// exponent positive. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    static Monomial var(std::string_view name, unsigned exponent = 1);

    const std::vector<Factor> &factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned degree(std::string_view name) const;
    unsigned total_degree() const;

    /// True iff *this divides other.
    bool divides(const Monomial &other) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial &a, const Monomial &b);

    /// Lexicographic term order; the alphabetically first symbol is most significant.
    friend bool operator<(const Monomial &a, const Monomial &b);
    bool operator==(const Monomial &) const = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

class LinForm;

/// Sparse multivariate polynomial over Rat. Zero coefficients are never stored,
/// so equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat>;

    Poly() = default;
    Poly(const Rat &constant); // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(Rat(constant)) {} // NOLINT(google-explicit-constructor)
    static Poly var(std::string_view name);
    static Poly term(const Rat &coeff, Monomial monomial);

    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Degree in one symbol; -1 for the zero polynomial.
    int degree(std::string_view name) const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    std::set<std::string> symbols() const;
    bool involves(std::string_view name) const;

    /// Leading term under the lexicographic order. Requires non-zero.
    const std::pair<const Monomial, Rat> &leading_term() const;
    /// Coefficient of `name^exponent`, as a polynomial in the remaining symbols.
    Poly coefficient(std::string_view name, unsigned exponent) const;
    std::optional<Rat> constant_value() const;

    Poly substitute(std::string_view name, const Rat &value) const;
    /// Binds every symbol present in env; unbound symbols survive.
    Poly substitute(const Env &env) const;
    /// Requires env to bind every symbol; throws UnboundSymbol otherwise.
    Rat evaluate(const Env &env) const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly &operator*=(const Rat &scalar);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly product(const std::vector<Poly> &factors);
    friend Poly operator*(Poly a, const Rat &s) { return a *= s; }
    friend Poly operator*(const Rat &s, Poly a) { return a *= s; }
    Poly operator-() const;

    bool operator==(const Poly &) const = default;

    Poly pow(unsigned exponent) const;

    /// Human-readable form, highest terms first, e.g. "y^2 + 3*y + 2".
    std::string to_string() const;

private:
    void add_term(const Monomial &m, const Rat &c);

    TermMap terms_;
};

/// Product of all factors; the empty product is 1.
Poly product(const std::vector<Poly> &factors);

/// Rational affine form  constant + sum coeff_i * symbol_i.
class LinForm {
public:
    LinForm() = default;
    LinForm(const Rat &constant) : constant_(constant) {} // NOLINT(google-explicit-constructor)
    LinForm(long constant) : constant_(constant) {}      // NOLINT(google-explicit-constructor)
    static LinForm var(std::string_view name, const Rat &coeff = 1);

    const Rat &constant() const noexcept { return constant_; }
    const std::map<std::string, Rat, std::less<>> &coefficients() const noexcept { return coeffs_; }
    Rat coefficient(std::string_view name) const;
    bool is_constant() const noexcept { return coeffs_.empty(); }
    std::set<std::string> symbols() const;

    LinForm &operator+=(const LinForm &other);
    LinForm &operator-=(const LinForm &other);
    LinForm &operator*=(const Rat &scalar);
    friend LinForm operator+(LinForm a, const LinForm &b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm &b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rat &s) { return a *= s; }
    friend LinForm operator*(const Rat &s, LinForm a) { return a *= s; }
    LinForm operator-() const { return *this * Rat(-1); }
    bool operator==(const LinForm &) const = default;

    /// Binds the symbols present in env.
    LinForm substitute(const Env &env) const;
    /// Replaces one symbol by another linear form.
    LinForm substitute(std::string_view name, const LinForm &replacement) const;
    /// Requires a full environment.
    Rat evaluate(const Env &env) const;

    Poly to_poly() const;

    /// Canonical text accepted by the series-spec grammar: symbol terms in
    /// name order, then the constant, e.g. "1/2*x+z-1/2".
    std::string to_string() const;

private:
    void normalize();

    Rat constant_;
    std::map<std::string, Rat, std::less<>> coeffs_;
};

/// num / den with den free of the summation symbol. Not reduced; equality is
/// by cross-multiplication.
class KPolyRat {
public:
    KPolyRat() : num_(0), den_(1) {}
    KPolyRat(Poly num, Poly den);

    const Poly &num() const noexcept { return num_; }
    const Poly &den() const noexcept { return den_; }
    int kappa_degree() const { return num_.degree(kKappa); }

    friend KPolyRat operator*(const KPolyRat &a, const KPolyRat &b);
    bool equals(const KPolyRat &other) const;

    /// Value at κ = k as (numerator polynomial, denominator polynomial).
    Poly num_at(long k) const { return num_.substitute(kKappa, Rat(k)); }

private:
    Poly num_;
    Poly den_;
};

} // namespace hypercert
