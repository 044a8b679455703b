#include "hypercert/spec_text.hpp"
#include "hypercert/error.hpp"

#include <cctype>

namespace hypercert {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SeriesSpec spec() {
        SeriesSpec out;
        expect_word("sym");
        skip_ws();
        if (peek() != ';') {
            do {
                const std::size_t at = pos();
                std::string name = identifier();
                if (out.series.symbols.contains(name))
                    throw ParseError(at, "a new symbol name ('" + name + "' is already declared)");
                out.series.symbols.add(name);
                if (accept(':')) {
                    expect_word("int");
                    out.series.integer_symbols.insert(name);
                }
            } while (accept(','));
        }
        expect(';');
        symbols_ = &out.series.symbols;

        expect_word("upper");
        expect(':');
        out.series.upper = linforms();
        expect(';');
        expect_word("lower");
        expect(':');
        out.series.lower = linforms();
        expect(';');
        expect_word("arg");
        expect(':');
        out.series.arg = signed_rational();

        if (accept(';')) {
            skip_ws();
            if (!at_end()) {
                expect_word("bind");
                expect(':');
                skip_ws();
                if (!at_end() && peek() != ';') {
                    do {
                        const std::size_t at = pos();
                        std::string name = identifier();
                        check_declared(name, at);
                        expect('=');
                        Rat v = signed_rational();
                        if (!out.bindings.emplace(name, v).second)
                            throw ParseError(at, "a symbol not bound twice");
                    } while (accept(','));
                }
                accept(';');
            }
        }
        skip_ws();
        if (!at_end())
            throw ParseError(pos(), "end of input");
        return out;
    }

    LinForm single_linform() {
        LinForm f = linform();
        skip_ws();
        if (!at_end())
            throw ParseError(pos(), "end of input");
        return f;
    }

private:
    std::vector<LinForm> linforms() {
        std::vector<LinForm> out;
        skip_ws();
        if (at_end() || peek() == ';')
            return out;
        do
            out.push_back(linform());
        while (accept(','));
        return out;
    }

    LinForm linform() {
        LinForm f;
        skip_ws();
        bool negative = false;
        if (peek() == '+')
            ++pos_;
        else if (accept_minus())
            negative = true;
        f += term() * Rat(negative ? -1 : 1);
        for (;;) {
            skip_ws();
            const std::size_t op_at = pos();
            if (peek() == '+') {
                ++pos_;
                f += term_after(op_at, "+");
            } else if (accept_minus()) {
                f -= term_after(op_at, "-");
            } else {
                break;
            }
        }
        return f;
    }

    LinForm term_after(std::size_t op_at, const char *op) {
        skip_ws();
        if (at_end() || !(std::isdigit(static_cast<unsigned char>(peek())) || is_ident_start(peek())))
            throw ParseError(op_at, std::string("a term after '") + op + "'");
        return term();
    }

    LinForm term() {
        skip_ws();
        if (!at_end() && is_ident_start(peek())) {
            const std::size_t at = pos();
            std::string name = identifier();
            check_declared(name, at);
            return LinForm::var(name);
        }
        Rat c = unsigned_rational();
        if (accept('*')) {
            skip_ws();
            const std::size_t at = pos();
            std::string name = identifier();
            check_declared(name, at);
            return LinForm::var(name, c);
        }
        return LinForm(c);
    }

    Rat signed_rational() {
        skip_ws();
        bool negative = false;
        if (peek() == '+')
            ++pos_;
        else if (accept_minus())
            negative = true;
        Rat r = unsigned_rational();
        return negative ? Rat(-r) : r;
    }

    Rat unsigned_rational() {
        skip_ws();
        BigInt num = digits("a rational number");
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos();
            BigInt den = digits("a positive integer denominator");
            if (den == 0)
                throw ParseError(at, "a positive integer denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    BigInt digits(const char *what) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError(start, what);
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_end() || !is_ident_start(peek()))
            throw ParseError(start, "a symbol name");
        while (!at_end() && (is_ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek()))))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void check_declared(const std::string &name, std::size_t at) {
        if (symbols_ && !symbols_->contains(name))
            throw Error(ErrorKind::UndeclaredSymbol,
                        "undeclared symbol '" + name + "' at offset " + std::to_string(at));
    }

    void expect_word(std::string_view word) {
        skip_ws();
        const std::size_t at = pos();
        if (text_.substr(pos_, word.size()) != word)
            throw ParseError(at, "'" + std::string(word) + "'");
        pos_ += word.size();
        if (!at_end() && (is_ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek()))))
            throw ParseError(at, "'" + std::string(word) + "'");
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError(pos(), std::string("'") + c + "'");
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // ASCII '-' or U+2212 MINUS SIGN.
    bool accept_minus() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const SymbolTable *symbols_ = nullptr;
};

std::string join(const std::vector<LinForm> &forms) {
    std::string s;
    for (std::size_t i = 0; i < forms.size(); ++i)
        s += (i ? ", " : "") + forms[i].to_string();
    return s;
}

} // namespace

SeriesSpec parse_series_spec(std::string_view text) { return Parser(text).spec(); }

LinForm parse_linform(std::string_view text) { return Parser(text).single_linform(); }

std::string print_series_spec(const SeriesSpec &spec) {
    const auto &s = spec.series;
    std::string out = "sym";
    for (std::size_t i = 0; i < s.symbols.size(); ++i) {
        const auto &name = s.symbols.names()[i];
        out += (i ? ", " : " ") + name;
        if (s.integer_symbols.count(name))
            out += ":int";
    }
    out += "; upper: " + join(s.upper) + "; lower: " + join(s.lower) + "; arg: " + to_string(s.arg);
    if (!spec.bindings.empty()) {
        out += "; bind: ";
        bool first = true;
        for (const auto &[k, v] : spec.bindings) {
            out += (first ? "" : ", ") + k + "=" + to_string(v);
            first = false;
        }
    }
    return out;
}

} // namespace hypercert
