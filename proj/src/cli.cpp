#include "hypercert/cli.hpp"
#include "hypercert/andrews.hpp"
#include "hypercert/error.hpp"
#include "hypercert/random.hpp"
#include "hypercert/saalschutz.hpp"
#include "hypercert/spec_text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hypercert::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
    for (char &c : s)
        if (c == '\n' || c == '\r')
            c = ' ';
    return s;
}

Rat rat_arg(const std::string &text, const char *flag) {
    auto r = parse_rat(text);
    if (!r)
        throw UsageError(std::string("--") + flag + " expects a rational p/q, got '" + text + "'");
    return *r;
}

unsigned uint_arg(const std::string &text, const char *flag) {
    auto r = parse_rat(text);
    if (!r || !is_integer(*r) || *r < 0 || !r->get_num().fits_uint_p())
        throw UsageError(std::string("--") + flag + " expects a nonnegative integer, got '" + text + "'");
    return static_cast<unsigned>(r->get_num().get_ui());
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write '" + path + "'");
    f << text;
}

/// "m=2, x=1/3" -> Env
Env parse_bindings(const std::string &text) {
    if (text.empty())
        return {};
    const SeriesSpec wrapped = [&] {
        // Reuse the grammar's bind section; symbols are declared on the fly.
        std::string decl;
        std::istringstream parts(text);
        std::string item;
        while (std::getline(parts, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("--bind expects name=value pairs");
            std::string name = item.substr(0, eq);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            decl += (decl.empty() ? " " : ", ") + name;
        }
        return parse_series_spec("sym" + decl + "; upper: ; lower: ; arg: 1; bind: " + text);
    }();
    return wrapped.bindings;
}

struct SpecInput {
    std::string text;
    std::string file;
    std::string bind;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--spec", text, "series specification text");
        cmd->add_option("--spec-file", file, "file holding the series specification");
        cmd->add_option("--bind", bind, "extra bindings, e.g. \"m=2, x=1/3\"");
    }

    SeriesSpec load() const {
        if (text.empty() == file.empty())
            throw UsageError("give exactly one of --spec or --spec-file");
        SeriesSpec spec = parse_series_spec(text.empty() ? read_file(file) : text);
        for (const auto &[k, v] : parse_bindings(bind)) {
            if (!spec.series.symbols.contains(k))
                throw Error(ErrorKind::UndeclaredSymbol, "undeclared symbol '" + k + "' in --bind");
            spec.bindings[k] = v;
        }
        check_integer_bindings(spec.series, spec.bindings);
        return spec;
    }
};

bool saalschutz_pole_free(const Rat &a, const Rat &b, const Rat &c, unsigned m) {
    auto no_pole = [m](const Rat &v) { return rf_num(v, m) != 0; };
    return no_pole(c) && no_pole(c - a - b) && no_pole(1 - Rat(m) + a + b - c);
}

bool andrews_pole_free(unsigned m, const Rat &x, const Rat &z) {
    const Env env{{"m", Rat(m)}, {"x", x}, {"z", z}};
    for (const auto &b : andrews::series_x().lower)
        if (rf_num(b.evaluate(env), 2 * m + 1) == 0)
            return false;
    return true;
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact hypergeometric series evaluation and vanishing certificates", "hypercert"};
    app.require_subcommand(1);

    SpecInput eval_in, bal_in, prove_in;
    auto *eval = app.add_subcommand("eval", "evaluate a terminating series exactly");
    eval_in.add_to(eval);

    auto *balanced = app.add_subcommand("balanced", "print whether the series is balanced");
    bal_in.add_to(balanced);

    std::string prove_out;
    unsigned prove_spots = 3;
    std::uint64_t prove_seed = 1;
    auto *prove = app.add_subcommand("prove-vanish", "certify that a balanced series vanishes");
    prove_in.add_to(prove);
    prove->add_option("--out", prove_out, "certificate output file (stdout if omitted)");
    prove->add_option("--spot-checks", prove_spots, "numeric spot checks to record");
    prove->add_option("--seed", prove_seed, "seed for spot-check sampling");

    std::string cert_path;
    auto *check = app.add_subcommand("check-cert", "replay a certificate");
    check->add_option("certificate", cert_path, "certificate JSON file")->required();

    std::string sa, sb, sc, sm;
    unsigned s_samples = 0;
    std::uint64_t s_seed = 1;
    bool s_symbolic = false;
    auto *saal = app.add_subcommand("saalschutz", "Pfaff-Saalschutz checks");
    saal->add_option("--a", sa);
    saal->add_option("--b", sb);
    saal->add_option("--c", sc);
    saal->add_option("--m", sm)->required();
    saal->add_option("--samples", s_samples, "randomized suite size");
    saal->add_option("--seed", s_seed, "randomized suite seed");
    saal->add_flag("--symbolic", s_symbolic, "replay the polynomial-in-c argument");

    std::string am, ax, az, a_out;
    unsigned a_samples = 0;
    std::uint64_t a_seed = 1;
    bool a_prove = false;
    auto *andr = app.add_subcommand("andrews", "balanced 5F4 checks");
    andr->add_option("--m", am)->required();
    andr->add_option("--x", ax);
    andr->add_option("--z", az);
    andr->add_flag("--prove", a_prove, "replay the full proof");
    andr->add_option("--out", a_out, "composite certificate output file");
    andr->add_option("--samples", a_samples, "randomized suite size");
    andr->add_option("--seed", a_seed, "randomized suite seed");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: Usage: " << one_line(e.what()) << "\n";
        return kUsage;
    }

    try {
        if (eval->parsed()) {
            const SeriesSpec spec = eval_in.load();
            out << to_string(evaluate_terminating(spec.series, spec.bindings)) << "\n";
            return kOk;
        }
        if (balanced->parsed()) {
            out << (is_balanced(bal_in.load().series) ? "true" : "false") << "\n";
            return kOk;
        }
        if (prove->parsed()) {
            const SeriesSpec spec = prove_in.load();
            const Certificate cert = prove_vanishing(spec.series, spec.bindings, {prove_spots, prove_seed});
            write_output(prove_out, to_json(cert).dump(2) + "\n", out);
            if (!prove_out.empty())
                out << "vanishes n=" << cert.n << " total_degree=" << cert.total_degree << "\n";
            return kOk;
        }
        if (check->parsed()) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_file(cert_path));
            } catch (const nlohmann::json::exception &) {
                out << "reject Malformed\n";
                return kVerifyFailed;
            }
            const CheckResult r = j.is_object() && j.contains("master") ? andrews::check_composite(j)
                                                                         : check_certificate(j);
            if (r.accepted) {
                out << "accept\n";
                return kOk;
            }
            out << "reject " << to_string(r.reason) << "\n";
            err << "error: " << to_string(r.reason) << ": " << one_line(r.detail) << "\n";
            return kVerifyFailed;
        }
        if (saal->parsed()) {
            const unsigned m = uint_arg(sm, "m");
            if (s_symbolic) {
                if (sa.empty() || sb.empty())
                    throw UsageError("--symbolic needs --a and --b");
                const Poly master = saalschutz::master_poly_in_c(rat_arg(sa, "a"), rat_arg(sb, "b"), m);
                out << "master=" << master.to_string() << "\n";
                out << "monic degree=" << 2 * m << " roots=" << 2 * m << " equals (c-a)_m(c-b)_m\n";
                return kOk;
            }
            if (s_samples > 0) {
                Sampler rng(s_seed);
                unsigned rejected = 0, failed = 0;
                out << "saalschutz m=" << m << " samples=" << s_samples << " seed=" << s_seed << "\n";
                for (unsigned i = 0; i < s_samples;) {
                    const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
                    if (!saalschutz_pole_free(a, b, c, m)) {
                        ++rejected;
                        continue;
                    }
                    const auto rep = saalschutz::verify_numeric(a, b, c, m);
                    failed += !rep.equal;
                    out << "sample " << i << " a=" << to_string(a) << " b=" << to_string(b) << " c=" << to_string(c)
                        << " lhs=" << to_string(rep.lhs) << " rhs=" << to_string(rep.rhs)
                        << (rep.equal ? " equal" : " DIFFER") << "\n";
                    ++i;
                }
                out << "summary passed=" << s_samples - failed << " failed=" << failed << " rejected=" << rejected
                    << "\n";
                return failed ? kVerifyFailed : kOk;
            }
            if (sa.empty() || sb.empty() || sc.empty())
                throw UsageError("saalschutz needs --a --b --c, --samples, or --symbolic");
            const auto rep = saalschutz::verify_numeric(rat_arg(sa, "a"), rat_arg(sb, "b"), rat_arg(sc, "c"), m);
            out << "lhs=" << to_string(rep.lhs) << " rhs=" << to_string(rep.rhs)
                << (rep.equal ? " equal" : " differ") << "\n";
            return rep.equal ? kOk : kVerifyFailed;
        }
        if (andr->parsed()) {
            const unsigned m = uint_arg(am, "m");
            if (a_prove) {
                const auto result = andrews::master_poly_and_prove(m);
                write_output(a_out, result.certificate.dump(2) + "\n", out);
                if (!a_out.empty())
                    out << "andrews m=" << m << " integer_y=" << 2 * m + 2 << " master=0 vanishes\n";
                return kOk;
            }
            if (a_samples > 0) {
                Sampler rng(a_seed);
                unsigned rejected = 0, failed = 0;
                out << "andrews m=" << m << " samples=" << a_samples << " seed=" << a_seed << "\n";
                for (unsigned i = 0; i < a_samples;) {
                    const Rat x = rng.rational(), z = rng.rational();
                    if (!andrews_pole_free(m, x, z)) {
                        ++rejected;
                        continue;
                    }
                    const Rat v = andrews::sum_numeric(m, x, z);
                    failed += v != 0;
                    out << "sample " << i << " x=" << to_string(x) << " z=" << to_string(z)
                        << " value=" << to_string(v) << "\n";
                    ++i;
                }
                out << "summary passed=" << a_samples - failed << " failed=" << failed << " rejected=" << rejected
                    << "\n";
                return failed ? kVerifyFailed : kOk;
            }
            if (ax.empty() || az.empty())
                throw UsageError("andrews needs --x and --z, --prove, or --samples");
            const Rat v = andrews::sum_numeric(m, rat_arg(ax, "x"), rat_arg(az, "z"));
            out << to_string(v) << "\n";
            return v == 0 ? kOk : kVerifyFailed;
        }
    } catch (const UsageError &e) {
        err << "error: Usage: " << one_line(e.what()) << "\n";
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::UndeclaredSymbol:
        case ErrorKind::UnboundSymbol:
        case ErrorKind::PreconditionViolated:
        case ErrorKind::RangeError:
            return kUsage;
        default:
            return kVerifyFailed;
        }
    }
    return kUsage;
}

} // namespace hypercert::cli
