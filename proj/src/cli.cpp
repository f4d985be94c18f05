#include <metaplectic/cli.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <metaplectic/dsl.hpp>
#include <metaplectic/irreducibility.hpp>
#include <metaplectic/jacquet.hpp>
#include <metaplectic/padic_cover.hpp>

namespace metaplectic::cli
{

namespace
{

struct Options {
    std::vector<std::string> unitary;
    std::optional<std::int64_t> prime;
    std::optional<std::int64_t> eta_order;
    std::string format;
    std::string expression;
    std::string left;
    std::string right;
    std::string order = "rtl";
    std::size_t pool_size = 6;
    std::size_t max_len = 4;
    std::string hilbert_a;
    std::string hilbert_b;
};

class InvocationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void add_field_options(CLI::App &sub, Options &opts)
{
    sub.add_option("--unitary", opts.unitary, "Declare a unitary symbol as name:order (order 1, 2 or inf)")
        ->allow_extra_args(false);
    sub.add_option("-p,--prime", opts.prime, "Work over Q_p; fixes the order of eta");
    sub.add_option("--eta-order", opts.eta_order, "Order of eta = (., -1)_F in an abstract field (1 or 2)");
}

void add_format_option(CLI::App &sub, Options &opts)
{
    sub.add_option("--format", opts.format, "Output format: text or json");
}

SymbolTablePtr build_table(const Options &opts)
{
    if (opts.prime && opts.eta_order) {
        throw InvocationError("give either -p or --eta-order, not both");
    }
    std::int64_t eta = 2;
    if (opts.prime) {
        eta = eta_minus1_order(PAdicField(*opts.prime));
    } else if (opts.eta_order) {
        eta = *opts.eta_order;
    }
    UnitarySymbolTable table(eta);
    for (const auto &decl : opts.unitary) {
        const auto g = parse_symbol_declaration(decl);
        table.declare(g.name, g.order);
    }
    return make_symbol_table(std::move(table));
}

Rational parse_rational_arg(const std::string &text)
{
    const auto integer = [&](std::string part) {
        if (!part.empty() && part[0] == '+') {
            part.erase(0, 1);
        }
        const auto digits = part.substr(!part.empty() && part[0] == '-' ? 1 : 0);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(ParseError::Kind::malformed_rational, 0, {"rational"},
                             "'" + text + "' is not a rational number");
        }
        return Integer(part);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(integer(text));
    }
    const auto den = integer(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError(ParseError::Kind::malformed_rational, slash + 1, {"nonzero integer"},
                         "zero denominator in '" + text + "'");
    }
    return Rational(integer(text.substr(0, slash)), den);
}

int run_check(const Options &opts, OutputFormat format, std::ostream &out)
{
    const auto ps = parse_series(opts.expression, build_table(opts));
    const auto verdict = decide(ps);
    if (format == OutputFormat::json) {
        out << to_json(verdict, ps).dump(2) << '\n';
    } else {
        out << render(verdict, ps);
    }
    return verdict.irreducible ? ExitCode::ok : ExitCode::reducible;
}

int run_mu_star(const Options &opts, OutputFormat format, std::ostream &out)
{
    const auto ps = parse_series(opts.expression, build_table(opts));
    FactorOrder order;
    if (opts.order == "rtl") {
        order = FactorOrder::right_to_left;
    } else if (opts.order == "ltr") {
        order = FactorOrder::left_to_right;
    } else if (opts.order == "whole") {
        order = FactorOrder::whole_word;
    } else {
        throw InvocationError("--order must be rtl, ltr or whole");
    }
    const auto expansion = mu_star(ps, order);
    if (format == OutputFormat::json) {
        auto j = to_json(expansion.value);
        j["series"] = to_json(ps);
        out << j.dump(2) << '\n';
    } else {
        out << render(expansion.value);
    }
    return ExitCode::ok;
}

int run_multiplicity(const Options &opts, OutputFormat format, std::ostream &out)
{
    const auto ps = parse_series(opts.expression, build_table(opts));
    const auto left = parse_word(opts.left, ps.table(), ps.genuine());
    const auto right = parse_sp_word(opts.right, ps.table());
    const auto m = jacquet_multiplicity(ps, left, right);
    if (format == OutputFormat::json) {
        out << nlohmann::json{{"series", to_json(ps)},
                              {"left", to_json(left)},
                              {"right", to_json(right)},
                              {"multiplicity", m.convert_to<std::int64_t>()}}
                   .dump(2)
            << '\n';
    } else {
        out << m << '\n';
    }
    return ExitCode::ok;
}

int run_verify_lemma(const Options &opts, OutputFormat format, std::ostream &out)
{
    const auto table = build_table(opts);
    const auto pool = default_character_pool(table, opts.pool_size);
    const auto sweep = verify_lemma_sweep(pool, opts.max_len);
    const bool pass = sweep.failures == 0;
    if (format == OutputFormat::json) {
        auto pool_json = nlohmann::json::array();
        for (const auto &c : pool) {
            pool_json.push_back(to_json(c));
        }
        nlohmann::json j = {{"pass", pass},
                            {"cases", sweep.cases},
                            {"failures", sweep.failures},
                            {"pool", std::move(pool_json)},
                            {"max_len", opts.max_len},
                            {"counterexample", nullptr}};
        if (sweep.first_counterexample) {
            j["counterexample"] = {{"word", to_json(*sweep.first_counterexample)},
                                   {"difference", to_json(sweep.first_counterexample_report->difference)}};
        }
        out << j.dump(2) << '\n';
    } else if (pass) {
        out << "all " << sweep.cases << " cases pass\n";
    } else {
        out << sweep.failures << " of " << sweep.cases << " cases fail\n"
            << "counterexample: " << to_string(*sweep.first_counterexample) << '\n'
            << "M*_~(w) - (chi (x) chi) M*(chi^-1 w):\n"
            << render(sweep.first_counterexample_report->difference);
    }
    return pass ? ExitCode::ok : ExitCode::failure;
}

int run_hilbert(const Options &opts, OutputFormat format, std::ostream &out)
{
    const PAdicField field(*opts.prime);
    const auto a = parse_rational_arg(opts.hilbert_a);
    const auto b = parse_rational_arg(opts.hilbert_b);
    const auto symbol = hilbert(a, b, field);
    if (format == OutputFormat::json) {
        out << nlohmann::json{{"p", field.prime()}, {"a", to_string(a)}, {"b", to_string(b)}, {"symbol", symbol}}.dump(2)
            << '\n';
    } else {
        out << symbol << '\n';
    }
    return ExitCode::ok;
}

int run_eta(const Options &opts, OutputFormat format, std::ostream &out)
{
    const PAdicField field(*opts.prime);
    const auto order = eta_minus1_order(field);
    if (format == OutputFormat::json) {
        out << nlohmann::json{{"p", field.prime()}, {"eta_order", order}}.dump(2) << '\n';
    } else {
        out << order << '\n';
    }
    return ExitCode::ok;
}

int run_canon(const Options &opts, OutputFormat format, std::ostream &out)
{
    const auto ps = canonicalize(parse_series(opts.expression, build_table(opts)));
    if (format == OutputFormat::json) {
        out << to_json(ps).dump(2) << '\n';
    } else {
        out << render(ps) << '\n';
    }
    return ExitCode::ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Irreducibility and Jacquet-module calculus for principal series of metaplectic groups",
                 "metaplectic"};
    app.require_subcommand(1);
    Options opts;

    auto *check = app.add_subcommand("check", "Decide irreducibility of a principal series (exit 0 / 10)");
    add_field_options(*check, opts);
    add_format_option(*check, opts);
    check->add_option("series", opts.expression, "Principal series, e.g. \"nu^{1/2} x u |x omega0\"")->required();

    auto *mustar = app.add_subcommand("mu-star", "Full Jacquet-module expansion mu*");
    add_field_options(*mustar, opts);
    add_format_option(*mustar, opts);
    mustar->add_option("series", opts.expression, "Principal series")->required();
    mustar->add_option("--order", opts.order, "Factor order for the recursion: rtl, ltr or whole");

    auto *mult = app.add_subcommand("multiplicity", "Multiplicity of left (x) right in mu*");
    add_field_options(*mult, opts);
    add_format_option(*mult, opts);
    mult->add_option("series", opts.expression, "Principal series")->required();
    mult->add_option("--left", opts.left, "GL-side word, e.g. \"nu x nu^{1/2}*u\" or 1")->required();
    mult->add_option("--right", opts.right, "Symplectic-side word, e.g. \"u |x omega0\"")->required();

    auto *lemma = app.add_subcommand("verify-lemma", "Check M*_~ = (chi (x) chi) o M* o chi^-1 exhaustively");
    add_field_options(*lemma, opts);
    add_format_option(*lemma, opts);
    lemma->add_option("--pool-size", opts.pool_size, "Number of characters in the pool")->check(CLI::Range(1, 64));
    lemma->add_option("--max-len", opts.max_len, "Maximal word length")->check(CLI::Range(0, 8));

    auto *hilb = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_p");
    hilb->add_option("-p,--prime", opts.prime, "The prime p")->required();
    add_format_option(*hilb, opts);
    hilb->add_option("a", opts.hilbert_a, "Nonzero rational")->required();
    hilb->add_option("b", opts.hilbert_b, "Nonzero rational")->required();

    auto *eta = app.add_subcommand("eta", "Order of eta = (., -1)_p");
    eta->add_option("-p,--prime", opts.prime, "The prime p")->required();
    add_format_option(*eta, opts);

    auto *canon = app.add_subcommand("canon", "Canonical Weyl-orbit representative of a principal series");
    add_field_options(*canon, opts);
    add_format_option(*canon, opts);
    canon->add_option("series", opts.expression, "Principal series")->required();

    std::ostringstream result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (opts.format.empty()) {
            const char *env = std::getenv(format_env_var);
            opts.format = env && *env ? env : "text";
        }
        OutputFormat format;
        try {
            format = parse_output_format(opts.format);
        } catch (const std::invalid_argument &e) {
            throw InvocationError(e.what());
        }

        int code = ExitCode::ok;
        if (check->parsed()) {
            code = run_check(opts, format, result);
        } else if (mustar->parsed()) {
            code = run_mu_star(opts, format, result);
        } else if (mult->parsed()) {
            code = run_multiplicity(opts, format, result);
        } else if (lemma->parsed()) {
            code = run_verify_lemma(opts, format, result);
        } else if (hilb->parsed()) {
            code = run_hilbert(opts, format, result);
        } else if (eta->parsed()) {
            code = run_eta(opts, format, result);
        } else if (canon->parsed()) {
            code = run_canon(opts, format, result);
        }
        out << result.str();
        return code;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return ExitCode::ok;
        }
        app.exit(e, err, err);
        return ExitCode::parse_error;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return ExitCode::parse_error;
    } catch (const InvocationError &e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::semantic_error;
    }
}

} // namespace metaplectic::cli
