#include "siegelp/cli.hpp"

#include "siegelp/checks.hpp"
#include "siegelp/errors.hpp"
#include "siegelp/json_io.hpp"
#include "siegelp/oracle.hpp"
#include "siegelp/sseries.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace siegelp::cli {

namespace {

struct RunConfig {
    long p = 3;
    std::vector<long> primes{3, 5};
    std::string character = "quadratic";
    std::string units;
    std::string exponents;
    std::string matrix;
    int nu = -1;
    std::string basis = "characteristic";
    std::string format = "json";
    std::string suite;
    int max_n = 4;
    int max_exp = 2;
    std::uint64_t seed = 20240531;
    int order = 3;
    double tol = 1e-9;
};

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what)
{
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw ParseError(std::string("empty entry in ") + what);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::logic_error&) {
            throw ParseError(std::string("bad integer '") + item + "' in " + what);
        }
        if (used != item.size())
            throw ParseError(std::string("bad integer '") + item + "' in " + what);
        out.push_back(static_cast<T>(v));
    }
    return out;
}

DiagonalForm input_form(const RunConfig& c, const Prime& p, int& twist)
{
    if (!c.matrix.empty()) {
        if (!c.units.empty() || !c.exponents.empty())
            throw ParseError("give either --matrix or --units/--exponents");
        json j;
        try {
            j = json::parse(c.matrix);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad --matrix: ") + e.what());
        }
        DiagonalForm f = jordan_diagonalize_Zp(matrix_from_json(j), p);
        twist = f.twist;
        return f;
    }
    if (c.units.empty() || c.exponents.empty())
        throw ParseError("--units and --exponents are required (or --matrix)");
    auto u = parse_list<long>(c.units, "--units");
    auto e = parse_list<int>(c.exponents, "--exponents");
    std::vector<Int> ui(u.begin(), u.end());
    twist = 1;
    return make_diagonal(p, ui, e);
}

HalfIntMatrix input_matrix(const RunConfig& c, const DiagonalForm& f)
{
    if (!c.matrix.empty())
        return matrix_from_json(json::parse(c.matrix));
    std::vector<Int> entries;
    auto u = parse_list<long>(c.units, "--units");
    auto e = parse_list<int>(c.exponents, "--exponents");
    for (std::size_t i = 0; i < u.size(); ++i)
        entries.push_back(Int(u[i]) * int_pow(f.p, static_cast<unsigned>(e[i])));
    return HalfIntMatrix::diagonal(entries);
}

int cmd_series(const RunConfig& c, std::ostream& out)
{
    Prime p(c.p);
    const Character psi = parse_character(c.character);
    int twist = 1;
    const DiagonalForm N = input_form(c, p, twist);
    if (c.nu < 0 || c.nu > N.size())
        throw ParseError("--nu must lie in [0, n]");
    SeriesEngine eng(p, psi);
    SeriesValue v = eng.characteristic_value(N, c.nu);
    if (c.basis == "cusp") {
        v.S = eng.cusp(N, c.nu);
        v.F = v.S / v.beta;
    } else if (c.basis != "characteristic") {
        throw ParseError("--basis must be characteristic or cusp");
    }
    if (c.format == "json") {
        json j = series_value_to_json(v, p.value(), eng.field());
        j["basis"] = c.basis;
        j["character"] = to_string(psi);
        j["nu"] = c.nu;
        j["form"] = N.to_string();
        j["twist"] = twist;
        out << j.dump(2) << "\n";
    } else {
        out << "form      " << N.to_string() << "\n"
            << "basis     " << c.basis << "\n"
            << "character " << to_string(psi) << "\n"
            << "nu        " << c.nu << "\n"
            << "w         sqrt(" << eng.field() << ")\n"
            << "S         " << v.S.to_string() << "\n"
            << "beta      " << v.beta.to_string() << "\n"
            << "F         " << v.F.to_string() << "\n";
        const json L = local_data_to_json(v.local);
        for (const auto& [k, val] : L.items())
            out << k << " = " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
    return kPass;
}

int cmd_check(const RunConfig& c, std::ostream& out)
{
    GridConfig g;
    g.max_n = c.max_n;
    g.primes = c.primes;
    g.max_exp = c.max_exp;
    g.seed = c.seed;
    if (c.character == "both" || c.character.empty())
        g.characters = {Character::trivial, Character::quadratic};
    else
        g.characters = {parse_character(c.character)};
    for (long p : g.primes)
        (void)Prime(p);

    std::vector<SuiteReport> reports;
    const std::string& s = c.suite;
    if (s == "fe")
        reports.push_back(suite_functional_equation(g));
    else if (s == "scaling")
        reports.push_back(suite_scaling(g));
    else if (s == "inductive")
        reports.push_back(suite_inductive(g));
    else if (s == "matrix")
        reports.push_back(suite_matrix(g));
    else if (s == "lemmas")
        reports.push_back(suite_lemmas(g));
    else if (s == "consistency")
        reports.push_back(suite_consistency(g));
    else if (s == "rationality")
        reports.push_back(suite_rationality(g));
    else if (s == "golden") {
        GoldenConfig gc;
        reports.push_back(suite_golden_degree1(gc));
        reports.push_back(suite_golden_degree2(gc));
        reports.push_back(suite_golden_degree3(gc));
    } else {
        throw ParseError("unknown suite '" + s + "'");
    }
    bool ok = true;
    for (const auto& r : reports) {
        out << format_report(r);
        ok = ok && r.ok();
    }
    return ok ? kPass : kIdentityFailure;
}

int cmd_oracle(const RunConfig& c, std::ostream& out)
{
    Prime p(c.p);
    const Character psi = parse_character(c.character);
    int twist = 1;
    const DiagonalForm N = input_form(c, p, twist);
    if (c.nu < 0 || c.nu > N.size())
        throw ParseError("--nu must lie in [0, n]");
    if (c.order < 1)
        throw ParseError("--order must be at least 1");
    SeriesEngine eng(p, psi);
    const RatFunc exact = eng.cusp(N, c.nu);
    const OracleSeries s = truncated_series(psi, p.value(), input_matrix(c, N), c.nu, c.order);
    const CompareReport rep = compare(exact, s, c.tol);
    json j = compare_to_json(rep, s);
    j["exact"] = ratfunc_to_json(exact, p.value(), eng.field());
    out << j.dump(2) << "\n";
    return rep.ok ? kPass : kIdentityFailure;
}

int cmd_table(const RunConfig& c, std::ostream& out)
{
    Prime p(c.p);
    const Character psi = parse_character(c.character);
    CuspMix mix(p, psi);
    const long d = field_context(p, psi);
    json j = {{"p", p.value()},
              {"character", to_string(psi)},
              {"n", c.max_n},
              {"B", matrix_to_json(mix.b_matrix(c.max_n), p.value(), d)},
              {"C", matrix_to_json(mix.c_matrix(c.max_n), p.value(), d)}};
    out << j.dump(2) << "\n";
    return kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ramified Siegel series of level p as exact rational functions in X = p^{-s}", "siegelp"};
    app.require_subcommand(1);
    RunConfig c;
    std::string primes_text = "3,5";

    auto add_form = [&](CLI::App* sub) {
        sub->add_option("--p", c.p, "odd prime")->required();
        sub->add_option("--character", c.character, "trivial | quadratic")
            ->check(CLI::IsMember({"trivial", "quadratic", "chi0", "chip"}));
        sub->add_option("--units", c.units, "comma separated p-units alpha_i");
        sub->add_option("--exponents", c.exponents, "comma separated exponents u_i >= 0");
        sub->add_option("--matrix", c.matrix, "JSON integer matrix 2N");
        sub->add_option("--nu", c.nu, "stratum 0 <= nu <= n")->required();
    };

    auto* series = app.add_subcommand("series", "exact series S, beta and F with local invariants");
    add_form(series);
    series->add_option("--basis", c.basis, "characteristic | cusp")
        ->check(CLI::IsMember({"characteristic", "cusp"}));
    series->add_option("--format", c.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto* check = app.add_subcommand("check", "run an identity suite");
    check->add_option("suite", c.suite, "fe | scaling | inductive | matrix | lemmas | golden | consistency | rationality")
        ->required();
    check->add_option("--max-n", c.max_n, "largest degree");
    check->add_option("--p", primes_text, "comma separated primes");
    check->add_option("--max-exp", c.max_exp, "largest exponent in the diagonal grid");
    check->add_option("--seed", c.seed, "seed for randomized suites");
    check->add_option("--character", c.character, "trivial | quadratic | both");
    c.character = "quadratic";

    auto* oracle = app.add_subcommand("oracle", "compare the exact cusp series with brute-force enumeration");
    add_form(oracle);
    oracle->add_option("--order", c.order, "truncation order L");
    oracle->add_option("--tol", c.tol, "absolute tolerance");

    auto* table = app.add_subcommand("table", "dump the base change matrices B and C");
    table->add_option("--p", c.p, "odd prime")->required();
    table->add_option("--character", c.character, "trivial | quadratic");
    table->add_option("--max-n", c.max_n, "matrix size minus one");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (check->parsed()) {
            if (check->count("--character") == 0)
                c.character = "both";
            c.primes = parse_list<long>(primes_text, "--p");
            return cmd_check(c, out);
        }
        if (series->parsed())
            return cmd_series(c, out);
        if (oracle->parsed())
            return cmd_oracle(c, out);
        if (table->parsed())
            return cmd_table(c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedPrime& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kUsage;
}

} // namespace siegelp::cli
