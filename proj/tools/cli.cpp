#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polya/bessel.hpp"
#include "polya/borel.hpp"
#include "polya/loop_census.hpp"
#include "polya/series.hpp"
#include "polya/walk_sim.hpp"

namespace polya::cli {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

struct Options {
    std::vector<int> d{};
    int max_n = -1;
    std::vector<double> z{};
    std::vector<double> x{};
    double tol = 0.0;
    double split = 0.0;
    std::uint64_t trials = 100000;
    std::uint64_t horizon = 10000;
    std::uint64_t seed = 20240607;
    std::string out_path;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    template <class... Cells>
    void row(const Cells&... cells)
    {
        bool first = true;
        ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
        os_ << '\n';
    }

private:
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    static std::string cell(double v) { return format_double(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(unsigned v) { return std::to_string(v); }
    static std::string cell(std::uint64_t v) { return std::to_string(v); }
    static std::string cell(bool v) { return v ? "true" : "false"; }

    std::ostream& os_;
};

const std::vector<double> kDefaultBesselGrid = {0.5, 1, 2, 5, 10, 20, 50, 100, 200};
const std::vector<double> kDefaultQGrid = {0.0, 0.5, 0.9, 0.99};

QuadratureConfig quad_config(const Options& o, Dimension d)
{
    auto cfg = QuadratureConfig::defaults_for(d);
    if (o.split > 0.0)
        cfg.split_point = o.split;
    if (o.tol > 0.0)
        cfg.abs_tol = o.tol;
    return cfg;
}

int single_d(const Options& o, int fallback)
{
    return o.d.empty() ? fallback : o.d.front();
}

void cmd_loops(const Options& o, CsvWriter& csv)
{
    const Dimension d(single_d(o, 2));
    const unsigned max_n = o.max_n < 0 ? 16u : static_cast<unsigned>(o.max_n);
    const auto loops = loop_counts(d, max_n);
    const auto prime = indecomposable_counts(d, max_n);
    csv.row("n", "loops", "indecomposable");
    // Odd lengths are identically zero and omitted.
    for (unsigned n = 0; n <= max_n; n += 2)
        csv.row(n, loops[n].get_str(), prime[n].get_str());
}

void cmd_series(const Options& o, CsvWriter& csv)
{
    const Dimension d(single_d(o, 1));
    const std::size_t order =
        o.max_n < 0 ? kDefaultSeriesOrder : static_cast<std::size_t>(o.max_n);
    const auto seq = return_sequences(d, order);
    csv.row("n", "p_n", "p_n_decimal", "q_n", "q_n_decimal", "partial_p", "partial_p_decimal");
    mpq_class partial = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        partial += seq.p[n];
        csv.row(n, rational_text(seq.p[n]), seq.p[n].get_d(), rational_text(seq.q[n]),
                seq.q[n].get_d(), rational_text(partial), partial.get_d());
    }
}

void cmd_bessel(const Options& o, CsvWriter& csv)
{
    const auto& xs = o.x.empty() ? kDefaultBesselGrid : o.x;
    const double tol = o.tol > 0.0 ? o.tol : 1e-17;
    csv.row("x", "series", "integral", "scaled", "asymptotic", "series_over_integral",
            "integral_over_asymptotic");
    for (double x : xs) {
        const double s = i_alpha_series(BesselOrder::integer(0), x, tol);
        const double in = i0_integral(x);
        const double asym = i0_asymptotic(x);
        csv.row(x, s, in, i0_scaled(x), asym, s / in, in / asym);
    }
}

void cmd_qintegral(const Options& o, CsvWriter& csv)
{
    const Dimension d(single_d(o, 3));
    const auto cfg = quad_config(o, d);
    const auto& zs = o.z.empty() ? kDefaultQGrid : o.z;
    csv.row("d", "z", "q", "error_estimate", "evaluations");
    for (double z : zs) {
        const auto r = q_integral(z, d, cfg);
        csv.row(d.value(), z, r.value, r.error_estimate, r.evaluations);
    }
}

void cmd_polya(const Options& o, CsvWriter& csv)
{
    const std::vector<int> ds = o.d.empty() ? std::vector<int>{3} : o.d;
    csv.row("d", "classification", "p", "error_estimate");
    for (int dv : ds) {
        const Dimension d(dv);
        const auto c = return_probability(d, quad_config(o, d));
        if (c.recurrent())
            csv.row(dv, "recurrent", 1.0, 0.0);
        else
            csv.row(dv, "transient", *c.return_probability, c.error_estimate);
    }
}

void cmd_mc(const Options& o, CsvWriter& csv, std::ostream& err)
{
    const WalkConfig cfg(Dimension(single_d(o, 3)), o.horizon, o.trials, o.seed);
    const auto e = estimate_return_probability(cfg);
    csv.row("d", "horizon", "trials", "seed", "returns", "p_hat", "ci_low", "ci_high");
    csv.row(cfg.d.value(), e.horizon, e.trials, cfg.seed, e.returns, e.p_hat, e.ci_low, e.ci_high);
    err << "note: p_hat counts returns within " << e.horizon
        << " steps only, so it estimates a lower bound on p\n";
}

void cmd_compare(const Options& o, CsvWriter& csv, std::ostream& err)
{
    const Dimension d(single_d(o, 3));
    const std::size_t order =
        o.max_n < 0 ? kDefaultSeriesOrder : static_cast<std::size_t>(o.max_n);
    const auto qcfg = quad_config(o, d);
    const auto c = return_probability(d, qcfg);
    const double p = c.recurrent() ? 1.0 : *c.return_probability;

    double low = partial_return_probability(d, order).get_d();
    double high = 1.0;
    if (!c.recurrent()) {
        const auto b = polya_bracket(d, order, qcfg);
        low = b.lower;
        high = b.upper;
    }

    const auto e = estimate_return_probability(WalkConfig(d, o.horizon, o.trials, o.seed));
    csv.row("d", "classification", "quadrature_p", "quadrature_error", "bracket_low",
            "bracket_high", "mc_p_hat", "mc_ci_low", "mc_ci_high", "mc_covers_quadrature");
    csv.row(d.value(), c.recurrent() ? "recurrent" : "transient", p, c.error_estimate, low, high,
            e.p_hat, e.ci_low, e.ci_high, e.covers(p));
    err << "note: the Monte Carlo column only sees returns within " << e.horizon << " steps\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and numerical checks of recurrence/transience for the simple random walk on Z^d"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_d = [&o](CLI::App* sub, const std::string& help) {
        sub->add_option("--d", o.d, help)->check(CLI::PositiveNumber)->expected(1);
    };
    auto add_out = [&o](CLI::App* sub) {
        sub->add_option("--out", o.out_path, "write CSV to this file instead of stdout");
    };

    auto* loops = app.add_subcommand("loops", "loop and indecomposable-loop counts on Z^d");
    add_d(loops, "lattice dimension (default 2)");
    loops->add_option("--max-n", o.max_n, "largest walk length (default 16)")
        ->check(CLI::NonNegativeNumber);
    add_out(loops);

    auto* series = app.add_subcommand("series", "exact p_n, q_n and partial sums of p_n");
    add_d(series, "lattice dimension (default 1)");
    series->add_option("--max-n", o.max_n, "truncation order N (default 64)")
        ->check(CLI::NonNegativeNumber);
    add_out(series);

    auto* bessel = app.add_subcommand("bessel", "I_0 by series, integral and Laplace asymptotic");
    bessel->add_option("--x", o.x, "arguments, 0 < x <= 700 (default 0.5,1,2,5,10,20,50,100,200)")
        ->check(CLI::Range(std::numeric_limits<double>::min(), kUnscaledLimit));
    bessel->add_option("--tol", o.tol, "relative series tolerance (default 1e-17)")
        ->check(CLI::PositiveNumber);
    add_out(bessel);

    auto* qint = app.add_subcommand("qintegral", "Q(z) by the Borel-transform integral");
    add_d(qint, "lattice dimension (default 3)");
    qint->add_option("--z", o.z, "evaluation points in [0, 1] (default 0,0.5,0.9,0.99)")
        ->check(CLI::Range(0.0, 1.0));
    qint->add_option("--tol", o.tol, "absolute quadrature tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    qint->add_option("--split", o.split, "head/tail split point (default max(50d, 200))")
        ->check(CLI::PositiveNumber);
    add_out(qint);

    auto* polya_cmd = app.add_subcommand("polya", "recurrence/transience and p(d)");
    polya_cmd->add_option("--d", o.d, "lattice dimension(s) (default 3)")
        ->check(CLI::PositiveNumber);
    polya_cmd->add_option("--tol", o.tol, "absolute quadrature tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    polya_cmd->add_option("--split", o.split, "head/tail split point (default max(50d, 200))")
        ->check(CLI::PositiveNumber);
    add_out(polya_cmd);

    auto add_mc = [&o](CLI::App* sub) {
        sub->add_option("--trials", o.trials, "number of walks (default 100000)")
            ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
        sub->add_option("--horizon", o.horizon, "steps per walk (default 10000)")
            ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
        sub->add_option("--seed", o.seed, "64-bit seed (default 20240607)");
    };

    auto* mc = app.add_subcommand("mc", "Monte Carlo return probability with Wilson 95% CI");
    add_d(mc, "lattice dimension (default 3)");
    add_mc(mc);
    add_out(mc);

    auto* compare = app.add_subcommand("compare", "quadrature vs exact bracket vs Monte Carlo");
    add_d(compare, "lattice dimension (default 3)");
    compare->add_option("--max-n", o.max_n, "series order for the bracket (default 64)")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--tol", o.tol, "absolute quadrature tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);
    compare->add_option("--split", o.split, "head/tail split point (default max(50d, 200))")
        ->check(CLI::PositiveNumber);
    add_mc(compare);
    add_out(compare);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::Success& e) {
        // --help on a subcommand prints that subcommand's help.
        app.exit(e, out, err);
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << o.out_path << " for writing\n";
            return kUsage;
        }
    }
    // Buffer the table so a failing subcommand never leaves a partial file.
    std::ostringstream buffer;
    buffer.imbue(std::locale::classic());
    CsvWriter csv(buffer);

    try {
        if (*loops)
            cmd_loops(o, csv);
        else if (*series)
            cmd_series(o, csv);
        else if (*bessel)
            cmd_bessel(o, csv);
        else if (*qint)
            cmd_qintegral(o, csv);
        else if (*polya_cmd)
            cmd_polya(o, csv);
        else if (*mc)
            cmd_mc(o, csv, err);
        else if (*compare)
            cmd_compare(o, csv, err);
    }
    catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    }
    catch (const Error& e) {
        err << "numerical error: " << e.what() << "\n";
        return kTolerance;
    }

    (o.out_path.empty() ? out : file) << buffer.str();
    return kOk;
}

} // namespace polya::cli
