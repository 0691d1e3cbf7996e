#include "gapentropy/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "gapentropy/bounds.hpp"
#include "gapentropy/entropy.hpp"
#include "gapentropy/error.hpp"
#include "gapentropy/randgaps.hpp"
#include "gapentropy/sieve.hpp"
#include "gapentropy/thresholds.hpp"

namespace gapentropy::cli {

namespace {

using nlohmann::json;

constexpr const char* kLogNote = "natural log (ln); entropies in nats";

// >= 10 significant digits for machine formats, 6 for tables.
std::string num(double v, Format f) { return f == Format::table ? fmt::format("{:.6g}", v) : fmt::format("{:.12g}", v); }

struct Row {
    std::string key;
    std::string value;
};

// Key/value output shared by several commands.
void emit_rows(std::ostream& out, Format f, const std::string& title, const std::vector<Row>& rows,
               const json& as_json) {
    switch (f) {
        case Format::json: out << as_json.dump(2) << '\n'; break;
        case Format::csv:
            out << "# " << title << "; " << kLogNote << '\n' << "quantity,value\n";
            for (const auto& r : rows) out << r.key << ',' << r.value << '\n';
            break;
        case Format::table:
            out << "# " << title << "; " << kLogNote << '\n';
            for (const auto& r : rows) out << fmt::format("{:<28} {}\n", r.key, r.value);
            break;
    }
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("GAPENTROPY_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint64_t limit) {
    return dir / fmt::format("gaps_{}.csv", limit);
}

sieve::GapHistogram cached_histogram(std::uint64_t limit) {
    const auto dir = cache_dir();
    if (dir) {
        const auto path = cache_file(*dir, limit);
        if (std::filesystem::exists(path)) {
            auto hist = sieve::read_histogram(path);
            if (hist.limit == limit) return hist;
        }
    }
    auto hist = sieve::gap_histogram(sieve::PrimeRange(limit));
    if (dir) {
        std::filesystem::create_directories(*dir);
        sieve::write_histogram(hist, cache_file(*dir, limit));
    }
    return hist;
}

int cmd_primes(const RunConfig& c, std::ostream& out) {
    const auto primes = sieve::primes_up_to(sieve::PrimeRange(c.limit));
    switch (c.format) {
        case Format::json: out << json{{"limit", c.limit}, {"count", primes.size()}, {"primes", primes}}.dump() << '\n'; break;
        case Format::csv:
            out << "# limit=" << c.limit << " count=" << primes.size() << '\n' << "prime\n";
            for (const auto p : primes) out << p << '\n';
            break;
        case Format::table:
            out << fmt::format("# pi({}) = {}\n", c.limit, primes.size());
            for (std::size_t i = 0; i < primes.size(); ++i) out << primes[i] << ((i % 10 == 9 || i + 1 == primes.size()) ? '\n' : ' ');
            break;
    }
    return kOk;
}

void write_gap_ratio_series(std::uint64_t limit, const std::filesystem::path& dir) {
    if (limit < 1000) throw DomainError("gap ratio series needs limit >= 1000");
    const auto xs_int = log_spaced(1000, limit, 50);
    const auto stats = sieve::gap_statistics_at(xs_int);
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < xs_int.size(); ++i) {
        const auto c8 = stats[i].histogram.count(8);
        if (c8 == 0) continue;
        xs.push_back(static_cast<double>(xs_int[i]));
        ys.push_back(static_cast<double>(stats[i].histogram.count(6)) / static_cast<double>(c8));
    }
    std::filesystem::create_directories(dir);
    emit_plot_series("gap6_gap8_ratio", xs, ys, dir / "gap6_gap8_ratio.csv",
                     fmt::format("limit in [1000, {}], log-spaced; asymptotic ratio f(6)/f(8) = 2", limit));
}

int cmd_gaps(const RunConfig& c, std::ostream& out) {
    const auto stats = sieve::gap_statistics(sieve::PrimeRange(c.limit));
    const auto& h = stats.histogram;
    if (const auto dir = cache_dir()) {
        std::filesystem::create_directories(*dir);
        sieve::write_histogram(h, cache_file(*dir, c.limit));
    }
    switch (c.format) {
        case Format::csv:
            out << "# max_gap=" << stats.max_gap.gap << " lower_prime=" << stats.max_gap.lower_prime << '\n'
                << sieve::histogram_to_csv(h);
            break;
        case Format::json: {
            json counts = json::object();
            for (const auto& [gap, n] : h.counts) counts[std::to_string(gap)] = n;
            out << json{{"limit", h.limit},
                        {"total_gaps", h.total_gaps},
                        {"counts", counts},
                        {"max_gap", {{"gap", stats.max_gap.gap}, {"lower_prime", stats.max_gap.lower_prime}}}}
                       .dump(2)
                << '\n';
            break;
        }
        case Format::table:
            out << fmt::format("# gaps between consecutive primes <= {}: {} gaps, max gap {} after {}\n", h.limit,
                               h.total_gaps, stats.max_gap.gap, stats.max_gap.lower_prime);
            out << fmt::format("{:>6} {:>12} {:>10}\n", "gap", "count", "freq");
            for (const auto& [gap, n] : h.counts)
                out << fmt::format("{:>6} {:>12} {:>10.6g}\n", gap, n, static_cast<double>(n) / static_cast<double>(h.total_gaps));
            break;
    }
    if (c.series_dir) write_gap_ratio_series(c.limit, *c.series_dir);
    return kOk;
}

int cmd_entropy(const RunConfig& c, std::ostream& out) {
    const auto hist = cached_histogram(c.limit);
    const auto emp = entropy::empirical_gap_entropy(hist, c.exclude_gap_one);
    const double G = static_cast<double>(hist.max_key());
    // ln(G - 2) is undefined while the largest gap is 2; report it as absent.
    const std::optional<double> uni = G > 2 ? std::optional(entropy::h_uniform_gaps(G).value) : std::nullopt;
    const double reals = entropy::h_real(static_cast<double>(c.limit)).value;
    auto cell = [&](const std::optional<double>& v) { return v ? num(*v, c.format) : std::string("undefined"); };
    auto js = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };

    std::vector<Row> rows = {
        {"limit", std::to_string(c.limit)},
        {"max_gap", std::to_string(hist.max_key())},
        {"h_prime_gaps", num(emp.value, c.format)},
        {"h_uniform_gaps", cell(uni)},
        {"h_reals", num(reals, c.format)},
    };
    json j = {{"limit", c.limit},
              {"exclude_gap_one", c.exclude_gap_one},
              {"max_gap", hist.max_key()},
              {"h_prime_gaps", emp.value},
              {"h_uniform_gaps", js(uni)},
              {"h_reals", reals},
              {"log_base", kLogNote}};
    if (c.factor) {
        const auto [profile, h] = entropy::factorization_entropy(*c.factor);
        rows.push_back({"factorization_entropy", num(h.value, c.format)});
        rows.push_back({"big_omega", std::to_string(profile.big_omega)});
        json factors = json::array();
        for (const auto& [p, a] : profile.factors) factors.push_back({p, a});
        j["factorization"] = {{"n", profile.n}, {"factors", factors}, {"big_omega", profile.big_omega}, {"entropy", h.value}};
    }
    if (c.envelope_upper) {
        const double v = entropy::envelope_entropy_integral(*c.envelope_upper, c.delta);
        rows.push_back({"envelope_integral", num(v, c.format)});
        j["envelope_integral"] = {{"upper", *c.envelope_upper}, {"delta", c.delta}, {"value", v}};
    }
    emit_rows(out, c.format,
              fmt::format("entropy of prime gaps up to {}{}", c.limit, c.exclude_gap_one ? ", gap 1 excluded" : ""),
              rows, j);
    return kOk;
}

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.bound_id.empty()) {
        if (c.format == Format::table) {
            for (const auto& b : bounds::registry())
                out << fmt::format("{:<18} {:<44} {}\n", bounds::to_string(b.id), b.formula, b.notes);
        } else {
            out << bounds::registry_to_json().dump(2) << '\n';
        }
        return kOk;
    }
    const auto id = bounds::bound_from_string(c.bound_id);
    if (!id) {
        err << "unknown bound: " << c.bound_id << '\n';
        return kUsageError;
    }
    const auto ev = bounds::evaluate(*id, c.at);
    if (!ev.in_domain) {
        err << "domain error: " << ev.message << '\n';
        return kDomainFailure;
    }
    std::vector<Row> rows = {{"id", std::string(bounds::to_string(*id))}};
    for (std::size_t i = 0; i < c.at.size(); ++i) rows.push_back({fmt::format("input{}", i + 1), num(c.at[i], c.format)});
    rows.push_back({"value", num(*ev.value, c.format)});
    json j = {{"id", bounds::to_string(*id)}, {"inputs", c.at}, {"value", *ev.value}, {"in_domain", true}};
    if (*id == bounds::BoundId::mertens_f) {
        const auto f = bounds::mertens_f(static_cast<std::uint64_t>(c.at.at(0)));
        rows.push_back({"exact", fmt::format("{}/{}", f.num, f.den)});
        j["exact"] = {{"num", f.num}, {"den", f.den}};
    }
    if (!ev.message.empty()) {
        rows.push_back({"note", ev.message});
        j["note"] = ev.message;
    }
    emit_rows(out, c.format, "bound evaluation", rows, j);
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto report = thresholds::verify_all(c.tol);
    switch (c.format) {
        case Format::json: out << thresholds::report_to_json(report).dump(2) << '\n'; break;
        case Format::table: out << thresholds::report_to_table(report); break;
        case Format::csv:
            out << "# " << kLogNote << "; tolerance " << num(c.tol, c.format) << '\n'
                << "claim_id,kind,paper,computed,rel_error,status\n";
            for (const auto& r : report.claims) {
                auto cell = [&](const thresholds::ClaimValue& v) {
                    if (const auto* d = std::get_if<double>(&v)) return num(*d, c.format);
                    return "\"" + thresholds::format_value(v) + "\"";
                };
                out << r.claim_id << ',' << thresholds::to_string(r.kind) << ',' << cell(r.paper_value) << ','
                    << (r.computed ? cell(*r.computed) : "") << ','
                    << (r.relative_error ? num(*r.relative_error, c.format) : "") << ','
                    << thresholds::to_string(r.status) << '\n';
            }
            break;
    }
    const auto bad = report.unexplained_divergences();
    if (!bad.empty()) {
        err << "divergent claims:";
        for (const auto& id : bad) err << ' ' << id;
        err << '\n';
        return kVerificationFailure;
    }
    return kOk;
}

void write_compare_series(std::uint64_t x_max, bool exclude_gap_one, const std::filesystem::path& dir) {
    const auto xs_int = log_spaced(1000, x_max, 50);
    const auto stats = sieve::gap_statistics_at(xs_int);
    std::vector<double> xs;
    std::vector<double> gaps;
    std::vector<double> uniform;
    std::vector<double> reals;
    for (std::size_t i = 0; i < xs_int.size(); ++i) {
        const double x = static_cast<double>(xs_int[i]);
        xs.push_back(x);
        gaps.push_back(entropy::empirical_gap_entropy(stats[i].histogram, exclude_gap_one).value);
        uniform.push_back(entropy::h_uniform_gaps(static_cast<double>(stats[i].max_gap.gap)).value);
        reals.push_back(entropy::h_real(x).value);
    }
    std::filesystem::create_directories(dir);
    const std::string params = fmt::format("x in [1000, {}], log-spaced", x_max);
    emit_plot_series("h_prime_gaps", xs, gaps, dir / "h_prime_gaps.csv", params);
    emit_plot_series("h_uniform_gaps", xs, uniform, dir / "h_uniform_gaps.csv", params + "; ln(G_emp - 2)");
    emit_plot_series("h_reals", xs, reals, dir / "h_reals.csv", params + "; ln(x/ln x - 2)");
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    const auto r = thresholds::compare_entropies(c.limit, c.exclude_gap_one);
    const std::vector<Row> rows = {
        {"x_max", std::to_string(r.x_max)},
        {"max_gap", std::to_string(r.max_gap)},
        {"h_prime_gaps", num(r.h_prime_gaps, c.format)},
        {"h_uniform_gaps", num(r.h_uniform_gaps, c.format)},
        {"h_reals", num(r.h_reals, c.format)},
        {"gaps_below_uniform", r.gaps_below_uniform ? "true" : "false"},
        {"uniform_below_reals", r.uniform_below_reals ? "true" : "false"},
    };
    const json j = {{"x_max", r.x_max},
                    {"max_gap", r.max_gap},
                    {"h_prime_gaps", r.h_prime_gaps},
                    {"h_uniform_gaps", r.h_uniform_gaps},
                    {"h_reals", r.h_reals},
                    {"gaps_below_uniform", r.gaps_below_uniform},
                    {"uniform_below_reals", r.uniform_below_reals},
                    {"log_base", kLogNote}};
    emit_rows(out, c.format, "H(prime gaps) vs H(uniform gaps) vs H(reals)", rows, j);
    if (c.series_dir) write_compare_series(c.limit, c.exclude_gap_one, *c.series_dir);
    return kOk;
}

int cmd_montecarlo(const RunConfig& c, std::ostream& out) {
    const auto s = randgaps::monte_carlo_theorem_check(c.limit, c.trials, c.seed);
    const std::vector<Row> rows = {
        {"x_max", std::to_string(s.x_max)},
        {"trials", std::to_string(s.trials)},
        {"seed", std::to_string(s.seed)},
        {"sample_count", std::to_string(s.sample_count)},
        {"max_gap", std::to_string(s.max_gap)},
        {"prime_gap_entropy", num(s.prime_gap_entropy, c.format)},
        {"fraction_prime_lower", num(s.fraction_prime_lower, c.format)},
        {"random_entropy_mean", num(s.random_mean, c.format)},
        {"random_entropy_min", num(s.random_min, c.format)},
        {"random_entropy_max", num(s.random_max, c.format)},
    };
    emit_rows(out, c.format, "Monte Carlo: prime-gap entropy vs uniform random even gaps", rows,
              randgaps::summary_to_json(s));
    if (c.sample_csv) randgaps::write_sample(randgaps::generate(c.seed, s.sample_count, 2, s.max_gap), *c.sample_csv);
    return kOk;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    switch (c.command) {
        case Command::primes: return cmd_primes(c, out);
        case Command::gaps: return cmd_gaps(c, out);
        case Command::entropy: return cmd_entropy(c, out);
        case Command::bounds: return cmd_bounds(c, out, err);
        case Command::verify: return cmd_verify(c, out, err);
        case Command::compare: return cmd_compare(c, out);
        case Command::montecarlo: return cmd_montecarlo(c, out);
    }
    return kUsageError;
}

}  // namespace

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t points) {
    if (lo < 1 || hi < lo || points < 1) throw DomainError("log_spaced needs 1 <= lo <= hi and points >= 1");
    std::vector<std::uint64_t> out;
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    for (std::size_t i = 0; i < points; ++i) {
        const double t = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        auto v = static_cast<std::uint64_t>(std::llround(std::exp(a + t * (b - a))));
        v = std::clamp(v, lo, hi);
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    out.back() = hi;
    return out;
}

void emit_plot_series(const std::string& name, std::span<const double> xs, std::span<const double> ys,
                      const std::filesystem::path& path, const std::string& parameters) {
    if (xs.empty()) throw DomainError("plot series '" + name + "' is empty");
    if (xs.size() != ys.size()) throw DomainError("plot series '" + name + "' has unequal x and y lengths");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "# series=" << name;
    if (!parameters.empty()) out << "; " << parameters;
    out << "; " << kLogNote << '\n' << "x,y\n";
    for (std::size_t i = 0; i < xs.size(); ++i) out << fmt::format("{:.12g},{:.12g}\n", xs[i], ys[i]);
    if (!out) throw IoError("write failed: " + path.string());
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output_path) {
            std::ostringstream buffer;
            const int code = dispatch(config, buffer, err);
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) throw IoError("cannot open for writing: " + config.output_path->string());
            file << buffer.str();
            return code;
        }
        return dispatch(config, out, err);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kDomainFailure;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropy of prime gaps: sieve statistics, gap-bound formulas and threshold verification",
                 "gapentropy"};
    app.require_subcommand(1);

    RunConfig c;
    std::string format = "table";
    std::string output;
    const std::map<std::string, Format> formats = {{"csv", Format::csv}, {"json", Format::json}, {"table", Format::table}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv, json or table")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        sub->add_option("-o,--output", output, "write to this file instead of stdout");
    };
    auto limit_opt = [&](CLI::App* sub, const char* name) {
        sub->add_option(name, c.limit, "upper bound")->required()->check(CLI::PositiveNumber);
    };

    auto* primes = app.add_subcommand("primes", "list primes up to a limit");
    limit_opt(primes, "--limit");
    common(primes);

    std::string series_dir;
    auto* gaps = app.add_subcommand("gaps", "gap histogram and maximal gap");
    limit_opt(gaps, "--limit");
    gaps->add_option("--series-dir", series_dir, "write the gap-6/gap-8 ratio series here");
    common(gaps);

    auto* ent = app.add_subcommand("entropy", "empirical gap entropy vs ln(G-2) vs ln(x/ln x - 2)");
    limit_opt(ent, "--limit");
    ent->add_flag("--exclude-gap-one", c.exclude_gap_one, "drop the gap 2->3");
    std::uint64_t factor = 0;
    double envelope = 0.0;
    auto* factor_opt = ent->add_option("--factor", factor, "also report the factorization entropy of this n");
    auto* envelope_opt = ent->add_option("--envelope-upper", envelope, "also integrate the smooth envelope to here");
    ent->add_option("--delta", c.delta, "envelope cutoff above e")->check(CLI::PositiveNumber);
    common(ent);

    auto* bnd = app.add_subcommand("bounds", "evaluate a gap-bound formula, or list the registry");
    bnd->add_option("--eval", c.bound_id, "bound id (e.g. wolf, granville, mertens_f)");
    bnd->add_option("--at", c.at, "input value; repeat for two-argument bounds");
    common(bnd);

    auto* ver = app.add_subcommand("verify", "re-derive every printed threshold");
    ver->add_option("--tol", c.tol, "relative tolerance for REPRODUCED")->check(CLI::PositiveNumber);
    common(ver);

    auto* cmp = app.add_subcommand("compare", "entropy ordering at one x_max");
    limit_opt(cmp, "--x-max");
    cmp->add_flag("--exclude-gap-one", c.exclude_gap_one, "drop the gap 2->3");
    cmp->add_option("--series-dir", series_dir, "write log-spaced entropy series here");
    common(cmp);

    std::string sample_csv;
    auto* mc = app.add_subcommand("montecarlo", "prime-gap entropy vs seeded uniform random gap samples");
    limit_opt(mc, "--x-max");
    mc->add_option("--trials", c.trials, "number of random samples")->check(CLI::PositiveNumber);
    mc->add_option("--seed", c.seed, "base seed; trial i uses seed + i");
    mc->add_option("--sample-csv", sample_csv, "export the first trial's sample as index,gap");
    common(mc);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    const std::map<CLI::App*, Command> commands = {
        {primes, Command::primes}, {gaps, Command::gaps},     {ent, Command::entropy},         {bnd, Command::bounds},
        {ver, Command::verify},    {cmp, Command::compare},   {mc, Command::montecarlo},
    };
    c.command = commands.at(app.get_subcommands().front());
    c.format = formats.at(format);
    if (!output.empty()) c.output_path = output;
    if (!series_dir.empty()) c.series_dir = series_dir;
    if (!sample_csv.empty()) c.sample_csv = sample_csv;
    if (factor_opt->count() > 0) c.factor = factor;
    if (envelope_opt->count() > 0) c.envelope_upper = envelope;
    return run(c, out, err);
}

}  // namespace gapentropy::cli
