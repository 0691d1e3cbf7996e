#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gapentropy::cli {

enum class Command { primes, gaps, entropy, bounds, verify, compare, montecarlo };
enum class Format { csv, json, table };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kVerificationFailure = 3;

struct RunConfig {
    Command command = Command::verify;
    std::uint64_t limit = 0;  // also x_max
    std::uint64_t seed = 1;
    double tol = 1e-3;
    Format format = Format::table;
    std::optional<std::filesystem::path> output_path;
    bool exclude_gap_one = false;
    double delta = 1e-6;
    std::uint64_t trials = 100;

    // bounds
    std::string bound_id;
    std::vector<double> at;
    // entropy extras
    std::optional<std::uint64_t> factor;
    std::optional<double> envelope_upper;
    // gaps / compare plot series
    std::optional<std::filesystem::path> series_dir;
    // montecarlo: first trial's sample
    std::optional<std::filesystem::path> sample_csv;
};

// Executes one command; output goes to `out` unless output_path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses flags (without the program name) and runs. Usage errors exit 2.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// CSV "x,y" with a comment header naming the series and its parameters.
void emit_plot_series(const std::string& name, std::span<const double> xs, std::span<const double> ys,
                      const std::filesystem::path& path, const std::string& parameters = {});

// `points` log-spaced integers from lo to hi inclusive, deduplicated.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t points);

}  // namespace gapentropy::cli
