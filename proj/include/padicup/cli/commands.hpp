#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "padicup/cli/instance.hpp"

namespace padicup::cli {

/// Process exit codes. theorem_falsified is reserved for an inequality or
/// annihilation check that fails on an admissible instance.
enum ExitCode : int {
    exit_ok = 0,
    exit_theorem_falsified = 1,
    exit_invalid = 2,
    exit_parse_error = 3,
    exit_hypothesis_violated = 4,
};

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

struct CheckOptions {
    /// 1-based index into the file's vectors, or a path to a vector file.
    /// Without it every file vector is checked (canonical e_j if none).
    std::optional<std::string> vector;
    /// Enumerate every admissible (M, N) instead of the file's M, N.
    bool all_subsets = false;
};

inline constexpr std::size_t kMaxAllSubsetsDimension = 12;

int cmd_check(const std::filesystem::path& path, const CheckOptions& options, std::ostream& out, std::ostream& err);

struct GenerateOptions {
    std::uint64_t prime = 7;
    std::size_t dimension = 2;
    std::uint64_t seed = 0;
    std::string kind = "hilbert";
};

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> dimensions;
    std::uint64_t first_seed = 0;
    std::uint64_t last_seed = 0;
    std::size_t draws = 2;
    std::string kind = "hilbert";
    /// "-" writes to `out`.
    std::filesystem::path output = "-";
    unsigned threads = 0;  // 0: hardware concurrency
};

inline constexpr std::size_t kMaxSweepDimension = 8;

/// Parses "a..b" (inclusive) or a single integer.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text);

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

/// Header line of the sweep CSV, without trailing newline.
std::string sweep_csv_header();

}  // namespace padicup::cli
