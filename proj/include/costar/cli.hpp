#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace costar::cli {

enum class Format { tsv, json, table, longtable };

struct RunConfig {
    std::string command;
    std::string input;                   // JSON-lines dataset
    std::optional<std::string> snapshot;  // prebuilt graph to load instead of input
    std::optional<std::string> output;    // snapshot path written by `build`
    Format format = Format::tsv;
    std::size_t top = 5;
    bool top_given = false;
    std::size_t k = 1000;
    bool exact = false;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::optional<int> decade;
    std::size_t candidates = 1000;
    std::size_t sample = 1000;
    std::vector<std::string> actors;
};

const std::vector<std::string>& commands();

/// Parses argv. Returns nullopt when the process should exit with
/// `exit_code` (help, or a usage error already reported on err).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes one command. Data goes to out; diagnostics and timing lines go
/// to err. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace costar::cli
