#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace costar {

/// One line of the movie dataset. The cast keeps input order and duplicates.
struct MovieRecord {
    std::string title;
    std::vector<std::string> cast;
    std::optional<int> year;

    bool operator==(const MovieRecord&) const = default;
};

struct ParseResult {
    std::vector<MovieRecord> records;
    std::size_t malformed_lines = 0;
};

/// Counts from one cleaning pass.
/// raw_count == dropped_no_cast + dropped_no_year + retained + malformed_lines.
struct CleaningReport {
    std::size_t raw_count = 0;
    std::size_t dropped_no_cast = 0;
    std::size_t dropped_no_year = 0;
    std::size_t retained = 0;
    std::size_t malformed_lines = 0;

    bool operator==(const CleaningReport&) const = default;
};

struct CleanResult {
    std::vector<MovieRecord> records;
    CleaningReport report;
};

/// Frequency per integer key (a year, or a cast size).
struct Histogram {
    std::map<int, std::size_t> bins;

    std::size_t total() const;
    bool operator==(const Histogram&) const = default;
};

/// Parses a single JSON line. Returns nullopt when the line is not a JSON
/// object carrying a string "title", or when "cast" is neither absent, null,
/// nor an array of strings. A non-integer "year" is read as absent.
std::optional<MovieRecord> parse_record(std::string_view line);

/// Parses a JSON-lines stream. Blank lines are ignored; every other line
/// either yields a record or counts as malformed. With workers > 1 lines are
/// parsed in parallel chunks; record order always follows line order.
ParseResult parse_records(std::istream& in, unsigned workers = 1);
ParseResult parse_records(std::string_view text, unsigned workers = 1);
ParseResult parse_records_file(const std::string& path, unsigned workers = 1);

/// Keeps records with a non-empty cast and a year. A record failing both
/// rules is counted under dropped_no_cast only. The report carries
/// raw_count = records.size() + malformed_lines.
CleanResult clean(std::span<const MovieRecord> records, std::size_t malformed_lines = 0);
CleanResult clean(const ParseResult& parsed);

/// Records without a year are skipped.
Histogram movies_per_year(std::span<const MovieRecord> records);
Histogram cast_size_histogram(std::span<const MovieRecord> records);

/// The n largest casts, ties by title (byte order) then input order.
std::vector<std::pair<std::string, std::size_t>> top_by_cast_size(
    std::span<const MovieRecord> records, std::size_t n);

/// Records released in [decade, decade + 9]. Throws std::invalid_argument
/// unless decade is a multiple of 10.
std::vector<MovieRecord> filter_by_decade(std::span<const MovieRecord> records, int decade);

/// The decade (floor to a multiple of 10) a year belongs to.
int decade_of(int year);

std::string to_json(const CleaningReport& report);

}  // namespace costar
