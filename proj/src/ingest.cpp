#include "costar/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "costar/parallel.hpp"
#include "json.hpp"

namespace costar {

using nlohmann::json;

namespace {

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    });
}

std::optional<int> read_year(const json& obj) {
    auto it = obj.find("year");
    if (it == obj.end()) return std::nullopt;
    if (it->is_number_unsigned()) {
        const auto v = it->get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) return std::nullopt;
        return static_cast<int>(v);
    }
    if (it->is_number_integer()) {
        const auto v = it->get<std::int64_t>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            return std::nullopt;
        return static_cast<int>(v);
    }
    return std::nullopt;
}

// Parses lines[begin, end) into out; returns the malformed count.
std::size_t parse_range(const std::vector<std::string_view>& lines, std::size_t begin,
                        std::size_t end, std::vector<MovieRecord>& out) {
    std::size_t malformed = 0;
    for (std::size_t i = begin; i < end; ++i) {
        if (is_blank(lines[i])) continue;
        if (auto rec = parse_record(lines[i]))
            out.push_back(std::move(*rec));
        else
            ++malformed;
    }
    return malformed;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

std::size_t Histogram::total() const {
    std::size_t sum = 0;
    for (const auto& [key, count] : bins) sum += count;
    return sum;
}

std::optional<MovieRecord> parse_record(std::string_view line) {
    json obj = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded() || !obj.is_object()) return std::nullopt;

    auto title = obj.find("title");
    if (title == obj.end() || !title->is_string()) return std::nullopt;

    MovieRecord rec;
    rec.title = title->get<std::string>();

    if (auto cast = obj.find("cast"); cast != obj.end() && !cast->is_null()) {
        if (!cast->is_array()) return std::nullopt;
        rec.cast.reserve(cast->size());
        for (const auto& name : *cast) {
            if (!name.is_string()) return std::nullopt;
            rec.cast.push_back(name.get<std::string>());
        }
    }
    rec.year = read_year(obj);
    return rec;
}

ParseResult parse_records(std::string_view text, unsigned workers) {
    const auto lines = split_lines(text);
    ParseResult result;

    const std::size_t chunk = 4096;
    const std::size_t chunks = (lines.size() + chunk - 1) / chunk;
    if (workers <= 1 || chunks <= 1) {
        result.malformed_lines = parse_range(lines, 0, lines.size(), result.records);
        return result;
    }

    std::vector<std::vector<MovieRecord>> parts(chunks);
    std::vector<std::size_t> malformed(chunks, 0);
    parallel_for(chunks, workers, [&](std::size_t c, unsigned) {
        const std::size_t begin = c * chunk;
        const std::size_t end = std::min(lines.size(), begin + chunk);
        malformed[c] = parse_range(lines, begin, end, parts[c]);
    });

    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    result.records.reserve(total);
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(result.records));
    result.malformed_lines = std::accumulate(malformed.begin(), malformed.end(), std::size_t{0});
    return result;
}

ParseResult parse_records(std::istream& in, unsigned workers) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_records(std::string_view(buffer.view()), workers);
}

ParseResult parse_records_file(const std::string& path, unsigned workers) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return parse_records(in, workers);
}

CleanResult clean(std::span<const MovieRecord> records, std::size_t malformed_lines) {
    CleanResult out;
    out.report.malformed_lines = malformed_lines;
    out.report.raw_count = records.size() + malformed_lines;
    for (const auto& rec : records) {
        if (rec.cast.empty()) {
            ++out.report.dropped_no_cast;
        } else if (!rec.year) {
            ++out.report.dropped_no_year;
        } else {
            out.records.push_back(rec);
        }
    }
    out.report.retained = out.records.size();
    return out;
}

CleanResult clean(const ParseResult& parsed) {
    return clean(parsed.records, parsed.malformed_lines);
}

Histogram movies_per_year(std::span<const MovieRecord> records) {
    Histogram h;
    for (const auto& rec : records)
        if (rec.year) ++h.bins[*rec.year];
    return h;
}

Histogram cast_size_histogram(std::span<const MovieRecord> records) {
    Histogram h;
    for (const auto& rec : records) ++h.bins[static_cast<int>(rec.cast.size())];
    return h;
}

std::vector<std::pair<std::string, std::size_t>> top_by_cast_size(
    std::span<const MovieRecord> records, std::size_t n) {
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    n = std::min(n, order.size());

    auto before = [&](std::size_t a, std::size_t b) {
        const auto& ra = records[a];
        const auto& rb = records[b];
        if (ra.cast.size() != rb.cast.size()) return ra.cast.size() > rb.cast.size();
        if (ra.title != rb.title) return ra.title < rb.title;
        return a < b;
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                      before);

    std::vector<std::pair<std::string, std::size_t>> top;
    top.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        top.emplace_back(records[order[i]].title, records[order[i]].cast.size());
    return top;
}

int decade_of(int year) {
    int d = year / 10;
    if (year % 10 < 0) --d;
    return d * 10;
}

std::vector<MovieRecord> filter_by_decade(std::span<const MovieRecord> records, int decade) {
    if (decade % 10 != 0)
        throw std::invalid_argument("decade must be a multiple of 10, got " +
                                    std::to_string(decade));
    std::vector<MovieRecord> out;
    for (const auto& rec : records)
        if (rec.year && *rec.year >= decade && *rec.year <= decade + 9) out.push_back(rec);
    return out;
}

std::string to_json(const CleaningReport& report) {
    nlohmann::ordered_json j = {
        {"raw_count", report.raw_count},
        {"dropped_no_cast", report.dropped_no_cast},
        {"dropped_no_year", report.dropped_no_year},
        {"retained", report.retained},
        {"malformed_lines", report.malformed_lines},
    };
    return j.dump();
}

}  // namespace costar
