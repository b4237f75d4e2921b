#include "xbic/ingest.hpp"

#include "xbic/error.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace xbic {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    std::string out(s.substr(first, last - first + 1));
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
        out = out.substr(1, out.size() - 2);
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            current.push_back(ch);
        } else if (ch == delimiter && !quoted) {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name,
                         const std::filesystem::path& path) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw Error(Errc::MalformedRow, path.string() + ": header has no column '" + name + "'", 1);
    }
    return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

Date parse_date(const std::string& text, const std::string& format) {
    std::tm tm{};
    std::istringstream in(text);
    in >> std::get_time(&tm, format.c_str());
    if (in.fail()) {
        throw Error(Errc::MalformedRow, "unparseable date '" + text + "' for format '" + format + "'");
    }
    in >> std::ws;
    if (!in.eof()) {
        throw Error(Errc::MalformedRow, "trailing characters in date '" + text + "'");
    }
    const Date date{std::chrono::year{tm.tm_year + 1900},
                    std::chrono::month{static_cast<unsigned>(tm.tm_mon + 1)},
                    std::chrono::day{static_cast<unsigned>(tm.tm_mday)}};
    if (!date.ok()) {
        throw Error(Errc::MalformedRow, "invalid calendar date '" + text + "'");
    }
    return date;
}

std::string to_iso(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

std::vector<PriceSeries> load_price_csv(const std::filesystem::path& path, const CsvSchema& schema,
                                        std::span<const std::string> price_columns,
                                        LoadReport* report) {
    if (price_columns.empty()) {
        throw Error(Errc::InvalidArgument, "no price columns requested");
    }
    std::ifstream in(path);
    if (!std::filesystem::is_regular_file(path) || !in) {
        throw Error(Errc::FileNotFound, path.string());
    }

    std::string line;
    if (!std::getline(in, line) || trim(line).empty()) {
        throw Error(Errc::MalformedRow, path.string() + ": missing header row (empty file?)", 1);
    }
    const auto header = split_fields(line, schema.delimiter);
    const std::size_t date_idx = column_index(header, schema.date_column, path);
    std::vector<std::size_t> price_idx;
    for (const auto& col : price_columns) price_idx.push_back(column_index(header, col, path));

    std::vector<PriceSeries> out(price_columns.size());
    std::vector<std::vector<double>> values(price_columns.size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c].name = price_columns[c];

    LoadReport local;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ++local.rows_read;
        const auto fields = split_fields(line, schema.delimiter);
        const auto where = path.string() + ":" + std::to_string(line_no);
        if (fields.size() != header.size()) {
            throw Error(Errc::MalformedRow,
                        where + ": expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()),
                        line_no);
        }
        Date date;
        try {
            date = parse_date(fields[date_idx], schema.date_format);
        } catch (const Error& e) {
            throw Error(Errc::MalformedRow, where + ": " + e.what(), line_no);
        }

        for (std::size_t c = 0; c < out.size(); ++c) {
            const auto& raw = fields[price_idx[c]];
            const auto value = parse_number(raw);
            if (!value) {
                if (schema.lenient) {
                    ++local.rows_dropped;
                    continue;
                }
                throw Error(Errc::MalformedRow, where + ": unparseable price '" + raw + "'", line_no);
            }
            if (!(*value > 0.0)) {
                if (schema.lenient) {
                    ++local.rows_dropped;
                    continue;
                }
                throw Error(Errc::NonPositivePrice, where + ": price " + raw + " is not positive",
                            line_no);
            }
            auto& series = out[c];
            if (!series.dates.empty() && !(series.dates.back() < date)) {
                throw Error(Errc::UnsortedDates,
                            where + ": date " + to_iso(date) + " does not follow " +
                                to_iso(series.dates.back()),
                            line_no);
            }
            series.dates.push_back(date);
            values[c].push_back(*value);
        }
    }

    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c].values = Eigen::Map<const Vector>(values[c].data(), static_cast<Index>(values[c].size()));
    }
    if (report) *report = local;
    return out;
}

PriceSeries load_price_csv(const std::filesystem::path& path, const CsvSchema& schema,
                           LoadReport* report) {
    const std::string column = schema.price_column;
    auto all = load_price_csv(path, schema, std::span<const std::string>(&column, 1), report);
    return std::move(all.front());
}

AlignedPanel align(std::span<const PriceSeries> series) {
    if (series.size() < 2) {
        throw Error(Errc::InvalidArgument, "align needs at least two series");
    }
    std::vector<Date> common = series.front().dates;
    for (std::size_t i = 1; i < series.size(); ++i) {
        std::vector<Date> next;
        std::set_intersection(common.begin(), common.end(), series[i].dates.begin(),
                              series[i].dates.end(), std::back_inserter(next));
        common = std::move(next);
    }
    if (common.empty()) {
        throw Error(Errc::EmptyIntersection, "the input series share no dates");
    }

    AlignedPanel panel;
    panel.dates = common;
    for (const auto& s : series) {
        if (panel.columns.contains(s.name)) {
            throw Error(Errc::InvalidArgument, "duplicate series name '" + s.name + "'");
        }
        Vector col(static_cast<Index>(common.size()));
        std::size_t j = 0;
        for (std::size_t i = 0; i < s.dates.size() && j < common.size(); ++i) {
            if (s.dates[i] == common[j]) col(static_cast<Index>(j++)) = s.values(static_cast<Index>(i));
        }
        panel.names.push_back(s.name);
        panel.columns.emplace(s.name, std::move(col));
        panel.dropped.emplace(s.name, s.dates.size() - common.size());
    }
    return panel;
}

PriceSeries AlignedPanel::series(const std::string& name) const {
    const auto it = columns.find(name);
    if (it == columns.end()) {
        throw Error(Errc::InvalidArgument, "panel has no series '" + name + "'");
    }
    return PriceSeries{name, dates, it->second};
}

ReturnSeries to_returns(const PriceSeries& prices) {
    const Index n = prices.size();
    if (n < 2) {
        throw Error(Errc::SeriesTooShort, "series '" + prices.name + "' needs at least two prices");
    }
    ReturnSeries out;
    out.name = prices.name;
    out.dates.assign(prices.dates.begin() + 1, prices.dates.end());
    // Scalar log: the vectorised one is not bit-identical across lanes.
    out.values.resize(n - 1);
    double prev = std::log(prices.values(0));
    for (Index i = 1; i < n; ++i) {
        const double cur = std::log(prices.values(i));
        out.values(i - 1) = 100.0 * (cur - prev);
        prev = cur;
    }
    return out;
}

}  // namespace xbic
