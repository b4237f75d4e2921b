#pragma once

#include "xbic/types.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace xbic {

struct PriceSeries {
    std::string name;
    std::vector<Date> dates;
    Vector values;

    Index size() const noexcept { return values.size(); }
};

/// Returns dated by the later observation of each consecutive price pair.
struct ReturnSeries {
    std::string name;
    std::vector<Date> dates;
    Vector values;

    Index size() const noexcept { return values.size(); }
};

struct AlignedPanel {
    std::vector<Date> dates;
    /// Column order follows the input order of align().
    std::vector<std::string> names;
    std::map<std::string, Vector> columns;
    /// Rows discarded from each input because their date was not shared.
    std::map<std::string, std::size_t> dropped;

    PriceSeries series(const std::string& name) const;
};

struct CsvSchema {
    std::string date_column = "date";
    std::string price_column = "price";
    /// strptime-style pattern.
    std::string date_format = "%Y-%m-%d";
    char delimiter = ',';
    /// Lenient mode drops rows with a blank or unparseable price instead of failing.
    bool lenient = false;
};

struct LoadReport {
    std::size_t rows_read = 0;
    std::size_t rows_dropped = 0;
};

Date parse_date(const std::string& text, const std::string& format);
std::string to_iso(const Date& date);

/// Loads one price column. Throws FileNotFound, MalformedRow, NonPositivePrice
/// or UnsortedDates.
PriceSeries load_price_csv(const std::filesystem::path& path, const CsvSchema& schema,
                           LoadReport* report = nullptr);

/// Loads several price columns that share the file's date column.
std::vector<PriceSeries> load_price_csv(const std::filesystem::path& path, const CsvSchema& schema,
                                        std::span<const std::string> price_columns,
                                        LoadReport* report = nullptr);

/// Restricts every series to the dates they all share.
AlignedPanel align(std::span<const PriceSeries> series);

/// 100 * (ln p[i+1] - ln p[i]).
ReturnSeries to_returns(const PriceSeries& prices);

}  // namespace xbic
