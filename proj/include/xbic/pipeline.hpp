#pragma once

#include "xbic/bicorr.hpp"
#include "xbic/ingest.hpp"
#include "xbic/nonlin.hpp"
#include "xbic/prewhiten.hpp"
#include "xbic/summary.hpp"
#include "xbic/unitroot.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace xbic {

enum class Stage { Describe, UnitRoot, Nonlin, XBicorr };

struct PipelineConfig {
    std::vector<std::filesystem::path> inputs;
    CsvSchema schema;
    /// Price columns read from every input file.
    std::vector<std::string> price_columns{"price"};
    /// Empty means every pair of series in input order.
    std::vector<std::pair<std::string, std::string>> pairs;
    double exponent = 0.4;
    double alpha = 0.05;
    std::vector<int> lags = kDefaultNonlinLags;
    std::vector<BdsConfig> bds_grid = kDefaultBdsGrid;
    /// Largest AR / VAR order considered by BIC.
    Index pmax = 8;
    std::optional<Index> adf_max_lags;
    AdfSpec adf_spec = AdfSpec::ConstantTrend;
    ExclusionRule rule = ExclusionRule::DofConsistent;
    std::vector<Direction> directions{Direction::XonY, Direction::YonX};
    Combination combination = Combination::Either;
    std::optional<Index> lag_depth;
    std::set<Stage> stages{Stage::Describe, Stage::UnitRoot, Stage::Nonlin, Stage::XBicorr};
    std::filesystem::path out_dir;
    bool write_json = true;
    bool write_csv = true;
    bool write_table = true;
    bool write_svg = true;
    unsigned threads = 1;

    /// Throws BadExponent / InvalidArgument.
    void validate() const;
};

struct NonlinRow {
    std::string test;       // "McLeod-Li", "Engle LM", "BDS"
    std::string parameter;  // "Lag 5", "m = 2, eps = 0.5s"
    TestResult result;
};

struct SeriesAnalysis {
    std::string name;
    PriceSeries prices;
    ReturnSeries returns;
    std::optional<SummaryStats> summary;
    std::optional<AdfResult> adf;
    std::optional<ArFit> ar;
    std::vector<NonlinRow> nonlin;
};

struct PairAnalysis {
    std::string x_name;
    std::string y_name;
    VarFit var;
    XBicorrReport report;
    double pearson_returns = 0.0;
    double pearson_residuals = 0.0;
};

struct PipelineResult {
    Index price_observations = 0;
    std::optional<Date> first_date;
    std::optional<Date> last_date;
    std::vector<std::pair<std::string, std::size_t>> dropped_dates;
    std::size_t dropped_rows = 0;
    std::vector<SeriesAnalysis> series;
    std::vector<PairAnalysis> pairs;
};

/// Loads, aligns and analyses the configured inputs without touching the output directory.
PipelineResult analyze(const PipelineConfig& config);

/// Series label for a price column: the column name when there is one input
/// file, the file stem when there is one column, "stem:column" otherwise.
std::string series_label(const PipelineConfig& config, const std::filesystem::path& file,
                         const std::string& column);

}  // namespace xbic
