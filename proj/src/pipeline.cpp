#include "xbic/pipeline.hpp"

#include "xbic/error.hpp"

#include <algorithm>
#include <cstdio>

namespace xbic {

void PipelineConfig::validate() const {
    if (!(exponent > 0.0 && exponent < 0.5)) {
        throw Error(Errc::BadExponent,
                    "--c must lie in the open interval (0, 0.5), got " + std::to_string(exponent));
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(Errc::InvalidArgument, "--alpha must lie in (0, 1)");
    }
    if (inputs.empty()) throw Error(Errc::InvalidArgument, "at least one --input is required");
    if (price_columns.empty()) throw Error(Errc::InvalidArgument, "at least one --price-col is required");
    if (pmax < 0) throw Error(Errc::InvalidArgument, "--pmax must be >= 0");
    if (adf_max_lags && *adf_max_lags < 0) throw Error(Errc::InvalidArgument, "ADF max lags must be >= 0");
    for (int q : lags) {
        if (q < 1) throw Error(Errc::InvalidArgument, "--lags entries must be >= 1");
    }
    for (const auto& b : bds_grid) {
        if (b.embedding < 2 || !(b.epsilon_multiplier > 0.0)) {
            throw Error(Errc::InvalidArgument, "--bds-grid entries need m >= 2 and eps > 0");
        }
    }
    if (directions.empty()) throw Error(Errc::InvalidArgument, "no test direction selected");
    if (lag_depth && *lag_depth < 2) throw Error(Errc::InvalidArgument, "--lag-depth must be >= 2");
    for (const auto& [a, b] : pairs) {
        if (a == b) throw Error(Errc::InvalidArgument, "--pair needs two different series: " + a);
    }
    if (threads == 0) throw Error(Errc::InvalidArgument, "--threads must be >= 1");
}

std::string series_label(const PipelineConfig& config, const std::filesystem::path& file,
                         const std::string& column) {
    if (config.inputs.size() == 1) return column;
    if (config.price_columns.size() == 1) return file.stem().string();
    return file.stem().string() + ":" + column;
}

namespace {

std::string bds_label(const BdsConfig& b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "m = %d, eps = %gs", b.embedding, b.epsilon_multiplier);
    return buf;
}

// Residual dates for a model of the given order fitted on the returns.
std::vector<Date> tail_dates(const std::vector<Date>& dates, Index order) {
    return {dates.begin() + order, dates.end()};
}

}  // namespace

PipelineResult analyze(const PipelineConfig& config) {
    config.validate();

    std::vector<PriceSeries> loaded;
    PipelineResult result;
    for (const auto& file : config.inputs) {
        LoadReport lr;
        auto columns = load_price_csv(file, config.schema, config.price_columns, &lr);
        result.dropped_rows += lr.rows_dropped;
        for (auto& s : columns) {
            if (s.size() == 0) {
                throw Error(Errc::SeriesTooShort, file.string() + ": no usable rows for column '" +
                                                      s.name + "'");
            }
            s.name = series_label(config, file, s.name);
            loaded.push_back(std::move(s));
        }
    }

    std::vector<PriceSeries> prices;
    if (loaded.size() == 1) {
        prices = std::move(loaded);
    } else {
        const AlignedPanel panel = align(loaded);
        for (const auto& name : panel.names) {
            prices.push_back(panel.series(name));
            result.dropped_dates.emplace_back(name, panel.dropped.at(name));
        }
    }
    result.price_observations = prices.front().size();
    if (!prices.front().dates.empty()) {
        result.first_date = prices.front().dates.front();
        result.last_date = prices.front().dates.back();
    }

    const bool want_series = config.stages.contains(Stage::Describe) ||
                             config.stages.contains(Stage::UnitRoot) ||
                             config.stages.contains(Stage::Nonlin);
    for (auto& p : prices) {
        SeriesAnalysis s;
        s.name = p.name;
        s.returns = to_returns(p);
        s.prices = std::move(p);
        if (want_series) {
            if (config.stages.contains(Stage::Describe)) s.summary = describe(s.returns.values);
            if (config.stages.contains(Stage::UnitRoot)) {
                s.adf = adf(s.returns.values, config.adf_max_lags, config.adf_spec);
            }
            if (config.stages.contains(Stage::Nonlin)) {
                const Index order = select_ar_order(s.returns.values, config.pmax);
                s.ar = fit_ar(s.returns.values, order);
                for (int q : config.lags) {
                    s.nonlin.push_back({"McLeod-Li", "Lag " + std::to_string(q), mcleod_li(s.ar->residuals, q)});
                }
                for (int q : config.lags) {
                    s.nonlin.push_back({"Engle LM", "Lag " + std::to_string(q), engle_lm(s.ar->residuals, q)});
                }
                for (const auto& b : config.bds_grid) {
                    s.nonlin.push_back({"BDS", bds_label(b), bds(s.ar->residuals, b)});
                }
            }
        }
        result.series.push_back(std::move(s));
    }

    if (!config.stages.contains(Stage::XBicorr)) return result;

    auto find = [&](const std::string& name) -> const SeriesAnalysis& {
        const auto it = std::find_if(result.series.begin(), result.series.end(),
                                     [&](const SeriesAnalysis& s) { return s.name == name; });
        if (it == result.series.end()) {
            throw Error(Errc::InvalidArgument, "--pair names unknown series '" + name + "'");
        }
        return *it;
    };

    auto pairs = config.pairs;
    if (pairs.empty()) {
        for (std::size_t i = 0; i < result.series.size(); ++i) {
            for (std::size_t j = i + 1; j < result.series.size(); ++j) {
                pairs.emplace_back(result.series[i].name, result.series[j].name);
            }
        }
    }
    if (pairs.empty()) {
        throw Error(Errc::InvalidArgument, "cross-bicorrelation needs at least two series");
    }

    XBicorrConfig xc;
    xc.exponent = config.exponent;
    xc.alpha = config.alpha;
    xc.rule = config.rule;
    xc.directions = config.directions;
    xc.combination = config.combination;
    xc.lag_depth = config.lag_depth;
    xc.threads = config.threads;

    for (const auto& [xn, yn] : pairs) {
        const SeriesAnalysis& sx = find(xn);
        const SeriesAnalysis& sy = find(yn);
        PairAnalysis pa;
        pa.x_name = xn;
        pa.y_name = yn;
        const Index order = select_var_order(sx.returns.values, sy.returns.values, config.pmax);
        pa.var = fit_var(sx.returns.values, sy.returns.values, order);
        pa.report = run_xbicorr(pa.var.residuals_x, pa.var.residuals_y,
                                tail_dates(sx.returns.dates, order), xc, xn, yn);
        pa.pearson_returns = pearson_corr(sx.returns.values, sy.returns.values);
        pa.pearson_residuals = pa.report.pearson;
        result.pairs.push_back(std::move(pa));
    }
    return result;
}

}  // namespace xbic
