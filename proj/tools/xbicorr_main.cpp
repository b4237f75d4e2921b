// xbicorr: returns, descriptive statistics, unit-root and nonlinearity tests,
// and the windowed cross-bicorrelation scan from the command line.

#include "xbic/error.hpp"
#include "xbic/pipeline.hpp"
#include "xbic/report.hpp"
#include "xbic/simulate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

struct RawOptions {
    std::vector<std::string> inputs;
    std::string date_col = "date";
    std::vector<std::string> price_cols{"price"};
    std::string date_format = "%Y-%m-%d";
    std::string delimiter = ",";
    bool lenient = false;
    std::vector<std::string> pairs;
    double c = 0.4;
    double alpha = 0.05;
    std::vector<int> lags{5, 15, 20};
    std::vector<std::string> bds_grid{"2:0.5", "3:1.0", "4:1.5"};
    std::string exclusion = "dof";
    std::vector<std::string> directions{"xy", "yx"};
    std::string combine = "either";
    int pmax = 8;
    int adf_max_lags = -1;
    int lag_depth = 0;
    std::string out;
    std::vector<std::string> formats{"json", "csv", "table"};
    bool no_svg = false;
    unsigned threads = 1;
};

void add_common_options(CLI::App& cmd, RawOptions& o) {
    cmd.add_option("--input", o.inputs, "Price CSV file (repeatable)")->required();
    cmd.add_option("--date-col", o.date_col, "Date column name")->capture_default_str();
    cmd.add_option("--price-col", o.price_cols, "Price column name (repeatable)")->capture_default_str();
    cmd.add_option("--date-format", o.date_format, "strptime pattern for dates")->capture_default_str();
    cmd.add_option("--delimiter", o.delimiter, "Field delimiter")->capture_default_str();
    cmd.add_flag("--lenient", o.lenient, "Drop rows with blank or bad prices instead of failing");
    cmd.add_option("--pmax", o.pmax, "Largest AR / VAR order tried by BIC")->capture_default_str();
    cmd.add_option("--out", o.out, "Output directory for json / csv / svg files");
    cmd.add_option("--format", o.formats, "Comma list of json, csv, table")->delimiter(',')->capture_default_str();
    cmd.add_flag("--no-svg", o.no_svg, "Skip the epoch stem plots");
    cmd.add_option("--threads", o.threads, "Worker threads for the window scan")->capture_default_str();
}

void add_nonlin_options(CLI::App& cmd, RawOptions& o) {
    cmd.add_option("--lags", o.lags, "McLeod-Li / Engle LM lags")->delimiter(',')->capture_default_str();
    cmd.add_option("--bds-grid", o.bds_grid, "BDS m:eps-multiplier list")->delimiter(',')->capture_default_str();
}

void add_unitroot_options(CLI::App& cmd, RawOptions& o) {
    cmd.add_option("--adf-maxlag", o.adf_max_lags, "ADF maximum augmentation lag (default: Schwert bound)");
}

void add_xbicorr_options(CLI::App& cmd, RawOptions& o) {
    cmd.add_option("--pair", o.pairs, "Series pair A,B (repeatable; default: all pairs)");
    cmd.add_option("--c", o.c, "Window exponent in (0, 0.5)")->capture_default_str();
    cmd.add_option("--alpha", o.alpha, "Significance level")->capture_default_str();
    cmd.add_option("--exclusion", o.exclusion, "Lag-pair exclusion rule")
        ->check(CLI::IsMember({"paper", "dof"}))
        ->capture_default_str();
    cmd.add_option("--directions", o.directions, "Comma list of xy, yx")
        ->delimiter(',')
        ->check(CLI::IsMember({"xy", "yx"}))
        ->capture_default_str();
    cmd.add_option("--combine", o.combine, "Direction combination")
        ->check(CLI::IsMember({"either", "both"}))
        ->capture_default_str();
    cmd.add_option("--lag-depth", o.lag_depth, "Lag depth inside each window (default: from c)");
}

xbic::PipelineConfig to_config(const RawOptions& o, std::set<xbic::Stage> stages) {
    using xbic::Errc;
    using xbic::Error;
    xbic::PipelineConfig cfg;
    for (const auto& in : o.inputs) cfg.inputs.emplace_back(in);
    cfg.schema.date_column = o.date_col;
    cfg.schema.date_format = o.date_format;
    if (o.delimiter.size() != 1) throw Error(Errc::InvalidArgument, "--delimiter must be one character");
    cfg.schema.delimiter = o.delimiter.front();
    cfg.schema.lenient = o.lenient;
    cfg.price_columns = o.price_cols;
    for (const auto& p : o.pairs) {
        const auto comma = p.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == p.size()) {
            throw Error(Errc::InvalidArgument, "--pair expects A,B, got '" + p + "'");
        }
        cfg.pairs.emplace_back(p.substr(0, comma), p.substr(comma + 1));
    }
    cfg.exponent = o.c;
    cfg.alpha = o.alpha;
    cfg.lags = o.lags;
    cfg.bds_grid.clear();
    for (const auto& g : o.bds_grid) {
        const auto colon = g.find(':');
        xbic::BdsConfig b;
        try {
            if (colon == std::string::npos) throw std::invalid_argument(g);
            b.embedding = std::stoi(g.substr(0, colon));
            b.epsilon_multiplier = std::stod(g.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error(Errc::InvalidArgument, "--bds-grid expects m:eps entries, got '" + g + "'");
        }
        cfg.bds_grid.push_back(b);
    }
    cfg.pmax = o.pmax;
    if (o.adf_max_lags >= 0) cfg.adf_max_lags = o.adf_max_lags;
    cfg.rule = o.exclusion == "paper" ? xbic::ExclusionRule::PaperBand : xbic::ExclusionRule::DofConsistent;
    cfg.directions.clear();
    for (const auto& d : o.directions) {
        cfg.directions.push_back(d == "xy" ? xbic::Direction::XonY : xbic::Direction::YonX);
    }
    cfg.combination = o.combine == "both" ? xbic::Combination::Both : xbic::Combination::Either;
    if (o.lag_depth != 0) cfg.lag_depth = o.lag_depth;
    cfg.stages = std::move(stages);
    cfg.out_dir = o.out;
    cfg.write_json = cfg.write_csv = cfg.write_table = false;
    for (const auto& f : o.formats) {
        if (f == "json") cfg.write_json = true;
        else if (f == "csv") cfg.write_csv = true;
        else if (f == "table") cfg.write_table = true;
        else throw Error(Errc::InvalidArgument, "--format accepts json, csv, table; got '" + f + "'");
    }
    cfg.write_svg = !o.no_svg;
    cfg.threads = o.threads;
    return cfg;
}

int run_analysis(const RawOptions& o, std::set<xbic::Stage> stages) {
    auto cfg = to_config(o, std::move(stages));
    const auto result = xbic::analyze(cfg);
    if (cfg.write_table) std::cout << xbic::render_tables(result);
    if (!cfg.out_dir.empty()) {
        xbic::write_outputs(result, cfg);
    }
    return 0;
}

int run_simulate(const std::string& out_dir, std::uint64_t seed, std::size_t prices) {
    namespace fs = std::filesystem;
    if (prices < 3) throw xbic::Error(xbic::Errc::InvalidArgument, "--n must be at least 3");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw xbic::Error(xbic::Errc::IoError, "cannot create " + out_dir);
    const auto series = xbic::sim::synthetic_market(prices, seed);
    const fs::path path = fs::path(out_dir) / "synthetic.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw xbic::Error(xbic::Errc::IoError, "cannot write " + path.string());
    out << "date";
    for (const auto& s : series) out << ',' << s.name;
    out << '\n';
    char buf[32];
    for (std::size_t i = 0; i < prices; ++i) {
        out << xbic::to_iso(series.front().dates[i]);
        for (const auto& s : series) {
            std::snprintf(buf, sizeof buf, "%.10g", s.values(static_cast<xbic::Index>(i)));
            out << ',' << buf;
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw xbic::Error(xbic::Errc::IoError, "failed writing " + path.string());
    std::cout << "wrote " << path.generic_string() << " (" << prices << " rows, seed " << seed << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Windowed cross-bicorrelation analysis of financial return series"};
    app.set_config("--config", "", "TOML/INI file with option values");
    app.require_subcommand(1);

    RawOptions o;
    using xbic::Stage;
    auto* describe = app.add_subcommand("describe", "Summary statistics of returns");
    add_common_options(*describe, o);

    auto* unitroot = app.add_subcommand("unitroot", "ADF test on returns");
    add_common_options(*unitroot, o);
    add_unitroot_options(*unitroot, o);

    auto* nonlin = app.add_subcommand("nonlin", "AR pre-whitening and McLeod-Li / Engle LM / BDS tests");
    add_common_options(*nonlin, o);
    add_nonlin_options(*nonlin, o);

    auto* xbicorr = app.add_subcommand("xbicorr", "VAR pre-whitening and the windowed cross-bicorrelation scan");
    add_common_options(*xbicorr, o);
    add_xbicorr_options(*xbicorr, o);

    auto* pipeline = app.add_subcommand("pipeline", "Every stage end to end");
    add_common_options(*pipeline, o);
    add_unitroot_options(*pipeline, o);
    add_nonlin_options(*pipeline, o);
    add_xbicorr_options(*pipeline, o);

    std::string sim_out;
    std::uint64_t seed = 20140130;
    std::size_t sim_prices = 4278;
    auto* simulate = app.add_subcommand("simulate", "Write the synthetic three-series price dataset");
    simulate->add_option("--out", sim_out, "Output directory")->required();
    simulate->add_option("--seed", seed, "Random seed")->capture_default_str();
    simulate->add_option("--n", sim_prices, "Number of price rows")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*simulate) return run_simulate(sim_out, seed, sim_prices);
        if (*describe) return run_analysis(o, {Stage::Describe});
        if (*unitroot) return run_analysis(o, {Stage::UnitRoot});
        if (*nonlin) return run_analysis(o, {Stage::Nonlin});
        if (*xbicorr) return run_analysis(o, {Stage::XBicorr});
        if (pipeline->parsed()) {
            if (o.out.empty()) o.out = "xbicorr-out";
            return run_analysis(o, {Stage::Describe, Stage::UnitRoot, Stage::Nonlin, Stage::XBicorr});
        }
    } catch (const xbic::Error& e) {
        std::cerr << "xbicorr: " << e.what() << '\n';
        switch (e.category()) {
            case xbic::ErrorCategory::Config: return kExitConfig;
            case xbic::ErrorCategory::Data: return kExitData;
            case xbic::ErrorCategory::Numerical: return kExitNumerical;
        }
    } catch (const std::exception& e) {
        std::cerr << "xbicorr: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitConfig;
}
