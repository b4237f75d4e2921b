#pragma once

#include "xbic/bicorr.hpp"
#include "xbic/pipeline.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace xbic {

/// Every reported number goes through these: 6 significant digits.
std::string format_number(double value);
double round_sig6(double value);

nlohmann::ordered_json to_json(const XBicorrReport& report);
nlohmann::ordered_json to_json(const PipelineResult& result, const PipelineConfig& config);

/// Summary statistics block.
std::string render_summary_table(const PipelineResult& result);
/// ADF block, including the critical values line.
std::string render_unitroot_table(const PipelineResult& result);
/// p-value grid of the nonlinearity battery; columns are series.
std::string render_nonlin_table(const PipelineResult& result);
/// Windows total, window length, pair, significant windows and correlations.
std::string render_xbicorr_table(const PipelineResult& result);
std::string render_tables(const PipelineResult& result);

/// One row per window and direction:
/// window_start,window_end,direction,one_minus_p,significant
void write_plot_csv(const XBicorrReport& report, std::ostream& out);

/// Stem plot of 1 - p by window start for the significant windows.
std::string render_epoch_svg(const XBicorrReport& report);

/// Writes the epoch CSV and, when requested, the SVG next to it. Throws IoError.
void emit_plot_data(const XBicorrReport& report, const std::filesystem::path& csv_path,
                    bool with_svg);

/// Writes report.json, the per-table CSVs, per-pair window / epoch files,
/// per-series price and return files and report.txt, as selected by config.
void write_outputs(const PipelineResult& result, const PipelineConfig& config);

}  // namespace xbic
