#include "xbic/report.hpp"

#include "xbic/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace xbic {

using Json = nlohmann::ordered_json;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    // Avoid "-0" in reports.
    if (std::string(buf) == "-0") return "0";
    return buf;
}

double round_sig6(double value) {
    if (!std::isfinite(value)) return value;
    return std::strtod(format_number(value).c_str(), nullptr);
}

namespace {

Json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round_sig6(v);
}

Json date_json(const std::optional<Date>& d) {
    if (!d) return nullptr;
    return to_iso(*d);
}

Json levels_json(const std::array<double, 3>& values) {
    Json j = Json::object();
    for (std::size_t i = 0; i < kReportLevels.size(); ++i) j[format_number(kReportLevels[i])] = num(values[i]);
    return j;
}

Json levels_json(const std::array<bool, 3>& flags) {
    Json j = Json::object();
    for (std::size_t i = 0; i < kReportLevels.size(); ++i) j[format_number(kReportLevels[i])] = flags[i];
    return j;
}

Json test_json(const TestResult& t) {
    return Json{{"name", t.name},
                {"statistic", num(t.statistic)},
                {"dof", num(t.dof)},
                {"p_value", num(t.p_value)},
                {"reject_at", levels_json(t.reject_at)}};
}

Json vector_json(const Vector& v) {
    Json j = Json::array();
    for (Index i = 0; i < v.size(); ++i) j.push_back(num(v(i)));
    return j;
}

std::string percent(Index count, double fraction) {
    return std::to_string(count) + " (" + format_number(100.0 * fraction) + " %)";
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string spec_name(AdfSpec spec) {
    return spec == AdfSpec::ConstantTrend ? "constant+trend" : "constant";
}

std::string pair_label(const XBicorrReport& r) { return r.x_name + "-" + r.y_name; }

std::string file_safe(std::string s) {
    for (char& c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
    }
    return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(Errc::IoError, "failed writing " + path.string());
}

}  // namespace

Json to_json(const XBicorrReport& r) {
    Json by_dir = Json::object();
    for (std::size_t d = 0; d < r.directions.size(); ++d) {
        by_dir[to_string(r.directions[d])] = r.significant_by_direction[d];
    }
    const auto pairs = included_lag_pairs(r.plan.lag_depth, r.plan.rule);

    Json windows = Json::array();
    for (const auto& w : r.per_window) {
        windows.push_back(Json{{"index", w.window_index},
                               {"first", w.first},
                               {"start", date_json(w.start_date)},
                               {"end", date_json(w.end_date)},
                               {"direction", to_string(w.direction)},
                               {"degenerate", w.degenerate},
                               {"h_xy", w.degenerate ? Json() : num(w.stats.h_xy)},
                               {"h_xy_dof", w.stats.h_xy_dof},
                               {"h_xy_p", w.degenerate ? Json() : num(w.stats.h_xy_pvalue)},
                               {"h_xxy", w.degenerate ? Json() : num(w.stats.h_xxy)},
                               {"h_xxy_dof", w.stats.h_xxy_dof},
                               {"h_xxy_p", w.degenerate ? Json() : num(w.stats.h_xxy_pvalue)}});
    }
    Json epochs = Json::array();
    for (const auto& e : r.epochs) {
        epochs.push_back(Json{{"index", e.window_index},
                              {"start", date_json(e.start_date)},
                              {"end", date_json(e.end_date)},
                              {"one_minus_p", num(e.one_minus_p)}});
    }

    return Json{{"x", r.x_name},
                {"y", r.y_name},
                {"plan",
                 {{"total_n", r.plan.total_n},
                  {"c", num(r.plan.exponent)},
                  {"window_length", r.plan.window_length},
                  {"window_count", r.plan.window_count},
                  {"lag_depth", r.plan.lag_depth},
                  {"exclusion", to_string(r.plan.rule)},
                  {"dof_xy", r.plan.lag_depth},
                  {"dof_xxy", pairs.size()}}},
                {"alpha", num(r.alpha)},
                {"combination", to_string(r.combination)},
                {"significant_count", r.significant_count},
                {"significant_fraction", num(r.significant_fraction)},
                {"significant_percent", num(100.0 * r.significant_fraction)},
                {"significant_by_direction", by_dir},
                {"significant_either", r.significant_either},
                {"significant_both", r.significant_both},
                {"significant_xy_count", r.significant_xy_count},
                {"degenerate_windows", r.degenerate_windows},
                {"pearson_residuals", num(r.pearson)},
                {"epochs", epochs},
                {"windows", windows}};
}

Json to_json(const PipelineResult& result, const PipelineConfig& config) {
    Json cfg{{"inputs", Json::array()},
             {"date_column", config.schema.date_column},
             {"date_format", config.schema.date_format},
             {"price_columns", config.price_columns},
             {"lenient", config.schema.lenient},
             {"c", num(config.exponent)},
             {"alpha", num(config.alpha)},
             {"lags", config.lags},
             {"bds_grid", Json::array()},
             {"pmax", config.pmax},
             {"exclusion", to_string(config.rule)},
             {"combination", to_string(config.combination)},
             {"directions", Json::array()}};
    for (const auto& p : config.inputs) cfg["inputs"].push_back(p.generic_string());
    for (const auto& b : config.bds_grid) {
        cfg["bds_grid"].push_back(Json{{"m", b.embedding}, {"eps", num(b.epsilon_multiplier)}});
    }
    for (auto d : config.directions) cfg["directions"].push_back(to_string(d));

    Json dropped = Json::object();
    for (const auto& [name, count] : result.dropped_dates) dropped[name] = count;

    Json series = Json::array();
    for (const auto& s : result.series) {
        Json js{{"name", s.name},
                {"prices", s.prices.size()},
                {"returns", s.returns.size()}};
        if (s.summary) {
            const auto& m = *s.summary;
            js["summary"] = Json{{"observations", m.n},
                                 {"mean", num(m.mean)},
                                 {"sd", num(m.sd)},
                                 {"skewness", num(m.skewness)},
                                 {"kurtosis", num(m.kurtosis)},
                                 {"jarque_bera", test_json(m.jarque_bera)}};
        }
        if (s.adf) {
            const auto& a = *s.adf;
            js["adf"] = Json{{"statistic", num(a.statistic)},
                             {"lags", a.lags_used},
                             {"spec", spec_name(a.spec)},
                             {"critical_values", levels_json(a.critical_values)},
                             {"reject_at", levels_json(a.reject_at)}};
        }
        if (s.ar) {
            js["ar"] = Json{{"order", s.ar->order},
                            {"intercept", num(s.ar->intercept)},
                            {"coefficients", vector_json(s.ar->coefficients)},
                            {"bic", num(s.ar->bic)},
                            {"residuals", s.ar->residuals.size()}};
            Json rows = Json::array();
            for (const auto& row : s.nonlin) {
                Json t = test_json(row.result);
                t["test"] = row.test;
                t["parameter"] = row.parameter;
                rows.push_back(t);
            }
            js["nonlinearity"] = rows;
        }
        series.push_back(js);
    }

    Json pairs = Json::array();
    for (const auto& p : result.pairs) {
        Json lags = Json::array();
        for (const auto& a : p.var.lag_matrices) {
            lags.push_back(Json{{num(a(0, 0)), num(a(0, 1))}, {num(a(1, 0)), num(a(1, 1))}});
        }
        Json jp{{"pair", p.x_name + "-" + p.y_name},
                {"var",
                 {{"order", p.var.order},
                  {"bic", num(p.var.bic)},
                  {"intercepts", {num(p.var.intercepts(0)), num(p.var.intercepts(1))}},
                  {"lag_matrices", lags}}},
                {"correlation_returns", num(p.pearson_returns)},
                {"correlation_residuals", num(p.pearson_residuals)}};
        jp["xbicorr"] = to_json(p.report);
        pairs.push_back(jp);
    }

    return Json{{"tool", "xbicorr"},
                {"config", cfg},
                {"sample",
                 {{"price_observations", result.price_observations},
                  {"first_date", date_json(result.first_date)},
                  {"last_date", date_json(result.last_date)},
                  {"dropped_dates", dropped},
                  {"dropped_rows", result.dropped_rows}}},
                {"series", series},
                {"pairs", pairs}};
}

std::string render_summary_table(const PipelineResult& result) {
    std::ostringstream out;
    out << "Summary statistics of returns\n";
    constexpr std::size_t w0 = 22;
    constexpr std::size_t w = 14;
    out << pad("Statistic", w0);
    for (const auto& s : result.series) out << pad(s.name, w);
    out << '\n';
    auto row = [&](const std::string& label, auto get) {
        out << pad(label, w0);
        for (const auto& s : result.series) out << pad(s.summary ? get(*s.summary) : "-", w);
        out << '\n';
    };
    row("Observations", [](const SummaryStats& m) { return std::to_string(m.n); });
    row("Mean", [](const SummaryStats& m) { return format_number(m.mean); });
    row("Standard deviation", [](const SummaryStats& m) { return format_number(m.sd); });
    row("Skewness", [](const SummaryStats& m) { return format_number(m.skewness); });
    row("Kurtosis", [](const SummaryStats& m) { return format_number(m.kurtosis); });
    row("Jarque-Bera", [](const SummaryStats& m) { return format_number(m.jarque_bera.statistic); });
    row("Jarque-Bera p-value", [](const SummaryStats& m) { return format_number(m.jarque_bera.p_value); });
    return out.str();
}

std::string render_unitroot_table(const PipelineResult& result) {
    std::ostringstream out;
    std::optional<AdfSpec> spec;
    for (const auto& s : result.series) {
        if (s.adf) spec = s.adf->spec;
    }
    out << "ADF unit-root test on returns (" << (spec ? spec_name(*spec) : "n/a") << ")\n";
    out << pad("Series", 14) << pad("Statistic", 14) << pad("Lags", 6) << pad("1%", 5) << pad("5%", 5)
        << "10%\n";
    for (const auto& s : result.series) {
        if (!s.adf) continue;
        out << pad(s.name, 14) << pad(format_number(s.adf->statistic), 14)
            << pad(std::to_string(s.adf->lags_used), 6);
        for (bool r : s.adf->reject_at) out << pad(r ? "*" : "", 5);
        out << '\n';
    }
    if (spec) {
        const auto cv = adf_critical_values(*spec);
        out << "* rejects the unit root. Critical values (1%, 5%, 10%): " << format_number(cv[0]) << ", "
            << format_number(cv[1]) << ", " << format_number(cv[2]) << '\n';
    }
    return out.str();
}

std::string render_nonlin_table(const PipelineResult& result) {
    std::ostringstream out;
    out << "Nonlinearity tests on AR residuals (p-values)\n";
    constexpr std::size_t w0 = 24;
    constexpr std::size_t w = 14;
    out << pad("Test", w0);
    for (const auto& s : result.series) out << pad(s.name, w);
    out << '\n' << pad("", w0);
    for (const auto& s : result.series) {
        out << pad(s.ar ? "AR(" + std::to_string(s.ar->order) + ")" : "-", w);
    }
    out << '\n';
    const SeriesAnalysis* first = nullptr;
    for (const auto& s : result.series) {
        if (s.ar) {
            first = &s;
            break;
        }
    }
    if (!first) return out.str();
    std::string current;
    for (std::size_t i = 0; i < first->nonlin.size(); ++i) {
        const auto& row = first->nonlin[i];
        if (row.test != current) {
            out << row.test << " test\n";
            current = row.test;
        }
        out << pad("  " + row.parameter, w0);
        for (const auto& s : result.series) {
            out << pad(s.ar && i < s.nonlin.size() ? format_number(s.nonlin[i].result.p_value) : "-", w);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_xbicorr_table(const PipelineResult& result) {
    std::ostringstream out;
    out << "Cross-bicorrelation test results\n";
    out << pad("Windows total", 15) << pad("Window", 8) << pad("Series", 22)
        << pad("Significant xy windows", 26) << pad("Correlation (returns)", 23)
        << "Correlation (residuals)\n";
    for (const auto& p : result.pairs) {
        const auto& r = p.report;
        out << pad(std::to_string(r.plan.window_count), 15) << pad(std::to_string(r.plan.window_length), 8)
            << pad(pair_label(r), 22) << pad(percent(r.significant_count, r.significant_fraction), 26)
            << pad(format_number(p.pearson_returns), 23) << format_number(p.pearson_residuals) << '\n';
    }
    for (const auto& p : result.pairs) {
        const auto& r = p.report;
        out << "  " << pair_label(r) << ": VAR(" << p.var.order << "), lag depth " << r.plan.lag_depth
            << ", dof " << r.plan.lag_depth << " / " << included_lag_pairs(r.plan.lag_depth, r.plan.rule).size()
            << " (" << to_string(r.plan.rule) << " exclusion), alpha " << format_number(r.alpha) << ", "
            << to_string(r.combination) << ":";
        for (std::size_t d = 0; d < r.directions.size(); ++d) {
            out << ' ' << to_string(r.directions[d]) << ' ' << r.significant_by_direction[d];
        }
        out << ", either " << r.significant_either << ", both " << r.significant_both << ", second-order "
            << r.significant_xy_count << ", degenerate " << r.degenerate_windows << '\n';
    }
    return out.str();
}

std::string render_tables(const PipelineResult& result) {
    std::string out;
    bool any_summary = false;
    bool any_adf = false;
    bool any_ar = false;
    for (const auto& s : result.series) {
        any_summary = any_summary || s.summary.has_value();
        any_adf = any_adf || s.adf.has_value();
        any_ar = any_ar || s.ar.has_value();
    }
    auto add = [&](const std::string& block) {
        if (!out.empty()) out += '\n';
        out += block;
    };
    if (any_summary) add(render_summary_table(result));
    if (any_adf) add(render_unitroot_table(result));
    if (any_ar) add(render_nonlin_table(result));
    if (!result.pairs.empty()) add(render_xbicorr_table(result));
    return out;
}

void write_plot_csv(const XBicorrReport& report, std::ostream& out) {
    out << "window_start,window_end,direction,one_minus_p,significant\n";
    for (const auto& w : report.per_window) {
        const std::string start = w.start_date ? to_iso(*w.start_date) : std::to_string(w.first);
        const std::string end = w.end_date ? to_iso(*w.end_date)
                                           : std::to_string(w.first + report.plan.window_length - 1);
        out << start << ',' << end << ',' << to_string(w.direction) << ',';
        if (w.degenerate) {
            out << ",false\n";
            continue;
        }
        const double p = w.stats.h_xxy_pvalue;
        out << format_number(1.0 - p) << ',' << (p < report.alpha ? "true" : "false") << '\n';
    }
}

std::string render_epoch_svg(const XBicorrReport& report) {
    constexpr double width = 800.0;
    constexpr double height = 300.0;
    constexpr double left = 60.0;
    constexpr double right = 20.0;
    constexpr double top = 30.0;
    constexpr double bottom = 40.0;
    const double y_min = std::max(0.0, std::floor((1.0 - report.alpha) * 10.0 - 1e-9) / 10.0);
    const double count = static_cast<double>(std::max<Index>(1, report.plan.window_count));
    auto sx = [&](double k) { return left + (width - left - right) * (k + 0.5) / count; };
    auto sy = [&](double v) { return top + (height - top - bottom) * (1.0 - (v - y_min) / (1.0 - y_min)); };

    std::ostringstream out;
    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"300\" viewBox=\"0 0 800 300\">\n";
    out << "<rect width=\"800\" height=\"300\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << pair_label(report) << ": 1 - p of significant cross-bicorrelation windows</text>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left,
                  height - bottom, width - right, height - bottom);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left, top,
                  left, height - bottom);
    out << buf;
    for (int i = 0; i <= 4; ++i) {
        const double v = y_min + (1.0 - y_min) * i / 4.0;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"10\" "
                      "text-anchor=\"end\">%.3f</text>\n",
                      left - 4.0, sy(v) + 3.0, v);
        out << buf;
    }
    for (const auto& e : report.epochs) {
        const double x = sx(static_cast<double>(e.window_index));
        const double v = std::max(y_min, e.one_minus_p);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"steelblue\"/>"
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"steelblue\"/>\n",
                      x, height - bottom, x, sy(v), x, sy(v));
        out << buf;
    }
    const auto& windows = report.per_window;
    if (!windows.empty() && windows.front().start_date && windows.back().end_date) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"10\">%s</text>\n"
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"10\" "
                      "text-anchor=\"end\">%s</text>\n",
                      left, height - bottom + 16.0, to_iso(*windows.front().start_date).c_str(), width - right,
                      height - bottom + 16.0, to_iso(*windows.back().end_date).c_str());
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

void emit_plot_data(const XBicorrReport& report, const std::filesystem::path& csv_path, bool with_svg) {
    {
        auto out = open_output(csv_path);
        write_plot_csv(report, out);
        finish(out, csv_path);
    }
    if (with_svg) {
        auto svg_path = csv_path;
        svg_path.replace_extension(".svg");
        auto out = open_output(svg_path);
        out << render_epoch_svg(report);
        finish(out, svg_path);
    }
}

void write_outputs(const PipelineResult& result, const PipelineConfig& config) {
    namespace fs = std::filesystem;
    const fs::path dir = config.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());

    auto write_text = [](const fs::path& path, const std::string& text) {
        auto out = open_output(path);
        out << text;
        finish(out, path);
    };

    if (config.write_json) write_text(dir / "report.json", to_json(result, config).dump(2) + "\n");
    if (config.write_table) write_text(dir / "report.txt", render_tables(result));

    if (config.write_csv) {
        {
            for (const auto& s : result.series) {
                std::ostringstream one;
                one << "date,price,return\n";
                for (Index i = 0; i < s.prices.size(); ++i) {
                    one << to_iso(s.prices.dates[static_cast<std::size_t>(i)]) << ','
                        << format_number(s.prices.values(i)) << ',';
                    if (i > 0) one << format_number(s.returns.values(i - 1));
                    one << '\n';
                }
                write_text(dir / ("series_" + file_safe(s.name) + ".csv"), one.str());
            }
        }
        bool any_summary = false;
        bool any_adf = false;
        bool any_ar = false;
        for (const auto& s : result.series) {
            any_summary = any_summary || s.summary.has_value();
            any_adf = any_adf || s.adf.has_value();
            any_ar = any_ar || s.ar.has_value();
        }
        if (any_summary) {
            std::ostringstream out;
            out << "series,observations,mean,sd,skewness,kurtosis,jarque_bera,jarque_bera_p\n";
            for (const auto& s : result.series) {
                if (!s.summary) continue;
                const auto& m = *s.summary;
                out << s.name << ',' << m.n << ',' << format_number(m.mean) << ',' << format_number(m.sd) << ','
                    << format_number(m.skewness) << ',' << format_number(m.kurtosis) << ','
                    << format_number(m.jarque_bera.statistic) << ',' << format_number(m.jarque_bera.p_value)
                    << '\n';
            }
            write_text(dir / "table1_summary.csv", out.str());
        }
        if (any_adf) {
            std::ostringstream out;
            out << "series,statistic,lags,spec,cv_1pct,cv_5pct,cv_10pct,reject_1pct,reject_5pct,reject_10pct\n";
            for (const auto& s : result.series) {
                if (!s.adf) continue;
                const auto& a = *s.adf;
                out << s.name << ',' << format_number(a.statistic) << ',' << a.lags_used << ','
                    << spec_name(a.spec);
                for (double cv : a.critical_values) out << ',' << format_number(cv);
                for (bool r : a.reject_at) out << ',' << (r ? "true" : "false");
                out << '\n';
            }
            write_text(dir / "table2_adf.csv", out.str());
        }
        if (any_ar) {
            std::ostringstream out;
            out << "series,ar_order,test,parameter,statistic,p_value\n";
            for (const auto& s : result.series) {
                if (!s.ar) continue;
                for (const auto& row : s.nonlin) {
                    out << s.name << ',' << s.ar->order << ',' << row.test << ",\"" << row.parameter << "\","
                        << format_number(row.result.statistic) << ',' << format_number(row.result.p_value)
                        << '\n';
                }
            }
            write_text(dir / "table3_nonlinearity.csv", out.str());
        }
        if (!result.pairs.empty()) {
            std::ostringstream out;
            out << "windows_total,window_length,lag_depth,pair,var_order,significant,significant_percent,"
                   "significant_either,significant_both,significant_xy,degenerate,correlation_returns,"
                   "correlation_residuals\n";
            for (const auto& p : result.pairs) {
                const auto& r = p.report;
                out << r.plan.window_count << ',' << r.plan.window_length << ',' << r.plan.lag_depth << ','
                    << pair_label(r) << ',' << p.var.order << ',' << r.significant_count << ','
                    << format_number(100.0 * r.significant_fraction) << ',' << r.significant_either << ','
                    << r.significant_both << ',' << r.significant_xy_count << ',' << r.degenerate_windows
                    << ',' << format_number(p.pearson_returns) << ',' << format_number(p.pearson_residuals)
                    << '\n';
            }
            write_text(dir / "table4_xbicorr.csv", out.str());

            for (const auto& p : result.pairs) {
                const auto& r = p.report;
                std::ostringstream w;
                w << "index,start,end,direction,h_xy,h_xy_dof,h_xy_p,h_xxy,h_xxy_dof,h_xxy_p,degenerate\n";
                for (const auto& row : r.per_window) {
                    w << row.window_index << ','
                      << (row.start_date ? to_iso(*row.start_date) : std::to_string(row.first)) << ','
                      << (row.end_date ? to_iso(*row.end_date)
                                       : std::to_string(row.first + r.plan.window_length - 1))
                      << ',' << to_string(row.direction) << ',';
                    if (row.degenerate) {
                        w << ",,,,,,true\n";
                        continue;
                    }
                    w << format_number(row.stats.h_xy) << ',' << row.stats.h_xy_dof << ','
                      << format_number(row.stats.h_xy_pvalue) << ',' << format_number(row.stats.h_xxy) << ','
                      << row.stats.h_xxy_dof << ',' << format_number(row.stats.h_xxy_pvalue) << ",false\n";
                }
                write_text(dir / ("windows_" + file_safe(pair_label(r)) + ".csv"), w.str());
            }
        }
    }

    for (const auto& p : result.pairs) {
        if (config.write_csv || config.write_svg) {
            emit_plot_data(p.report, dir / ("epochs_" + file_safe(pair_label(p.report)) + ".csv"),
                           config.write_svg);
        }
    }
}

}  // namespace xbic
