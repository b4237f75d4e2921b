#include "xbic/pipeline.hpp"
#include "xbic/report.hpp"
#include "xbic/simulate.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using namespace xbic;

namespace {

XBicorrReport two_window_report(double p_first, double p_second) {
    XBicorrReport r;
    r.x_name = "a";
    r.y_name = "b";
    r.plan = plan_windows(100, 0.4);
    r.plan.window_count = 2;
    r.alpha = 0.05;
    r.directions = {Direction::XonY};
    for (Index k = 0; k < 2; ++k) {
        WindowTestResult w;
        w.window_index = k;
        w.first = k * r.plan.window_length;
        w.stats.h_xxy_pvalue = k == 0 ? p_first : p_second;
        r.per_window.push_back(w);
    }
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void collect_numbers(const nlohmann::ordered_json& j, std::set<std::string>& out) {
    if (j.is_number()) {
        out.insert(format_number(j.get<double>()));
    } else if (j.is_structured()) {
        for (const auto& v : j) collect_numbers(v, out);
    }
}

class SmallMarket : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("xbic_report_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        const auto series = sim::synthetic_market(700, 99);
        std::ofstream out(dir_ / "market.csv");
        out << "date,OIL,USDMXN,IPC\n";
        char buf[32];
        for (std::size_t i = 0; i < 700; ++i) {
            out << to_iso(series[0].dates[i]);
            for (const auto& s : series) {
                std::snprintf(buf, sizeof buf, "%.10g", s.values(static_cast<Index>(i)));
                out << ',' << buf;
            }
            out << '\n';
        }
        config_.inputs = {dir_ / "market.csv"};
        config_.price_columns = {"OIL", "USDMXN", "IPC"};
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
    PipelineConfig config_;
};

}  // namespace

TEST(FormatNumber, SixSignificantDigits) {
    EXPECT_EQ(format_number(0.99), "0.99");
    EXPECT_EQ(format_number(1699.891234), "1699.89");
    EXPECT_EQ(format_number(152.0), "152");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1.23456789e-7), "1.23457e-07");
    EXPECT_DOUBLE_EQ(round_sig6(3.14159265), 3.14159);
}

TEST(PlotCsv, NoSignificantWindows) {
    std::ostringstream out;
    write_plot_csv(two_window_report(0.5, 0.2), out);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "window_start,window_end,direction,one_minus_p,significant");
    EXPECT_EQ(lines[1], "0,5,x-on-y,0.5,false");
    EXPECT_EQ(lines[2], "6,11,x-on-y,0.8,false");
}

TEST(PlotCsv, SignificantWindowAtOnePercent) {
    std::ostringstream out;
    write_plot_csv(two_window_report(0.5, 0.01), out);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[2], "6,11,x-on-y,0.99,true");
}

TEST(PlotCsv, DegenerateWindowLeavesValueEmpty) {
    auto report = two_window_report(0.5, 0.01);
    report.per_window[0].degenerate = true;
    std::ostringstream out;
    write_plot_csv(report, out);
    EXPECT_EQ(lines_of(out.str())[1], "0,5,x-on-y,,false");
}

TEST_F(SmallMarket, OutputsAreByteIdenticalAcrossRuns) {
    config_.out_dir = dir_ / "run1";
    write_outputs(analyze(config_), config_);
    config_.out_dir = dir_ / "run2";
    config_.threads = 3;
    write_outputs(analyze(config_), config_);
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir_ / "run1")) {
        const auto other = dir_ / "run2" / entry.path().filename();
        ASSERT_TRUE(fs::exists(other)) << other;
        if (entry.path().filename() == "report.json") {
            // The config block records the output directory and thread count; compare the rest.
            auto a = nlohmann::ordered_json::parse(slurp(entry.path()));
            auto b = nlohmann::ordered_json::parse(slurp(other));
            a.erase("config");
            b.erase("config");
            EXPECT_EQ(a.dump(), b.dump());
        } else {
            EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
        }
        ++compared;
    }
    EXPECT_GT(compared, 10u);
}

TEST_F(SmallMarket, EpochCsvHasOneRowPerWindowAndDirection) {
    config_.out_dir = dir_ / "out";
    const auto result = analyze(config_);
    write_outputs(result, config_);
    ASSERT_EQ(result.pairs.size(), 3u);
    for (const auto& pair : result.pairs) {
        const auto path = dir_ / "out" / ("epochs_" + pair.x_name + "-" + pair.y_name + ".csv");
        const auto lines = lines_of(slurp(path));
        EXPECT_EQ(static_cast<Index>(lines.size()) - 1, pair.report.plan.window_count * 2);
        EXPECT_TRUE(fs::exists(dir_ / "out" / ("epochs_" + pair.x_name + "-" + pair.y_name + ".svg")));
    }
}

TEST_F(SmallMarket, EveryTableNumberIsInTheJsonReport) {
    const auto result = analyze(config_);
    std::set<std::string> known;
    collect_numbers(to_json(result, config_), known);
    const std::string text = render_tables(result);
    const std::regex number(R"((^|[^A-Za-z0-9_.])(-?[0-9]+(\.[0-9]+)?(e[-+][0-9]+)?)(%?))");
    std::size_t checked = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
        if ((*it)[5].length() > 0) continue;  // "1%, 5%, 10%" column labels
        const std::string token = (*it)[2];
        EXPECT_TRUE(known.count(token)) << "table value " << token << " missing from the JSON report";
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

TEST_F(SmallMarket, CriticalValuesAppearVerbatim) {
    const auto text = render_unitroot_table(analyze(config_));
    EXPECT_NE(text.find("-3.96, -3.41, -3.12"), std::string::npos);
}
