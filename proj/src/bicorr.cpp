#include "xbic/bicorr.hpp"

#include "xbic/statmath.hpp"
#include "xbic/summary.hpp"

#include <algorithm>
#include <thread>

namespace xbic {

std::string to_string(ExclusionRule rule) {
    return rule == ExclusionRule::DofConsistent ? "dof" : "paper";
}

std::string to_string(Direction direction) {
    return direction == Direction::XonY ? "x-on-y" : "y-on-x";
}

std::string to_string(Combination combination) {
    return combination == Combination::Either ? "either" : "both";
}

namespace {

// floor() of a real power that should land on an integer exactly.
Index floor_power(double base, double exponent) {
    return static_cast<Index>(std::floor(std::pow(base, exponent) + 1e-9));
}

}  // namespace

WindowPlan plan_windows(Index total_n, double c, std::optional<Index> lag_depth, ExclusionRule rule) {
    if (!(c > 0.0 && c < 0.5)) {
        throw Error(Errc::BadExponent, "window exponent c must lie in (0, 0.5), got " + std::to_string(c));
    }
    if (total_n < 64) {
        throw Error(Errc::SeriesTooShort, "windowed scan needs at least 64 observations, got " +
                                              std::to_string(total_n));
    }
    WindowPlan plan;
    plan.total_n = total_n;
    plan.exponent = c;
    plan.rule = rule;
    plan.window_length = floor_power(static_cast<double>(total_n), c);
    plan.window_count = plan.window_length > 0 ? total_n / plan.window_length : 0;
    if (lag_depth) {
        if (*lag_depth < 2) throw Error(Errc::InvalidArgument, "lag depth must be >= 2");
        plan.lag_depth = *lag_depth;
    } else {
        plan.lag_depth = std::max<Index>(2, floor_power(static_cast<double>(plan.window_length), c));
    }
    if (2 * plan.lag_depth >= plan.window_length) {
        throw Error(Errc::BadExponent, "window length " + std::to_string(plan.window_length) +
                                           " is too short for lag depth " +
                                           std::to_string(plan.lag_depth) + "; raise c");
    }
    return plan;
}

std::vector<std::pair<Index, Index>> included_lag_pairs(Index lag_depth, ExclusionRule rule) {
    std::vector<std::pair<Index, Index>> pairs;
    for (Index r = 1; r <= lag_depth; ++r) {
        for (Index s = -lag_depth; s <= lag_depth; ++s) {
            const bool excluded = rule == ExclusionRule::DofConsistent ? (s == 0 || s == r)
                                                                      : (r - s >= -1 && r - s <= 1);
            if (!excluded) pairs.emplace_back(r, s);
        }
    }
    return pairs;
}

WindowStatistics window_test(const Vector& x_window, const Vector& y_window, Index lag_depth,
                             ExclusionRule rule) {
    const Index n = x_window.size();
    if (y_window.size() != n) throw Error(Errc::DimensionMismatch, "windows differ in length");
    if (lag_depth < 2) throw Error(Errc::InvalidArgument, "lag depth must be >= 2");
    if (2 * lag_depth >= n) throw Error(Errc::LagTooLarge, "lag depth must be below half the window");

    const Vector x = standardize_window(x_window);
    const Vector y = standardize_window(y_window);

    WindowStatistics out;
    for (Index r = 1; r <= lag_depth; ++r) {
        const double c = cross_corr(x, y, r);
        out.h_xy += static_cast<double>(n - r) * c * c;
    }
    out.h_xy_dof = static_cast<int>(lag_depth);

    // x(t) x(t + r) for each r, reused across every s.
    const auto pairs = included_lag_pairs(lag_depth, rule);
    Index current_r = 0;
    Vector products;
    for (const auto& [r, s] : pairs) {
        if (r != current_r) {
            products = x.head(n - r).cwiseProduct(x.tail(n - r));
            current_r = r;
        }
        const Index count = bicorr_addends(n, r, s);
        const Index lo = std::max<Index>(0, -s);
        const double sum = products.segment(lo, count).dot(y.segment(lo + s, count));
        out.h_xxy += sum * sum / static_cast<double>(count);
    }
    out.h_xxy_dof = static_cast<int>(pairs.size());

    out.h_xy_pvalue = chi2_sf(out.h_xy, out.h_xy_dof);
    out.h_xxy_pvalue = chi2_sf(out.h_xxy, out.h_xxy_dof);
    return out;
}

XBicorrReport run_xbicorr(const Vector& x, const Vector& y, const std::vector<Date>& dates,
                          const XBicorrConfig& config, std::string x_name, std::string y_name) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "residual series differ in length");
    if (!dates.empty() && static_cast<Index>(dates.size()) != x.size()) {
        throw Error(Errc::DimensionMismatch, "date vector does not match the series length");
    }
    if (config.directions.empty()) throw Error(Errc::InvalidArgument, "no test direction requested");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw Error(Errc::InvalidArgument, "alpha must lie in (0, 1)");
    }

    XBicorrReport report;
    report.x_name = std::move(x_name);
    report.y_name = std::move(y_name);
    report.plan = plan_windows(x.size(), config.exponent, config.lag_depth, config.rule);
    report.alpha = config.alpha;
    report.combination = config.combination;
    report.directions = config.directions;

    const WindowPlan& plan = report.plan;
    const Index nw = plan.window_length;
    const std::size_t n_dir = config.directions.size();
    report.per_window.resize(static_cast<std::size_t>(plan.window_count) * n_dir);

    auto evaluate = [&](Index k) {
        const Index first = k * nw;
        const Vector xw = x.segment(first, nw);
        const Vector yw = y.segment(first, nw);
        for (std::size_t d = 0; d < n_dir; ++d) {
            WindowTestResult& w = report.per_window[static_cast<std::size_t>(k) * n_dir + d];
            w.window_index = k;
            w.first = first;
            w.direction = config.directions[d];
            if (!dates.empty()) {
                w.start_date = dates[static_cast<std::size_t>(first)];
                w.end_date = dates[static_cast<std::size_t>(first + nw - 1)];
            }
            try {
                w.stats = w.direction == Direction::XonY ? window_test(xw, yw, plan.lag_depth, plan.rule)
                                                         : window_test(yw, xw, plan.lag_depth, plan.rule);
            } catch (const Error& e) {
                if (e.code() != Errc::DegenerateWindow) throw;
                w.degenerate = true;
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(plan.window_count)));
    if (threads == 1) {
        for (Index k = 0; k < plan.window_count; ++k) evaluate(k);
    } else {
        std::vector<std::exception_ptr> failures(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (Index k = t; k < plan.window_count; k += threads) evaluate(k);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& f : failures) {
            if (f) std::rethrow_exception(f);
        }
    }

    report.significant_by_direction.assign(n_dir, 0);
    for (Index k = 0; k < plan.window_count; ++k) {
        const auto* row = &report.per_window[static_cast<std::size_t>(k) * n_dir];
        if (row[0].degenerate) {
            ++report.degenerate_windows;
            continue;
        }
        double p_min = 1.0;
        double p_max = 0.0;
        bool xy = false;
        for (std::size_t d = 0; d < n_dir; ++d) {
            const double p = row[d].stats.h_xxy_pvalue;
            p_min = std::min(p_min, p);
            p_max = std::max(p_max, p);
            if (p < config.alpha) ++report.significant_by_direction[d];
            xy = xy || row[d].stats.h_xy_pvalue < config.alpha;
        }
        if (xy) ++report.significant_xy_count;
        if (p_min < config.alpha) ++report.significant_either;
        if (p_max < config.alpha) ++report.significant_both;

        const double p = config.combination == Combination::Either ? p_min : p_max;
        if (p < config.alpha) {
            ++report.significant_count;
            report.epochs.push_back(Epoch{k, row[0].start_date, row[0].end_date, 1.0 - p});
        }
    }
    const Index usable = plan.window_count - report.degenerate_windows;
    report.significant_fraction =
        usable > 0 ? static_cast<double>(report.significant_count) / static_cast<double>(usable) : 0.0;
    report.pearson = pearson_corr(x, y);
    return report;
}

}  // namespace xbic
