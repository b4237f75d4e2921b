#pragma once

#include "xbic/error.hpp"
#include "xbic/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xbic {

/// Which (r, s) lag pairs enter the cross-bicorrelation portmanteau.
enum class ExclusionRule {
    /// Drop s = 0 and s = r: L(2L - 1) pairs.
    DofConsistent,
    /// Drop r - s in {-1, 0, 1}: 2L^2 - 2L + 1 pairs.
    PaperBand,
};

/// x-on-y scans x(t) x(t+r) y(t+s); y-on-x swaps the roles.
enum class Direction { XonY, YonX };

/// How two directions combine into one significance flag per window.
enum class Combination { Either, Both };

std::string to_string(ExclusionRule rule);
std::string to_string(Direction direction);
std::string to_string(Combination combination);

struct WindowPlan {
    Index total_n = 0;
    double exponent = 0.4;
    /// floor(total_n^c)
    Index window_length = 0;
    /// floor(total_n / window_length); the trailing partial window is dropped.
    Index window_count = 0;
    /// max(2, floor(window_length^c)) unless overridden.
    Index lag_depth = 0;
    ExclusionRule rule = ExclusionRule::DofConsistent;
};

/// Throws BadExponent for c outside (0, 0.5) or a window too short for its
/// lag depth, SeriesTooShort for total_n < 64.
WindowPlan plan_windows(Index total_n, double c, std::optional<Index> lag_depth = std::nullopt,
                        ExclusionRule rule = ExclusionRule::DofConsistent);

/// Lag pairs (r, s), r in 1..L, s in -L..L, kept by the rule. Row-major in (r, s).
std::vector<std::pair<Index, Index>> included_lag_pairs(Index lag_depth, ExclusionRule rule);

/// Window rescaled to mean 0 and sample standard deviation 1 (divisor n - 1).
template <typename Derived>
Vector standardize_window(const Eigen::MatrixBase<Derived>& w) {
    const Index n = w.size();
    if (n < 2) throw Error(Errc::SeriesTooShort, "window needs at least two observations");
    const double mean = w.mean();
    const Eigen::ArrayXd centered = w.derived().array() - mean;
    const double sd = std::sqrt(centered.square().sum() / static_cast<double>(n - 1));
    const double scale = w.cwiseAbs().maxCoeff();
    if (!(sd > 16.0 * std::numeric_limits<double>::epsilon() * scale)) {
        throw Error(Errc::DegenerateWindow, "window has zero variance");
    }
    return (centered / sd).matrix();
}

/// C_xy(r) = (n - r)^-1 sum_t x(t) y(t + r).
template <typename DX, typename DY>
double cross_corr(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y, Index r) {
    const Index n = x.size();
    if (y.size() != n) throw Error(Errc::DimensionMismatch, "windows differ in length");
    if (r < 1 || r >= n) throw Error(Errc::LagTooLarge, "cross-correlation lag out of range");
    return x.head(n - r).dot(y.tail(n - r)) / static_cast<double>(n - r);
}

/// Number of t with 0 <= t, t + r, t + s < n.
inline Index bicorr_addends(Index n, Index r, Index s) {
    const Index lo = std::max<Index>(0, -s);
    const Index hi = std::min(n - 1 - r, n - 1 - s);
    return std::max<Index>(0, hi - lo + 1);
}

/**
 * C_xxy(r, s): mean of x(t) x(t + r) y(t + s) over every t where all three
 * indices fall inside the window. The divisor is the addend count, which is
 * n - max(r, s) for s >= 0 and n - r - |s| for s < 0.
 */
template <typename DX, typename DY>
double cross_bicorr(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y, Index r, Index s) {
    const Index n = x.size();
    if (y.size() != n) throw Error(Errc::DimensionMismatch, "windows differ in length");
    if (r < 0) throw Error(Errc::LagTooLarge, "cross-bicorrelation lag r must be >= 0");
    const Index count = bicorr_addends(n, r, s);
    if (count <= 0) throw Error(Errc::LagTooLarge, "no addends for lag pair");
    const Index lo = std::max<Index>(0, -s);
    return (x.segment(lo, count).array() * x.segment(lo + r, count).array() *
            y.segment(lo + s, count).array())
               .sum() /
           static_cast<double>(count);
}

/// Portmanteau statistics of one window in one direction.
struct WindowStatistics {
    double h_xy = 0.0;
    int h_xy_dof = 0;
    double h_xy_pvalue = 1.0;
    double h_xxy = 0.0;
    int h_xxy_dof = 0;
    double h_xxy_pvalue = 1.0;
};

/// Standardizes both windows, then H_xy = sum_r (n - r) C_xy(r)^2 over r = 1..L
/// and H_xxy = sum (addends) C_xxy(r, s)^2 over the included lag pairs, each
/// referred to chi-square with as many degrees of freedom as summed terms.
WindowStatistics window_test(const Vector& x_window, const Vector& y_window, Index lag_depth,
                             ExclusionRule rule);

struct WindowTestResult {
    Index window_index = 0;
    Index first = 0;  // offset of the window's first observation
    std::optional<Date> start_date;
    std::optional<Date> end_date;
    Direction direction = Direction::XonY;
    bool degenerate = false;
    WindowStatistics stats;
};

struct XBicorrConfig {
    double exponent = 0.4;
    double alpha = 0.05;
    ExclusionRule rule = ExclusionRule::DofConsistent;
    std::vector<Direction> directions{Direction::XonY, Direction::YonX};
    Combination combination = Combination::Either;
    std::optional<Index> lag_depth;
    /// Worker threads for the window loop; output does not depend on it.
    unsigned threads = 1;
};

struct Epoch {
    Index window_index = 0;
    std::optional<Date> start_date;
    std::optional<Date> end_date;
    double one_minus_p = 0.0;
};

struct XBicorrReport {
    std::string x_name;
    std::string y_name;
    WindowPlan plan;
    double alpha = 0.05;
    Combination combination = Combination::Either;
    std::vector<Direction> directions;
    /// Window-major: each window's entries in `directions` order.
    std::vector<WindowTestResult> per_window;
    Index degenerate_windows = 0;
    /// Windows whose H_xxy rejects under the combination rule.
    Index significant_count = 0;
    /// significant_count over the non-degenerate windows.
    double significant_fraction = 0.0;
    /// Per direction, indexed like `directions`.
    std::vector<Index> significant_by_direction;
    Index significant_either = 0;
    Index significant_both = 0;
    /// Windows where the second-order H_xy rejects in any requested direction.
    Index significant_xy_count = 0;
    double pearson = 0.0;
    /// Significant windows with the combined 1 - p.
    std::vector<Epoch> epochs;
};

/// Windowed cross-correlation / cross-bicorrelation scan over two residual
/// series. dates may be empty; otherwise it must match the series length.
XBicorrReport run_xbicorr(const Vector& x, const Vector& y, const std::vector<Date>& dates,
                          const XBicorrConfig& config, std::string x_name = "x",
                          std::string y_name = "y");

}  // namespace xbic
