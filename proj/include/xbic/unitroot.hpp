#pragma once

#include "xbic/statmath.hpp"
#include "xbic/types.hpp"

#include <array>
#include <optional>

namespace xbic {

enum class AdfSpec { Constant, ConstantTrend };

/// Large-sample Dickey-Fuller critical values at kReportLevels.
constexpr std::array<double, 3> adf_critical_values(AdfSpec spec) noexcept {
    if (spec == AdfSpec::ConstantTrend) return {-3.96, -3.41, -3.12};
    return {-3.43, -2.86, -2.57};
}

struct AdfResult {
    /// t-ratio on the lagged level.
    double statistic = 0.0;
    Index lags_used = 0;
    AdfSpec spec = AdfSpec::ConstantTrend;
    std::array<double, 3> critical_values{};
    /// reject_at[i] == statistic < critical_values[i].
    std::array<bool, 3> reject_at{};
    /// Regression at the selected lag order; column order is
    /// [1, (t), y_{t-1}, dy_{t-1}, ..., dy_{t-p}].
    OlsFit regression;
};

/// floor(12 (n / 100)^(1/4)).
Index schwert_max_lags(Index n);

/**
 * Augmented Dickey-Fuller test.
 *
 * The augmentation order is picked by BIC over 0..max_lags with every
 * candidate fitted on the same effective sample, then the chosen order is
 * refitted on all observations it can use. max_lags defaults to the Schwert
 * bound.
 */
AdfResult adf(const Vector& y, std::optional<Index> max_lags = std::nullopt,
              AdfSpec spec = AdfSpec::ConstantTrend);

}  // namespace xbic
