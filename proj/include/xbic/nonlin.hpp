#pragma once

#include "xbic/types.hpp"

#include <vector>

namespace xbic {

struct BdsConfig {
    int embedding = 2;
    /// Distance threshold as a multiple of the series' sample standard deviation.
    double epsilon_multiplier = 0.5;
    /// Smallest series length accepted; set to 0 to disable the guard.
    Index min_length = 200;
};

/// Default McLeod-Li / Engle LM lag grid.
inline const std::vector<int> kDefaultNonlinLags{5, 15, 20};

/// Default BDS (embedding, epsilon multiplier) grid.
inline const std::vector<BdsConfig> kDefaultBdsGrid{{2, 0.5}, {3, 1.0}, {4, 1.5}};

/// Ljung-Box portmanteau on squared residuals, chi2(q).
TestResult mcleod_li(const Vector& e, int lags);

/// n_eff R^2 from regressing e_t^2 on a constant and q of its lags, chi2(q).
TestResult engle_lm(const Vector& e, int lags);

/**
 * Correlation integral C_m(eps): the share of pairs of m-histories
 * (x_s..x_{s+m-1}), (x_t..x_{t+m-1}), s < t, within eps of each other in the
 * max norm. N_m = n - m + 1 histories.
 */
double correlation_integral(const Vector& x, int embedding, double eps);

/// Intermediate quantities of the BDS statistic.
struct BdsComponents {
    Index n = 0;
    int embedding = 0;
    double epsilon = 0.0;
    /// C_1 over the full sample; the plug-in c of the variance.
    double c1 = 0.0;
    /// Triple-count k over the full sample.
    double k = 0.0;
    /// C_m over the n - m + 1 embedded histories.
    double cm = 0.0;
    /// C_1 over the last n - m + 1 observations, matched to cm.
    double c1_trimmed = 0.0;
    /// Asymptotic variance of sqrt(n - m + 1) (cm - c1_trimmed^m).
    double variance = 0.0;
    double statistic = 0.0;
};

/// BDS pieces for an absolute eps. No length guard.
BdsComponents bds_components(const Vector& x, int embedding, double eps);

/// BDS test with eps = multiplier * sd(e); two-sided normal p-value.
TestResult bds(const Vector& e, const BdsConfig& cfg);

}  // namespace xbic
