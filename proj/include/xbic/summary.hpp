#pragma once

#include "xbic/types.hpp"

namespace xbic {

struct SummaryStats {
    Index n = 0;
    double mean = 0.0;
    /// Sample standard deviation (divisor n - 1).
    double sd = 0.0;
    /// m3 / m2^(3/2) with central moments over n.
    double skewness = 0.0;
    /// Raw kurtosis m4 / m2^2 (3 for a Gaussian).
    double kurtosis = 0.0;
    TestResult jarque_bera;
};

/// (n / 6) (S^2 + (K - 3)^2 / 4).
double jarque_bera_statistic(Index n, double skewness, double kurtosis);

SummaryStats describe(const Vector& r);

double pearson_corr(const Vector& x, const Vector& y);

}  // namespace xbic
