#pragma once

#include <Eigen/Dense>

#include <array>
#include <chrono>
#include <cstddef>
#include <string>

namespace xbic {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

using Date = std::chrono::year_month_day;

/// Significance levels reported for every hypothesis test.
inline constexpr std::array<double, 3> kReportLevels{0.01, 0.05, 0.10};

/// Uniform record for a hypothesis test outcome.
struct TestResult {
    std::string name;
    double statistic = 0.0;
    /// Degrees of freedom, or the lag / embedding parameter for tests whose
    /// null distribution is not chi-square.
    double dof = 0.0;
    double p_value = 1.0;
    /// Indexed like kReportLevels.
    std::array<bool, 3> reject_at{};

    bool rejects(double alpha) const noexcept { return p_value < alpha; }
};

/// Fills reject_at from p_value.
TestResult make_test_result(std::string name, double statistic, double dof, double p_value);

}  // namespace xbic
