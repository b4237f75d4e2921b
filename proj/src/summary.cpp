#include "xbic/summary.hpp"

#include "xbic/error.hpp"
#include "xbic/statmath.hpp"

#include <algorithm>
#include <cmath>

namespace xbic {

TestResult make_test_result(std::string name, double statistic, double dof, double p_value) {
    TestResult t;
    t.name = std::move(name);
    t.statistic = statistic;
    t.dof = dof;
    t.p_value = std::clamp(p_value, 0.0, 1.0);
    for (std::size_t i = 0; i < kReportLevels.size(); ++i) t.reject_at[i] = t.p_value < kReportLevels[i];
    return t;
}

double jarque_bera_statistic(Index n, double skewness, double kurtosis) {
    const double excess = kurtosis - 3.0;
    return static_cast<double>(n) / 6.0 * (skewness * skewness + 0.25 * excess * excess);
}

SummaryStats describe(const Vector& r) {
    const Index n = r.size();
    if (n < 4) {
        throw Error(Errc::SeriesTooShort, "describe needs at least 4 observations");
    }
    if (!r.allFinite()) {
        throw Error(Errc::DomainError, "non-finite value in series");
    }
    SummaryStats s;
    s.n = n;
    s.mean = r.mean();
    const Eigen::ArrayXd d = r.array() - s.mean;
    const Eigen::ArrayXd d2 = d.square();
    const double dn = static_cast<double>(n);
    const double m2 = d2.sum() / dn;
    if (!(m2 > 0.0)) {
        throw Error(Errc::DegenerateSeries, "series has zero variance");
    }
    const double m3 = (d2 * d).sum() / dn;
    const double m4 = d2.square().sum() / dn;
    s.sd = std::sqrt(d2.sum() / (dn - 1.0));
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    const double jb = jarque_bera_statistic(n, s.skewness, s.kurtosis);
    s.jarque_bera = make_test_result("Jarque-Bera", jb, 2.0, chi2_sf(jb, 2));
    return s;
}

double pearson_corr(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) {
        throw Error(Errc::DimensionMismatch, "correlation inputs differ in length");
    }
    if (x.size() < 3) {
        throw Error(Errc::SeriesTooShort, "correlation needs at least 3 observations");
    }
    const Eigen::ArrayXd dx = x.array() - x.mean();
    const Eigen::ArrayXd dy = y.array() - y.mean();
    const double sxx = dx.square().sum();
    const double syy = dy.square().sum();
    if (!(sxx > 0.0) || !(syy > 0.0)) {
        throw Error(Errc::DegenerateSeries, "correlation input has zero variance");
    }
    return std::clamp((dx * dy).sum() / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace xbic
