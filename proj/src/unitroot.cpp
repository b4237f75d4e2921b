#include "xbic/unitroot.hpp"

#include "xbic/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace xbic {

namespace {

// Rows cover t = first..n-1 (0-based indices into y).
OlsFit adf_regression(const Vector& y, Index lags, Index first, AdfSpec spec) {
    const Index n = y.size();
    const Index rows = n - first;
    const Index det = spec == AdfSpec::ConstantTrend ? 2 : 1;
    Matrix X(rows, det + 1 + lags);
    Vector dy(rows);
    for (Index i = 0; i < rows; ++i) {
        const Index t = first + i;
        dy(i) = y(t) - y(t - 1);
        X(i, 0) = 1.0;
        if (det == 2) X(i, 1) = static_cast<double>(t);
        X(i, det) = y(t - 1);
        for (Index j = 1; j <= lags; ++j) X(i, det + j) = y(t - j) - y(t - j - 1);
    }
    return ols(X, dy);
}

}  // namespace

Index schwert_max_lags(Index n) {
    return static_cast<Index>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

AdfResult adf(const Vector& y, std::optional<Index> max_lags, AdfSpec spec) {
    const Index n = y.size();
    const Index pmax = max_lags.value_or(schwert_max_lags(n));
    if (pmax < 0) {
        throw Error(Errc::InvalidArgument, "max_lags must be non-negative");
    }
    if (n <= pmax + 10) {
        throw Error(Errc::SeriesTooShort, "ADF needs more than max_lags + 10 observations");
    }

    Index best = 0;
    double best_bic = std::numeric_limits<double>::infinity();
    for (Index p = 0; p <= pmax; ++p) {
        const double bic = adf_regression(y, p, pmax + 1, spec).bic;
        if (bic < best_bic) {
            best_bic = bic;
            best = p;
        }
    }

    AdfResult out;
    out.spec = spec;
    out.lags_used = best;
    out.regression = adf_regression(y, best, best + 1, spec);
    const Index level = spec == AdfSpec::ConstantTrend ? 2 : 1;
    out.statistic = out.regression.coefficients(level) / out.regression.standard_errors(level);
    out.critical_values = adf_critical_values(spec);
    for (std::size_t i = 0; i < out.critical_values.size(); ++i) {
        out.reject_at[i] = out.statistic < out.critical_values[i];
    }
    return out;
}

}  // namespace xbic
