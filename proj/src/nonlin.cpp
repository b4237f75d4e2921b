#include "xbic/nonlin.hpp"

#include "xbic/error.hpp"
#include "xbic/statmath.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace xbic {

namespace {

void require_lags(Index n, int lags, const char* test) {
    if (lags < 1) {
        throw Error(Errc::InvalidArgument, std::string(test) + " needs at least one lag");
    }
    if (n <= lags + 10) {
        throw Error(Errc::SeriesTooShort, std::string(test) + " needs more than lags + 10 observations");
    }
}

// Squared residuals, rejecting a series whose squares do not vary.
Eigen::ArrayXd squared_checked(const Vector& e, const char* test) {
    if (!e.allFinite()) throw Error(Errc::DomainError, std::string(test) + ": non-finite residual");
    Eigen::ArrayXd a = e.array().square();
    const double scale = a.abs().maxCoeff();
    const double spread = (a - a.mean()).abs().maxCoeff();
    if (!(spread > 1e-12 * scale)) {
        throw Error(Errc::DegenerateSeries, std::string(test) + ": squared residuals are constant");
    }
    return a;
}

// Pair counts along each diagonal d = t - s of the distance-indicator matrix,
// with a running count of consecutive hits giving the m-history products.
struct PairCounts {
    std::int64_t all = 0;       // pairs within eps, full sample
    std::int64_t trimmed = 0;   // pairs within eps, both indices >= m - 1
    std::int64_t histories = 0; // m-history pairs within eps
    std::vector<std::int64_t> row;  // off-diagonal hits per index
};

PairCounts count_pairs(const Vector& x, int m, double eps, bool want_rows) {
    const Index n = x.size();
    PairCounts out;
    if (want_rows) out.row.assign(static_cast<std::size_t>(n), 0);
    const double* v = x.data();
    for (Index d = 1; d < n; ++d) {
        int run = 0;
        for (Index i = 0; i + d < n; ++i) {
            if (std::abs(v[i] - v[i + d]) <= eps) {
                ++run;
                ++out.all;
                if (i >= m - 1) ++out.trimmed;
                if (run >= m) ++out.histories;
                if (want_rows) {
                    ++out.row[static_cast<std::size_t>(i)];
                    ++out.row[static_cast<std::size_t>(i + d)];
                }
            } else {
                run = 0;
            }
        }
    }
    return out;
}

double pair_share(std::int64_t count, Index size) {
    const double s = static_cast<double>(size);
    return 2.0 * static_cast<double>(count) / (s * (s - 1.0));
}

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw Error(Errc::DomainError, "distance threshold must be finite and > 0");
    }
}

}  // namespace

TestResult mcleod_li(const Vector& e, int lags) {
    const Index n = e.size();
    require_lags(n, lags, "McLeod-Li");
    const Eigen::ArrayXd a = squared_checked(e, "McLeod-Li");
    const Eigen::ArrayXd d = a - a.mean();
    const double denom = d.square().sum();
    const double dn = static_cast<double>(n);
    double q = 0.0;
    for (int k = 1; k <= lags; ++k) {
        const double rho = (d.tail(n - k) * d.head(n - k)).sum() / denom;
        q += rho * rho / (dn - k);
    }
    q *= dn * (dn + 2.0);
    return make_test_result("McLeod-Li lag " + std::to_string(lags), q, lags, chi2_sf(q, lags));
}

TestResult engle_lm(const Vector& e, int lags) {
    const Index n = e.size();
    require_lags(n, lags, "Engle LM");
    const Eigen::ArrayXd a = squared_checked(e, "Engle LM");
    const Index rows = n - lags;
    Matrix X(rows, lags + 1);
    X.col(0).setOnes();
    for (int j = 1; j <= lags; ++j) X.col(j) = a.segment(lags - j, rows).matrix();
    const OlsFit fit = ols(X, a.tail(rows).matrix());
    const double stat = static_cast<double>(rows) * fit.r_squared;
    return make_test_result("Engle LM lag " + std::to_string(lags), stat, lags, chi2_sf(stat, lags));
}

double correlation_integral(const Vector& x, int embedding, double eps) {
    if (embedding < 1) throw Error(Errc::InvalidArgument, "embedding must be >= 1");
    if (x.size() < embedding + 2) {
        throw Error(Errc::SeriesTooShort, "correlation integral needs n >= m + 2");
    }
    check_eps(eps);
    const PairCounts c = count_pairs(x, embedding, eps, false);
    return pair_share(c.histories, x.size() - embedding + 1);
}

BdsComponents bds_components(const Vector& x, int embedding, double eps) {
    if (embedding < 2) throw Error(Errc::InvalidArgument, "BDS embedding must be >= 2");
    const Index n = x.size();
    if (n < embedding + 2) throw Error(Errc::SeriesTooShort, "BDS needs n >= m + 2");
    check_eps(eps);

    const PairCounts c = count_pairs(x, embedding, eps, true);
    BdsComponents out;
    out.n = n;
    out.embedding = embedding;
    out.epsilon = eps;
    out.c1 = pair_share(c.all, n);
    const Index histories = n - embedding + 1;
    out.cm = pair_share(c.histories, histories);
    out.c1_trimmed = pair_share(c.trimmed, histories);

    // Ordered triples (i, j, l), all distinct, with j within eps of both i and l.
    // The variance cancels heavily, so it is assembled in long double.
    long double sum_r = 0.0L;
    long double sum_r2 = 0.0L;
    for (const auto hits : c.row) {
        const long double r = static_cast<long double>(hits + 1);
        sum_r += r;
        sum_r2 += r * r;
    }
    const long double dn = static_cast<long double>(n);
    const long double kk = (sum_r2 - 3.0L * sum_r + 2.0L * dn) / (dn * (dn - 1.0L) * (dn - 2.0L));
    const long double cc = 2.0L * static_cast<long double>(c.all) / (dn * (dn - 1.0L));
    out.k = static_cast<double>(kk);

    const int m = embedding;
    long double cross = 0.0L;
    for (int j = 1; j < m; ++j) cross += std::pow(kk, m - j) * std::pow(cc, 2 * j);
    const long double variance = 4.0L * (std::pow(kk, m) + 2.0L * cross +
                                         static_cast<long double>((m - 1) * (m - 1)) * std::pow(cc, 2 * m) -
                                         static_cast<long double>(m * m) * kk * std::pow(cc, 2 * m - 2));
    out.variance = static_cast<double>(variance);
    if (variance > 0.0L) {
        const long double h = static_cast<long double>(histories);
        const long double cm = 2.0L * static_cast<long double>(c.histories) / (h * (h - 1.0L));
        const long double c1t = 2.0L * static_cast<long double>(c.trimmed) / (h * (h - 1.0L));
        out.statistic = static_cast<double>(std::sqrt(h) * (cm - std::pow(c1t, m)) / std::sqrt(variance));
    }
    return out;
}

TestResult bds(const Vector& e, const BdsConfig& cfg) {
    const Index n = e.size();
    if (n < cfg.min_length) {
        throw Error(Errc::SeriesTooShort, "BDS needs at least " + std::to_string(cfg.min_length) +
                                              " observations");
    }
    if (!(cfg.epsilon_multiplier > 0.0)) {
        throw Error(Errc::InvalidArgument, "BDS epsilon multiplier must be > 0");
    }
    if (!e.allFinite()) throw Error(Errc::DomainError, "BDS: non-finite residual");
    const double sd = std::sqrt((e.array() - e.mean()).square().sum() / static_cast<double>(n - 1));
    if (!(sd > 0.0)) throw Error(Errc::DegenerateSeries, "BDS: series has zero variance");

    const BdsComponents c = bds_components(e, cfg.embedding, cfg.epsilon_multiplier * sd);
    if (!(c.variance > 0.0)) {
        throw Error(Errc::VarianceCollapse,
                    "BDS variance estimate is not positive; epsilon grid unsuitable for this series");
    }
    char name[64];
    std::snprintf(name, sizeof name, "BDS m=%d eps=%gs", cfg.embedding, cfg.epsilon_multiplier);
    return make_test_result(name, c.statistic, cfg.embedding, 2.0 * normal_sf(std::abs(c.statistic)));
}

}  // namespace xbic
