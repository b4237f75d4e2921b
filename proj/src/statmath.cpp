#include "xbic/statmath.hpp"

#include "xbic/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace xbic {

namespace {

bool is_constant_column(const Matrix& X, Index j) {
    const double first = X(0, j);
    return first != 0.0 && (X.col(j).array() == first).all();
}

}  // namespace

OlsFit ols(const Matrix& X, const Vector& y) {
    const Index n = X.rows();
    const Index k = X.cols();
    if (y.size() != n) {
        throw Error(Errc::DimensionMismatch, "design has " + std::to_string(n) +
                                                 " rows but response has " + std::to_string(y.size()));
    }
    if (k == 0) {
        throw Error(Errc::InvalidArgument, "design matrix has no columns");
    }
    if (n <= k) {
        throw Error(Errc::SeriesTooShort, "need more observations (" + std::to_string(n) +
                                              ") than regressors (" + std::to_string(k) + ")");
    }
    if (!X.allFinite() || !y.allFinite()) {
        throw Error(Errc::DomainError, "non-finite value in regression inputs");
    }

    const Vector norms = X.colwise().norm().transpose();
    for (Index j = 0; j < k; ++j) {
        if (norms(j) == 0.0) {
            throw Error(Errc::RankDeficient, "regressor column " + std::to_string(j) + " is all zero");
        }
    }
    const Matrix Xs = X * norms.cwiseInverse().asDiagonal();
    const Matrix gram = Xs.transpose() * Xs;
    const Eigen::LLT<Matrix> llt(gram);
    if (llt.info() != Eigen::Success || llt.rcond() < 1e-13) {
        throw Error(Errc::RankDeficient, "X'X is singular or too ill-conditioned");
    }

    Vector beta_s = llt.solve(Xs.transpose() * y);
    // One refinement step recovers most of the accuracy the normal equations lose.
    beta_s += llt.solve(Xs.transpose() * (y - Xs * beta_s));

    OlsFit fit;
    fit.n_observations = n;
    fit.n_regressors = k;
    fit.coefficients = beta_s.cwiseQuotient(norms);
    fit.residuals = y - X * fit.coefficients;

    const double ssr = fit.residuals.squaredNorm();
    const double dn = static_cast<double>(n);
    fit.residual_variance = ssr / static_cast<double>(n - k);

    const Vector gram_inv_diag = llt.solve(Matrix::Identity(k, k)).diagonal();
    fit.standard_errors =
        (fit.residual_variance * gram_inv_diag.array()).sqrt().matrix().cwiseQuotient(norms);

    bool has_constant = false;
    for (Index j = 0; j < k && !has_constant; ++j) has_constant = is_constant_column(X, j);
    const double sst = has_constant ? (y.array() - y.mean()).square().sum() : y.squaredNorm();
    fit.r_squared = sst > 0.0 ? std::clamp(1.0 - ssr / sst, 0.0, 1.0) : 0.0;

    const double sigma2 = ssr / dn;
    if (sigma2 > 0.0) {
        fit.log_likelihood = -0.5 * dn * (std::log(2.0 * std::numbers::pi) + std::log(sigma2) + 1.0);
        fit.bic = dn * std::log(sigma2) + static_cast<double>(k) * std::log(dn);
    } else {
        fit.log_likelihood = std::numeric_limits<double>::infinity();
        fit.bic = -std::numeric_limits<double>::infinity();
    }
    return fit;
}

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(Errc::DomainError, "ln_gamma requires a finite x > 0");
    }
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEps = 1e-16;

// P(a, x) by its power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

// Q(a, x) by its continued fraction (modified Lentz); for x >= a + 1.
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - ln_gamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0) || std::isnan(x)) {
        throw Error(Errc::DomainError, "gamma_q requires a > 0 and x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
    return std::clamp(gamma_q_fraction(a, x), 0.0, 1.0);
}

double chi2_sf(double x, int k) {
    if (k < 1) {
        throw Error(Errc::DomainError, "chi-square degrees of freedom must be >= 1");
    }
    if (!(x >= 0.0)) {
        throw Error(Errc::DomainError, "chi-square statistic must be >= 0");
    }
    return gamma_q(0.5 * k, 0.5 * x);
}

double normal_sf(double z) {
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

}  // namespace xbic
