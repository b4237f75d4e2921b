#pragma once

#include "xbic/types.hpp"

namespace xbic {

/// Least-squares fit of y on the columns of X.
struct OlsFit {
    Vector coefficients;
    Vector residuals;
    Vector standard_errors;
    /// Unbiased residual variance e'e / (n - k).
    double residual_variance = 0.0;
    /// Centered when X carries a constant column, uncentered otherwise.
    double r_squared = 0.0;
    Index n_observations = 0;
    Index n_regressors = 0;
    /// Gaussian log-likelihood at the MLE variance e'e / n.
    double log_likelihood = 0.0;
    /// n ln(e'e / n) + k ln(n).
    double bic = 0.0;

    double mle_variance() const noexcept {
        return residuals.squaredNorm() / static_cast<double>(n_observations);
    }
};

/**
 * Ordinary least squares via the normal equations.
 *
 * Columns are equilibrated to unit norm before a Cholesky factorisation of
 * X'X; a reciprocal condition estimate below 1e-13 (or an all-zero column)
 * raises RankDeficient.
 */
OlsFit ols(const Matrix& X, const Vector& y);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Regularised upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// P(chi2_k > x) for integer k >= 1.
double chi2_sf(double x, int k);

/// P(Z > z) for a standard normal Z.
double normal_sf(double z);

}  // namespace xbic
