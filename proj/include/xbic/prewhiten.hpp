#pragma once

#include "xbic/statmath.hpp"
#include "xbic/types.hpp"

#include <vector>

namespace xbic {

/// AR(p) with intercept. residuals(i) belongs to input index i + order.
struct ArFit {
    Index order = 0;
    double intercept = 0.0;
    Vector coefficients;
    Vector residuals;
    double bic = 0.0;
    OlsFit regression;
};

/// Bivariate VAR(p) with intercepts, estimated equation by equation.
/// Both residual vectors start at input index order.
struct VarFit {
    Index order = 0;
    Eigen::Vector2d intercepts = Eigen::Vector2d::Zero();
    /// lag_matrices[j](i, v): effect of variable v at lag j + 1 on equation i.
    std::vector<Eigen::Matrix2d> lag_matrices;
    Vector residuals_x;
    Vector residuals_y;
    /// ln det(Sigma_mle) + k ln(n) / n, k = total coefficients in the system.
    double bic = 0.0;
    /// Per-equation regressions, columns [1, x_{t-1}, y_{t-1}, ..., x_{t-p}, y_{t-p}].
    OlsFit equation_x;
    OlsFit equation_y;
};

ArFit fit_ar(const Vector& y, Index order);

/// BIC order over 0..max_order, all candidates on the common sample n - max_order.
/// Ties go to the smaller order.
Index select_ar_order(const Vector& y, Index max_order);

VarFit fit_var(const Vector& x, const Vector& y, Index order);

Index select_var_order(const Vector& x, const Vector& y, Index max_order);

}  // namespace xbic
