#include "xbic/prewhiten.hpp"

#include "xbic/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace xbic {

namespace {

ArFit ar_on_sample(const Vector& y, Index order, Index first) {
    const Index rows = y.size() - first;
    Matrix X(rows, order + 1);
    X.col(0).setOnes();
    for (Index j = 1; j <= order; ++j) X.col(j) = y.segment(first - j, rows);

    ArFit fit;
    fit.order = order;
    fit.regression = ols(X, y.tail(rows));
    fit.intercept = fit.regression.coefficients(0);
    fit.coefficients = fit.regression.coefficients.tail(order);
    fit.residuals = fit.regression.residuals;
    fit.bic = fit.regression.bic;
    return fit;
}

VarFit var_on_sample(const Vector& x, const Vector& y, Index order, Index first) {
    const Index rows = x.size() - first;
    Matrix X(rows, 1 + 2 * order);
    X.col(0).setOnes();
    for (Index j = 1; j <= order; ++j) {
        X.col(2 * j - 1) = x.segment(first - j, rows);
        X.col(2 * j) = y.segment(first - j, rows);
    }

    VarFit fit;
    fit.order = order;
    fit.equation_x = ols(X, x.tail(rows));
    fit.equation_y = ols(X, y.tail(rows));
    fit.intercepts << fit.equation_x.coefficients(0), fit.equation_y.coefficients(0);
    for (Index j = 1; j <= order; ++j) {
        Eigen::Matrix2d a;
        a << fit.equation_x.coefficients(2 * j - 1), fit.equation_x.coefficients(2 * j),
            fit.equation_y.coefficients(2 * j - 1), fit.equation_y.coefficients(2 * j);
        fit.lag_matrices.push_back(a);
    }
    fit.residuals_x = fit.equation_x.residuals;
    fit.residuals_y = fit.equation_y.residuals;

    Eigen::Matrix<double, Eigen::Dynamic, 2> e(rows, 2);
    e << fit.residuals_x, fit.residuals_y;
    const double dn = static_cast<double>(rows);
    const Eigen::Matrix2d sigma = e.transpose() * e / dn;
    const double det = sigma.determinant();
    const double k = static_cast<double>(2 * (1 + 2 * order));
    fit.bic = det > 0.0 ? std::log(det) + k * std::log(dn) / dn
                        : -std::numeric_limits<double>::infinity();
    return fit;
}

void require_length(Index n, Index needed, const char* what) {
    if (n <= needed) {
        throw Error(Errc::SeriesTooShort, std::string(what) + " needs more than " +
                                              std::to_string(needed) + " observations, got " +
                                              std::to_string(n));
    }
}

}  // namespace

ArFit fit_ar(const Vector& y, Index order) {
    if (order < 0) throw Error(Errc::InvalidArgument, "AR order must be non-negative");
    require_length(y.size(), order + 10, "AR fit");
    return ar_on_sample(y, order, order);
}

Index select_ar_order(const Vector& y, Index max_order) {
    if (max_order < 0) throw Error(Errc::InvalidArgument, "maximum AR order must be non-negative");
    require_length(y.size(), max_order + 10, "AR order selection");
    Index best = 0;
    double best_bic = std::numeric_limits<double>::infinity();
    for (Index p = 0; p <= max_order; ++p) {
        const double bic = ar_on_sample(y, p, max_order).bic;
        if (bic < best_bic) {
            best_bic = bic;
            best = p;
        }
    }
    return best;
}

VarFit fit_var(const Vector& x, const Vector& y, Index order) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "VAR inputs differ in length");
    if (order < 0) throw Error(Errc::InvalidArgument, "VAR order must be non-negative");
    require_length(x.size(), 2 * order + 10, "VAR fit");
    return var_on_sample(x, y, order, order);
}

Index select_var_order(const Vector& x, const Vector& y, Index max_order) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "VAR inputs differ in length");
    if (max_order < 0) throw Error(Errc::InvalidArgument, "maximum VAR order must be non-negative");
    require_length(x.size(), 2 * max_order + 10, "VAR order selection");
    Index best = 0;
    double best_bic = std::numeric_limits<double>::infinity();
    for (Index p = 0; p <= max_order; ++p) {
        const double bic = var_on_sample(x, y, p, max_order).bic;
        if (bic < best_bic) {
            best_bic = bic;
            best = p;
        }
    }
    return best;
}

}  // namespace xbic
