#include "xbic/simulate.hpp"

#include <array>
#include <cmath>

namespace xbic::sim {

Vector gaussian(Index n, Rng& rng) {
    std::normal_distribution<double> dist;
    Vector out(n);
    for (Index i = 0; i < n; ++i) out(i) = dist(rng);
    return out;
}

Vector uniform(Index n, Rng& rng) {
    std::uniform_real_distribution<double> dist;
    Vector out(n);
    for (Index i = 0; i < n; ++i) out(i) = dist(rng);
    return out;
}

Vector random_walk(Index n, Rng& rng) {
    const Vector steps = gaussian(n, rng);
    Vector out(n);
    double level = 0.0;
    for (Index i = 0; i < n; ++i) out(i) = level += steps(i);
    return out;
}

Vector ar(const std::vector<double>& phi, Index n, Rng& rng) {
    const Index p = static_cast<Index>(phi.size());
    const Vector e = gaussian(n + kBurnIn, rng);
    Vector y = Vector::Zero(n + kBurnIn);
    for (Index t = 0; t < y.size(); ++t) {
        double v = e(t);
        for (Index j = 1; j <= p && j <= t; ++j) v += phi[static_cast<std::size_t>(j - 1)] * y(t - j);
        y(t) = v;
    }
    return y.tail(n);
}

Matrix var(const std::vector<Eigen::Matrix2d>& lags, Index n, Rng& rng) {
    const Index total = n + kBurnIn;
    Matrix z = Matrix::Zero(total, 2);
    const Vector e1 = gaussian(total, rng);
    const Vector e2 = gaussian(total, rng);
    for (Index t = 0; t < total; ++t) {
        Eigen::Vector2d v(e1(t), e2(t));
        for (std::size_t j = 0; j < lags.size(); ++j) {
            const Index lag = static_cast<Index>(j) + 1;
            if (lag <= t) v += lags[j] * z.row(t - lag).transpose();
        }
        z.row(t) = v.transpose();
    }
    return z.bottomRows(n);
}

Vector arch1(double omega, double alpha, Index n, Rng& rng) {
    const Vector z = gaussian(n + kBurnIn, rng);
    Vector e(n + kBurnIn);
    double prev = 0.0;
    for (Index t = 0; t < e.size(); ++t) {
        prev = e(t) = std::sqrt(omega + alpha * prev * prev) * z(t);
    }
    return e.tail(n);
}

Vector logistic_map(Index n, Rng& rng) {
    std::uniform_real_distribution<double> start(0.01, 0.99);
    Vector out(n);
    double x = start(rng);
    for (Index t = 0; t < n + kBurnIn; ++t) {
        x = 4.0 * x * (1.0 - x);
        // Floating-point orbits can collapse onto the fixed point 0.
        if (!(x > 0.0 && x < 1.0)) x = start(rng);
        if (t >= kBurnIn) out(t - kBurnIn) = x;
    }
    return out;
}

std::pair<Vector, Vector> product_coupled_pair(Index n, double noise_scale, Rng& rng) {
    const Vector x = gaussian(n + 2, rng);
    const Vector e = gaussian(n, rng);
    Vector y(n);
    for (Index t = 0; t < n; ++t) y(t) = x(t + 1) * x(t) + noise_scale * e(t);
    return {x.tail(n), y};
}

std::vector<Date> business_days(Date start, std::size_t count) {
    using namespace std::chrono;
    std::vector<Date> out;
    out.reserve(count);
    for (sys_days day{start}; out.size() < count; day += days{1}) {
        const weekday wd{day};
        if (wd != Saturday && wd != Sunday) out.emplace_back(day);
    }
    return out;
}

std::vector<PriceSeries> synthetic_market(std::size_t prices, std::uint64_t seed) {
    using namespace std::chrono;
    Rng rng(seed);
    std::normal_distribution<double> normal;

    struct Garch {
        double omega, alpha, beta, mean;
        double variance() const { return omega / (1.0 - alpha - beta); }
    };
    const std::array<Garch, 3> g{{{0.12, 0.08, 0.90, 0.03},
                                  {0.008, 0.08, 0.90, 0.01},
                                  {0.045, 0.08, 0.90, 0.05}}};
    Eigen::Matrix3d corr;
    corr << 1.0, -0.3, 0.3, -0.3, 1.0, -0.5, 0.3, -0.5, 1.0;
    const Eigen::Matrix3d chol = corr.llt().matrixL();
    const std::array<double, 3> start_price{20.0, 9.0, 5000.0};
    constexpr Index kBurst = 240;

    const Index n_ret = static_cast<Index>(prices) - 1;
    const Index total = n_ret + kBurnIn;
    Matrix ret = Matrix::Zero(total, 3);
    std::array<double, 3> h{};
    std::array<double, 3> shock{};
    for (int j = 0; j < 3; ++j) h[j] = g[j].variance();
    const double oil_sd = std::sqrt(g[0].variance());

    for (Index t = 0; t < total; ++t) {
        const Eigen::Vector3d z = chol * Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
        for (int j = 0; j < 3; ++j) {
            h[j] = g[j].omega + g[j].alpha * shock[j] * shock[j] + g[j].beta * h[j];
            shock[j] = std::sqrt(h[j]) * z(j);
            ret(t, j) = g[j].mean + shock[j];
        }
        ret(t, 1) += 0.05 * (t > 0 ? ret(t - 1, 1) - g[1].mean : 0.0);
        const bool burst = t >= kBurnIn && ((t - kBurnIn) / kBurst) % 3 == 1;
        if (burst && t >= 2) {
            const double cross = (ret(t - 1, 0) - g[0].mean) * (ret(t - 2, 0) - g[0].mean) /
                                 (oil_sd * oil_sd);
            ret(t, 1) += 0.35 * std::sqrt(g[1].variance()) * cross;
            ret(t, 2) += 0.50 * std::sqrt(g[2].variance()) * cross;
        }
    }

    const auto dates = business_days(year{1998} / February / day{2}, prices);
    const std::array<const char*, 3> names{"OIL", "USDMXN", "IPC"};
    std::vector<PriceSeries> out;
    for (int j = 0; j < 3; ++j) {
        PriceSeries s;
        s.name = names[static_cast<std::size_t>(j)];
        s.dates = dates;
        s.values.resize(static_cast<Index>(prices));
        double p = start_price[static_cast<std::size_t>(j)];
        s.values(0) = p;
        for (Index t = 1; t < static_cast<Index>(prices); ++t) {
            p *= std::exp(ret(kBurnIn + t - 1, j) / 100.0);
            s.values(t) = p;
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace xbic::sim
