#pragma once

#include "xbic/ingest.hpp"
#include "xbic/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace xbic::sim {

using Rng = std::mt19937_64;

/// Discarded start-up draws for the recursive generators.
inline constexpr Index kBurnIn = 500;

Vector gaussian(Index n, Rng& rng);
Vector uniform(Index n, Rng& rng);
Vector random_walk(Index n, Rng& rng);

/// y_t = sum_j phi_j y_{t-j} + e_t.
Vector ar(const std::vector<double>& phi, Index n, Rng& rng);

/// z_t = sum_j A_j z_{t-j} + e_t for a bivariate z; returns an n x 2 matrix.
Matrix var(const std::vector<Eigen::Matrix2d>& lags, Index n, Rng& rng);

/// e_t = sigma_t z_t, sigma_t^2 = omega + alpha e_{t-1}^2.
Vector arch1(double omega, double alpha, Index n, Rng& rng);

/// x_{t+1} = 4 x_t (1 - x_t) from a uniform start in (0, 1).
Vector logistic_map(Index n, Rng& rng);

/// x iid N(0, 1) and y_t = x_{t-1} x_{t-2} + noise_scale e_t.
std::pair<Vector, Vector> product_coupled_pair(Index n, double noise_scale, Rng& rng);

/// Weekdays from `start`, `count` of them.
std::vector<Date> business_days(Date start, std::size_t count);

/**
 * Three synthetic daily price series ("OIL", "USDMXN", "IPC") on a shared
 * weekday calendar starting 1998-02-02, with heavy-tailed GARCH returns,
 * contemporaneous correlation and bursts of product coupling in which the
 * other two series load on OIL's lagged cross products.
 */
std::vector<PriceSeries> synthetic_market(std::size_t prices, std::uint64_t seed);

}  // namespace xbic::sim
