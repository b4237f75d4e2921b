#include "oracles.hpp"
#include "xbic/error.hpp"
#include "xbic/nonlin.hpp"
#include "xbic/simulate.hpp"
#include "xbic/statmath.hpp"

#include <gtest/gtest.h>

using namespace xbic;

namespace {

oracle::Series to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no xbic::Error thrown";
    return Errc::InvalidArgument;
}

// Ljung-Box on squares, straight from the definition.
double ljung_box_squares(const Vector& e, int q) {
    const Index n = e.size();
    std::vector<long double> a(n);
    long double mean = 0;
    for (Index i = 0; i < n; ++i) mean += (a[i] = static_cast<long double>(e(i)) * e(i));
    mean /= n;
    long double c0 = 0;
    for (auto v : a) c0 += (v - mean) * (v - mean);
    long double stat = 0;
    for (int k = 1; k <= q; ++k) {
        long double ck = 0;
        for (Index t = k; t < n; ++t) ck += (a[t] - mean) * (a[t - k] - mean);
        stat += (ck / c0) * (ck / c0) / (n - k);
    }
    return static_cast<double>(n * (n + 2.0L) * stat);
}

}  // namespace

TEST(CorrelationIntegral, Examples) {
    EXPECT_DOUBLE_EQ(correlation_integral(Vector::Constant(30, 1.5), 1, 0.1), 1.0);
    EXPECT_DOUBLE_EQ(correlation_integral(Vector::Constant(30, 1.5), 4, 1e-9), 1.0);
    const Vector x = (Vector(4) << 0, 10, 20, 30).finished();
    EXPECT_DOUBLE_EQ(correlation_integral(x, 1, 10.0), 0.5);
    EXPECT_EQ(code_of([&] { correlation_integral(x, 3, 1.0); }), Errc::SeriesTooShort);
}

TEST(CorrelationIntegral, MatchesBruteForce) {
    sim::Rng rng(13);
    std::uniform_int_distribution<int> len(6, 40);
    std::uniform_int_distribution<int> emb(1, 4);
    std::uniform_real_distribution<double> mult(0.2, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vector x = sim::gaussian(len(rng), rng);
        const int m = emb(rng);
        const double eps = mult(rng);
        EXPECT_EQ(correlation_integral(x, m, eps), oracle::correlation_integral(to_std(x), m, eps));
    }
}

TEST(CorrelationIntegral, MonotoneAndBounded) {
    sim::Rng rng(14);
    const Vector x = sim::gaussian(300, rng);
    for (int m = 1; m <= 5; ++m) {
        double prev = 0.0;
        for (double eps = 0.05; eps < 4.0; eps += 0.15) {
            const double c = correlation_integral(x, m, eps);
            EXPECT_GE(c, prev);
            EXPECT_GE(c, 0.0);
            EXPECT_LE(c, 1.0);
            if (m > 1) {
                EXPECT_LE(c, correlation_integral(x, m - 1, eps) + 1e-15);
            }
            prev = c;
        }
    }
}

TEST(Bds, ComponentsMatchBruteForce) {
    sim::Rng rng(15);
    std::uniform_int_distribution<int> len(8, 40);
    std::uniform_int_distribution<int> emb(2, 4);
    std::uniform_real_distribution<double> mult(0.5, 2.0);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Vector x = sim::gaussian(len(rng), rng);
        const int m = emb(rng);
        const double eps = mult(rng);
        const auto got = bds_components(x, m, eps);
        const auto ref = oracle::bds(to_std(x), m, eps);
        EXPECT_NEAR(got.c1, ref.c1, 1e-12);
        EXPECT_NEAR(got.k, ref.k, 1e-12);
        EXPECT_NEAR(got.cm, ref.cm, 1e-12);
        EXPECT_NEAR(got.c1_trimmed, ref.c1_trimmed, 1e-12);
        EXPECT_NEAR(got.variance, ref.variance, 1e-10);
        if (ref.variance > 1e-6) {
            // W divides by the square root of a cancellation-prone variance, so compare relatively.
            EXPECT_NEAR(got.statistic, ref.statistic, 1e-10 * std::max(1.0, std::abs(ref.statistic)));
            ++checked;
        }
    }
    EXPECT_GT(checked, 500);
}

TEST(Bds, TinySeriesWithGuardDisabled) {
    sim::Rng rng(16);
    const Vector x = sim::gaussian(20, rng);
    BdsConfig cfg{2, 1.0, 0};
    const auto t = bds(x, cfg);
    const double sd = std::sqrt((x.array() - x.mean()).square().sum() / 19.0);
    const auto ref = oracle::bds(to_std(x), 2, sd);
    EXPECT_NEAR(t.statistic, ref.statistic, 1e-10);
    EXPECT_NEAR(t.p_value, 2.0 * normal_sf(std::abs(ref.statistic)), 1e-12);
}

TEST(Bds, AffineInvariance) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        sim::Rng rng(seed);
        const Vector x = sim::arch1(0.2, 0.5, 500, rng);
        for (const auto& cfg : kDefaultBdsGrid) {
            const double a = bds(x, cfg).statistic;
            const double b = bds((3.5 * x.array() + 12.0).matrix(), cfg).statistic;
            EXPECT_NEAR(a, b, 1e-8);
        }
    }
}

TEST(Bds, Errors) {
    sim::Rng rng(17);
    EXPECT_EQ(code_of([&] { bds(sim::gaussian(150, rng), BdsConfig{}); }), Errc::SeriesTooShort);
    EXPECT_EQ(code_of([&] { bds(Vector::Constant(300, 2.0), BdsConfig{}); }), Errc::DegenerateSeries);
    EXPECT_EQ(code_of([&] { bds(sim::gaussian(300, rng), BdsConfig{2, 1e-9, 200}); }), Errc::VarianceCollapse);
    EXPECT_EQ(code_of([&] { bds(sim::gaussian(300, rng), BdsConfig{1, 1.0, 200}); }), Errc::InvalidArgument);
}

TEST(Bds, UniformNoiseSize) {
    int accepted = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        sim::Rng rng(seed);
        accepted += std::abs(bds(sim::uniform(1000, rng), BdsConfig{2, 1.0}).statistic) < 1.96 ? 1 : 0;
    }
    EXPECT_GE(accepted, 920);
    EXPECT_LE(accepted, 980);
}

TEST(Bds, LogisticMapPower) {
    int rejected = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        sim::Rng rng(seed);
        rejected += bds(sim::logistic_map(1000, rng), BdsConfig{2, 0.5}).p_value < 0.001 ? 1 : 0;
    }
    EXPECT_GE(rejected, 198);
}

TEST(McLeodLi, MatchesDefinition) {
    sim::Rng rng(18);
    for (int q : {1, 5, 15, 20}) {
        const Vector e = sim::arch1(0.3, 0.4, 400, rng);
        const auto t = mcleod_li(e, q);
        EXPECT_NEAR(t.statistic, ljung_box_squares(e, q), 1e-9 * std::max(1.0, t.statistic));
        EXPECT_EQ(t.dof, q);
        EXPECT_NEAR(t.p_value, chi2_sf(t.statistic, q), 1e-15);
    }
}

TEST(EngleLm, MatchesQrRegression) {
    sim::Rng rng(19);
    for (int q : {1, 5, 15}) {
        const Vector e = sim::arch1(0.3, 0.4, 400, rng);
        const Vector a = e.array().square();
        const Index rows = 400 - q;
        Matrix X(rows, q + 1);
        X.col(0).setOnes();
        for (int j = 1; j <= q; ++j) X.col(j) = a.segment(q - j, rows);
        const Vector yv = a.tail(rows);
        const Vector b = X.colPivHouseholderQr().solve(yv);
        const Vector res = yv - X * b;
        const double r2 = 1.0 - res.squaredNorm() / (yv.array() - yv.mean()).square().sum();
        EXPECT_NEAR(engle_lm(e, q).statistic, rows * r2, 1e-8);
    }
}

TEST(Portmanteau, Errors) {
    sim::Rng rng(20);
    const Vector e = sim::gaussian(100, rng);
    EXPECT_EQ(code_of([&] { mcleod_li(e, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([&] { engle_lm(e, 0); }), Errc::InvalidArgument);
    EXPECT_EQ(code_of([&] { mcleod_li(Vector::Constant(100, 1.0), 5); }), Errc::DegenerateSeries);
    EXPECT_EQ(code_of([&] { engle_lm(Vector::Constant(100, -1.0), 5); }), Errc::DegenerateSeries);
    EXPECT_EQ(code_of([&] { mcleod_li(e.head(15), 5); }), Errc::SeriesTooShort);
}

TEST(Portmanteau, ArchPowerAtOnePercent) {
    int ml = 0;
    int lm = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        sim::Rng rng(seed);
        const Vector e = sim::arch1(0.1, 0.8, 2000, rng);
        ml += mcleod_li(e, 5).p_value < 0.01 ? 1 : 0;
        lm += engle_lm(e, 5).p_value < 0.01 ? 1 : 0;
    }
    EXPECT_GE(ml, 190);
    EXPECT_GE(lm, 190);
}

TEST(Portmanteau, PValuesInUnitInterval) {
    sim::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector e = sim::gaussian(300, rng);
        for (int q : kDefaultNonlinLags) {
            for (const auto& t : {mcleod_li(e, q), engle_lm(e, q)}) {
                EXPECT_GE(t.p_value, 0.0);
                EXPECT_LE(t.p_value, 1.0);
            }
        }
    }
}
