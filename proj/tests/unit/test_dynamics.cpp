#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cra/dynamics.hpp"
#include "cra/ed_oracle.hpp"
#include "cra/errors.hpp"
#include "support/oracles.hpp"

namespace cra {
namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

TEST(Overlaps, GridValidation) {
    const ModelParams p(200, 200, 1, 1, 1);
    EXPECT_THROW(overlaps(p, 128), DomainError);
    EXPECT_THROW(overlaps(p, 1001), DomainError);
    EXPECT_NO_THROW(overlaps(p, 256));
}

TEST(Overlaps, CoarseGridIsRejected) {
    EXPECT_THROW(overlaps(ModelParams(200, 200, 1, 0.01, 0.01), 256), SolverError);
}

TEST(Overlaps, CompletenessOnRandomSets) {
    oracle::ParamSampler sample(61);
    for (int i = 0; i < 10; ++i) {
        const ModelParams p = sample();
        const auto d = overlaps(p);
        EXPECT_LT(d.completeness_defect, 1e-6) << p.describe();
        EXPECT_EQ(d.k_grid.size(), kDefaultGridSize);
        // c_k is the conjugate emitter amplitude and even in |.|.
        for (std::size_t n = 1; n < d.k_grid.size() / 2; n += 97) {
            EXPECT_NEAR(std::abs(d.c_k[n]), std::abs(d.c_k[d.k_grid.size() - n]), 1e-14);
        }
    }
}

TEST(Overlaps, BoundWeightRegimes) {
    const auto weak = overlaps(ModelParams(200, 200, 1, 0.1, 0.1));
    EXPECT_LT(weak.bound_weight(), 0.05);
    const auto strong = overlaps(ModelParams(200, 200, 1, 2, 2));
    EXPECT_GT(strong.bound_weight(), 0.5);
    ASSERT_TRUE(strong.c_plus && strong.c_minus);
}

TEST(Overlaps, BoundWeightMatchesExactProjection) {
    for (auto [g0, g1] : {std::pair{2.0, 2.0}, {0.7, 1.3}, {1.0, 1.0}, {1.7, 0.4}}) {
        const ModelParams p(200, 200.4, 1, g0, g1);
        const auto d = overlaps(p);
        double ed = 0.0;
        for (const auto& level : out_of_band_levels(build_finite_model(p, 801))) {
            ed += level.emitter_weight;
        }
        EXPECT_NEAR(d.bound_weight(), ed, 1e-9) << p.describe();
    }
}

TEST(EvolveSpectral, InitialConditionAndBounds) {
    oracle::ParamSampler sample(71);
    const auto times = uniform_times(20.0, 0.5);
    for (int i = 0; i < 5; ++i) {
        const ModelParams p = sample();
        const auto series = evolve_spectral(p, times);
        EXPECT_EQ(series.method, EvolutionMethod::spectral);
        EXPECT_NEAR(series.p_e.front(), 1.0, 1e-9);
        for (double v : series.p_e) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0 + 1e-9);
        }
    }
}

TEST(EvolveSpectral, RejectsBadTimes) {
    const ModelParams p(200, 200, 1, 1, 1);
    const std::vector<double> unsorted{0.0, 2.0, 1.0};
    const std::vector<double> negative{-1.0, 0.0};
    EXPECT_THROW(evolve_spectral(p, unsorted, 256), DomainError);
    EXPECT_THROW(evolve_spectral(p, negative, 256), DomainError);
    EXPECT_THROW(uniform_times(0.0, 0.1), DomainError);
    EXPECT_THROW(uniform_times(1.0, 0.0), DomainError);
}

TEST(EvolveSpectral, WeakCouplingDecays) {
    const auto series = evolve_spectral(ModelParams(200, 200, 1, 0.1, 0.1), uniform_times(400, 1.0));
    EXPECT_LT(series.p_e.back(), 1e-2);
    // Exponential envelope: log P_e is close to linear on [20, 200].
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0, n = 0;
    for (std::size_t i = 20; i <= 200; ++i) {
        const double x = series.times[i];
        const double y = std::log(series.p_e[i]);
        sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y, n += 1;
    }
    const double cov = n * sxy - sx * sy;
    const double r2 = cov * cov / ((n * sxx - sx * sx) * (n * syy - sy * sy));
    EXPECT_GT(r2, 0.99);
    EXPECT_LT(cov, 0.0);
}

TEST(EvolveSpectral, GridConverged) {
    const ModelParams p(200, 200.3, 1, 0.9, 1.2);
    const auto times = uniform_times(100, 2.0);
    const auto a = evolve_spectral(p, times, kDefaultGridSize);
    const auto b = evolve_spectral(p, times, 2 * kDefaultGridSize);
    EXPECT_LT(max_abs_diff(a.p_e, b.p_e), 1e-6);
}

TEST(EvolveSpectral, MatchesExactEvolution) {
    oracle::ParamSampler sample(81);
    const auto times = uniform_times(50, 0.25);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = sample();
        const auto spectral = evolve_spectral(p, times);
        const auto exact = evolve_exact(build_finite_model(p, light_cone_sites(p, 50)), times);
        EXPECT_LT(max_abs_diff(spectral.p_e, exact.p_e), 5e-3) << p.describe();
    }
}

TEST(EvolveSpectral, ShiftInvariance) {
    const ModelParams p(200, 200.7, 1, 0.6, 1.1);
    const auto times = uniform_times(30, 1.0);
    const auto a = evolve_spectral(p, times, 4096);
    const auto b = evolve_spectral(p.shifted(-200), times, 4096);
    EXPECT_LT(max_abs_diff(a.p_e, b.p_e), 1e-10);
}

// Fits mean + a cos(w t) + b sin(w t) by least squares; returns max deviation.
double late_time_deviation(const TimeSeries& s, double t0, double mean, double amplitude, double omega) {
    double cc = 0, ss = 0, cs = 0, yc = 0, ys = 0;
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] < t0) continue;
        const double c = std::cos(omega * s.times[i]);
        const double sn = std::sin(omega * s.times[i]);
        const double y = s.p_e[i] - mean;
        cc += c * c, ss += sn * sn, cs += c * sn, yc += y * c, ys += y * sn;
    }
    const double det = cc * ss - cs * cs;
    double phase = 0.0;
    if (amplitude > 0 && det != 0) {
        const double a = (yc * ss - ys * cs) / det;
        const double b = (ys * cc - yc * cs) / det;
        phase = std::atan2(-b, a);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] < t0) continue;
        const double model = mean + amplitude * std::cos(omega * s.times[i] + phase);
        worst = std::max(worst, std::abs(s.p_e[i] - model));
    }
    return worst;
}

TEST(LongTime, Diagnostics) {
    auto d = long_time_diagnostics(ModelParams(200, 200, 1, 1, 1));
    EXPECT_EQ(d.oscillation_amplitude, 0.0);
    EXPECT_GT(d.mean, 0.0);
    EXPECT_FALSE(d.frequency);

    d = long_time_diagnostics(ModelParams(200, 200, 1, 0.7, 1.3));
    EXPECT_GT(d.oscillation_amplitude, 0.0);
    ASSERT_TRUE(d.frequency);

    d = long_time_diagnostics(ModelParams(200, 200, 1, 0.1, 0.1));
    EXPECT_LT(d.mean, 1e-3);

    d = long_time_diagnostics(ModelParams(200, 200, 1, 2, 2));
    ASSERT_TRUE(d.frequency);
    EXPECT_NEAR(*d.frequency, (202.58 - 196.44) / (2 * std::numbers::pi), 0.01);
    EXPECT_NEAR(*d.frequency, 0.98, 0.01);
}

TEST(LongTime, LateTimeLaw) {
    const auto times = uniform_times(400, 0.1);
    for (auto [g0, g1] : {std::pair{1.0, 1.0}, {0.7, 1.3}, {2.0, 2.0}}) {
        const ModelParams p(200, 200, 1, g0, g1);
        const auto d = long_time_diagnostics(p);
        const auto s = evolve_spectral(p, times);
        const double omega = d.frequency ? 2 * std::numbers::pi * *d.frequency : 0.0;
        EXPECT_LT(late_time_deviation(s, 200.0, d.mean, d.oscillation_amplitude, omega), 1e-2)
            << p.describe();
    }
}

TEST(LongTime, WeakCouplingMatchesExactLongTimeAverage) {
    const ModelParams p(200, 200, 1, 0.1, 0.1);
    const auto times = uniform_times(450, 1.0);
    const auto exact = evolve_exact(build_finite_model(p, light_cone_sites(p, 450)), times);
    double avg = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= 420) avg += exact.p_e[i], ++n;
    }
    avg /= n;
    EXPECT_LT(avg, 1e-3);
    EXPECT_LT(long_time_diagnostics(p).mean, 1e-3);
}

}  // namespace
}  // namespace cra
