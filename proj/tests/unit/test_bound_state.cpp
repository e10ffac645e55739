#include <gtest/gtest.h>

#include <cmath>

#include "cra/bound_state.hpp"
#include "cra/errors.hpp"
#include "support/oracles.hpp"

namespace cra {
namespace {

std::vector<BoundState> states_of(const ModelParams& p) {
    std::vector<BoundState> out;
    for (const auto& level : bound_state_energies(p)) out.push_back(build_bound_state(p, level));
    return out;
}

// Brute-force photon + emitter norm.
double direct_norm(const BoundState& bs, int reach) {
    double sum = bs.emitter * bs.emitter;
    for (int j = -reach; j <= reach; ++j) {
        const double a = wavefunction_amplitude(bs, j);
        sum += a * a;
    }
    return sum;
}

TEST(Kappa, Examples) {
    const ModelParams p(200, 200, 1, 1, 1);
    EXPECT_THROW(kappa_from_energy(p, 202.0, Branch::upper), DomainError);
    EXPECT_THROW(kappa_from_energy(p, 201.0, Branch::upper), DomainError);
    EXPECT_THROW(kappa_from_energy(p, 203.0, Branch::lower), DomainError);
    EXPECT_NEAR(kappa_from_energy(p, 200 + 2 * std::cosh(1.0), Branch::upper), 1.0, 1e-12);
    EXPECT_NEAR(kappa_from_energy(p, 197.61, Branch::lower), std::acosh(1.195), 1e-12);
    EXPECT_NEAR(kappa_from_energy(p, 197.61, Branch::lower), 0.6148, 1e-4);
}

TEST(BuildBoundState, EqualCouplingMirrorIdentity) {
    oracle::ParamSampler sample(21);
    for (int i = 0; i < 50; ++i) {
        const ModelParams base = sample();
        const ModelParams p = base.with_couplings(base.g0(), base.g0());
        for (const auto& bs : states_of(p)) {
            const double a = bs.asymmetry();
            EXPECT_NEAR(a * a * std::exp(-2 * bs.kappa), 1.0, 1e-12) << p.describe();
        }
    }
}

TEST(BuildBoundState, LocalResonantCouplingHasUnitAsymmetry) {
    const auto states = states_of(ModelParams(200, 200, 1, 1, 0));
    ASSERT_EQ(states.size(), 2u);
    EXPECT_NEAR(states[1].asymmetry(), 1.0, 1e-14);
    EXPECT_TRUE(states[1].single_site_coupling);
}

TEST(BuildBoundState, NormalizedAgainstDirectSum) {
    const auto states = states_of(ModelParams(200, 201, 1, 1.7, 1));
    ASSERT_EQ(states.size(), 2u);
    for (const auto& bs : states) {
        EXPECT_NEAR(bs.norm(), 1.0, 1e-12);
        EXPECT_NEAR(direct_norm(bs, 2000), 1.0, 1e-12);
    }
}

TEST(BuildBoundState, EnergyKappaRelation) {
    oracle::ParamSampler sample(23);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = sample();
        for (const auto& bs : states_of(p)) {
            EXPECT_GT(bs.kappa, 0.0);
            const double e = p.omega_c() + branch_sign(bs.branch) * 2 * p.hopping() * std::cosh(bs.kappa);
            EXPECT_NEAR(e, bs.energy, 1e-11);
        }
    }
}

TEST(BuildBoundState, EigenResidualOnTruncatedLattice) {
    oracle::ParamSampler sample(31);
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
        const ModelParams p = sample();
        for (const auto& bs : states_of(p)) {
            if (bs.kappa < 1e-3) continue;  // lattice too long to be worth summing
            const int reach = static_cast<int>(std::ceil(60.0 / bs.kappa));
            const double res = oracle::lattice_residual(
                p, bs.energy, [&](int j) { return wavefunction_amplitude(bs, j); }, bs.emitter,
                -reach + 1, reach - 1);
            EXPECT_LT(res, 1e-8) << p.describe() << " branch " << to_string(bs.branch);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(BuildBoundState, VanishingDenominatorGivesPerfectRightChirality) {
    // J(E - Omega) - g1^2 e^{-kappa} = 0 on the upper level here.
    const ModelParams p(200, 198, 1, 1.5, 3.0);
    const auto states = states_of(p);
    ASSERT_EQ(states.size(), 2u);
    const auto& upper = states[1];
    EXPECT_NEAR(upper.energy, 202.5, 1e-12);
    EXPECT_LT(std::abs(upper.left), 1e-12);
    EXPECT_NEAR(upper.norm(), 1.0, 1e-12);
    EXPECT_NEAR(chirality(upper).closed, -1.0, 1e-12);
    const double res = oracle::lattice_residual(
        p, upper.energy, [&](int j) { return wavefunction_amplitude(upper, j); }, upper.emitter, -60, 60);
    EXPECT_LT(res, 1e-10);
}

TEST(Wavefunction, Convention) {
    const auto states = states_of(ModelParams(200, 201, 1, 1.7, 1));
    for (const auto& bs : states) {
        EXPECT_EQ(wavefunction_amplitude(bs, 0), bs.normalization());
        for (int j = 1; j < 30; ++j) {
            EXPECT_NEAR(std::abs(wavefunction_amplitude(bs, j + 1) / wavefunction_amplitude(bs, j)),
                        std::exp(-bs.kappa), 1e-12);
        }
        // Upper branch alternates, lower does not.
        const double ratio = wavefunction_amplitude(bs, -3) / wavefunction_amplitude(bs, -2);
        EXPECT_EQ(ratio < 0, bs.branch == Branch::upper);
    }
    const auto& lower = states[0];
    EXPECT_GT(std::abs(wavefunction_amplitude(lower, -6)), std::abs(wavefunction_amplitude(lower, 7)));
}

TEST(Wavefunction, MirrorSymmetryAtEqualCoupling) {
    for (const auto& bs : states_of(ModelParams(200, 201, 1, 1.7, 1.7))) {
        for (int j = 0; j < 10; ++j) {
            EXPECT_NEAR(std::abs(wavefunction_amplitude(bs, -j)),
                        std::abs(wavefunction_amplitude(bs, 1 + j)), 1e-13);
        }
    }
}

TEST(Chirality, ZeroAtEqualCoupling) {
    oracle::ParamSampler sample(41);
    for (int i = 0; i < 40; ++i) {
        const ModelParams base = sample();
        const ModelParams p = base.with_couplings(base.g1(), base.g1());
        for (const auto& bs : states_of(p)) {
            const auto c = chirality(bs);
            EXPECT_LT(std::abs(c.closed), 1e-12) << p.describe();
            EXPECT_LT(std::abs(c.direct), 1e-10);
        }
    }
}

TEST(Chirality, LocalCouplingLeansLeftWithWarning) {
    for (const auto& bs : states_of(ModelParams(200, 201, 1, 0.7, 0))) {
        const auto c = chirality(bs);
        EXPECT_GT(c.closed, 0.0);
        EXPECT_TRUE(c.axis_warning);
    }
}

TEST(Chirality, SamePreferredDirection) {
    const auto states = states_of(ModelParams(200, 201, 1, 1.7, 1));
    ASSERT_EQ(states.size(), 2u);
    EXPECT_GT(chirality(states[0]).closed, 0.0);
    EXPECT_GT(chirality(states[1]).closed, 0.0);
    EXPECT_FALSE(chirality(states[0]).axis_warning);
}

TEST(Chirality, ClosedFormMatchesDirectSums) {
    oracle::ParamSampler sample(51);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = sample();
        for (const auto& bs : states_of(p)) {
            const auto c = chirality(bs);
            EXPECT_NEAR(c.closed, c.direct, 1e-10) << p.describe();
            EXPECT_GE(c.truncation, 200);
            EXPECT_LE(std::abs(c.closed), 1.0);
        }
    }
}

TEST(Chirality, SignFollowsLargerCoupling) {
    for (double omega : {200.0, 201.5}) {
        for (int a = 0; a <= 40; ++a) {
            for (int b = 0; b <= 40; ++b) {
                if (a == b) continue;
                const ModelParams p(200, omega, 1, 0.075 * a, 0.075 * b);
                for (const auto& bs : states_of(p)) {
                    const double s = chirality(bs).closed;
                    if (std::abs(s) > 1e-8) EXPECT_EQ(s > 0, a > b) << p.describe();
                }
            }
        }
    }
}

}  // namespace
}  // namespace cra
