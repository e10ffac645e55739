#pragma once

// Independent reference computations used only by tests. None of these call
// into the solver paths they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "cra/model.hpp"

namespace cra::oracle {

/// For g1 = 0 and Omega = omega_c the energy equation collapses to
/// x^4 - 4J^2 x^2 - g0^4 = 0 with x = E - omega_c.
inline double quartic_offset(double hopping, double g0) {
    const double j2 = hopping * hopping;
    return std::sqrt(2.0 * j2 + std::sqrt(4.0 * j2 * j2 + g0 * g0 * g0 * g0));
}

/// E - Omega - Sigma(E) using the lattice Green's function outside the band,
/// at distance d > 0 beyond the edge on side `side`:
/// G00 = s / sqrt(x^2 - 4J^2), G01 = G00 (-s e^{-kappa}).
inline double self_energy_defect_beyond(const ModelParams& p, int side, double d) {
    const double J = p.hopping();
    const double root = std::sqrt(d * (4.0 * J + d));
    const double q = (2.0 * J + d - root) / (2.0 * J);
    const double g00 = side / root;
    const double g01 = g00 * (-side * q);
    const double sigma = (p.g0() * p.g0() + p.g1() * p.g1()) * g00 + 2.0 * p.g0() * p.g1() * g01;
    return side * (2.0 * J + d) + (p.omega_c() - p.omega()) - sigma;
}

inline double self_energy_defect(const ModelParams& p, double energy) {
    const double x = energy - p.omega_c();
    const int side = x > 0 ? 1 : -1;
    return self_energy_defect_beyond(p, side, std::abs(x) - 2.0 * p.hopping());
}

/// Roots of self_energy_defect by a fine scan plus plain bisection.
inline std::vector<double> scan_bound_energies(const ModelParams& p, double reach = 40.0,
                                               int samples = 400000) {
    std::vector<double> roots;
    const double J = p.hopping();
    for (int side : {-1, 1}) {
        auto f = [&](double d) { return self_energy_defect_beyond(p, side, d); };
        // Geometric sampling concentrates points near the band edge.
        double prev_d = 1e-14 * J;
        double prev_f = f(prev_d);
        for (int i = 1; i <= samples; ++i) {
            const double d = 1e-14 * J * std::pow(reach / 1e-14, static_cast<double>(i) / samples);
            const double fd = f(d);
            if ((fd < 0) != (prev_f < 0)) {
                double lo = prev_d, hi = d, flo = prev_f;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid == lo || mid == hi) break;
                    const double fm = f(mid);
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push_back(p.omega_c() + side * (2 * J + 0.5 * (lo + hi)));
            }
            prev_d = d;
            prev_f = fd;
        }
    }
    return roots;
}

/// Emitter amplitude of the left-incident scattering state from the
/// Lippmann-Schwinger route: u = G_ee (g0 + g1 e^{ik}), G_ee = 1/(w - Omega - Sigma),
/// Sigma = ((g0^2+g1^2) + 2 g0 g1 e^{ik}) / (2 i J sin k).
inline std::complex<double> green_emitter_amplitude(const ModelParams& p, double k) {
    using namespace std::complex_literals;
    const double J = p.hopping();
    const double w = p.omega_c() - 2 * J * std::cos(k);
    const std::complex<double> eik = std::exp(1i * k);
    const std::complex<double> sigma =
        (p.g0() * p.g0() + p.g1() * p.g1() + 2.0 * p.g0() * p.g1() * eik) / (2.0i * J * std::sin(k));
    return (p.g0() + p.g1() * eik) / (w - p.omega() - sigma);
}

/// Max residual of the amplitude equations E a_j = w_c a_j - J(a_{j+1}+a_{j-1})
/// + g0 u d_{j0} + g1 u d_{j1} and E u = g0 a_0 + g1 a_1 + Omega u.
template <class Amp>
double lattice_residual(const ModelParams& p, double energy, Amp&& alpha,
                        std::complex<double> u, int j_min, int j_max) {
    double worst = 0.0;
    for (int j = j_min; j <= j_max; ++j) {
        std::complex<double> lhs = (energy - p.omega_c()) * std::complex<double>(alpha(j));
        std::complex<double> rhs = -p.hopping() * (std::complex<double>(alpha(j + 1)) +
                                                   std::complex<double>(alpha(j - 1)));
        if (j == 0) rhs += p.g0() * u;
        if (j == 1) rhs += p.g1() * u;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    const std::complex<double> emit = (energy - p.omega()) * u - p.g0() * std::complex<double>(alpha(0)) -
                                      p.g1() * std::complex<double>(alpha(1));
    return std::max(worst, std::abs(emit));
}

/// Uniform random parameter sets in the acceptance box.
struct ParamSampler {
    explicit ParamSampler(unsigned long long seed, double omega_c = 200.0, double g_max = 3.0,
                          double detuning_max = 3.0)
        : rng(seed), omega_c(omega_c), coupling(0.0, g_max), detuning(-detuning_max, detuning_max) {}

    ModelParams operator()() {
        for (;;) {
            const double g0 = coupling(rng);
            const double g1 = coupling(rng);
            const double omega = omega_c + detuning(rng);
            if (g0 + g1 > 0.0) return {omega_c, omega, 1.0, g0, g1};
        }
    }

    std::mt19937_64 rng;
    double omega_c;
    std::uniform_real_distribution<double> coupling;
    std::uniform_real_distribution<double> detuning;
};

}  // namespace cra::oracle
