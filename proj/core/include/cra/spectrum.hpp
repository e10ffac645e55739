#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cra/model.hpp"

namespace cra {

enum class Branch { upper, lower };

/// +1 for the level above the band, -1 below it.
constexpr int branch_sign(Branch b) noexcept { return b == Branch::upper ? 1 : -1; }
constexpr const char* to_string(Branch b) noexcept { return b == Branch::upper ? "+" : "-"; }

struct BoundStateEnergy {
    Branch branch;
    double energy;
    double residual;  ///< |bound_defect(energy)|
};

/// Left- minus right-hand side of the out-of-band energy equation
///
///   (E - Omega - g0 g1/J) (E - omega_c) sqrt(1 - (2J/(E - omega_c))^2)
///       = g0^2 + g1^2 - (g0 g1/J)(E - omega_c).
///
/// A zero is a bound-state energy. Throws DomainError for E in the closed band.
double bound_defect(const ModelParams& params, double energy);

/// All out-of-band levels, lower branch first. At most one per side.
std::vector<BoundStateEnergy> bound_state_energies(const ModelParams& params);

struct UpperStateCheck {
    bool present;                 ///< from the numeric root scan
    std::optional<bool> analytic; ///< Omega + g^2/J > omega_c + 2J, only when g0 == g1
};

/// Numeric presence of the upper level, cross-checked against the analytic
/// criterion (g0 == g1) or the guaranteed existence (g0 != g1). Throws
/// ConsistencyError on disagreement.
UpperStateCheck has_upper_bound_state(const ModelParams& params);

/// Critical equal coupling g* = sqrt(J (omega_c + 2J - Omega)) above which the
/// upper level exists. nullopt when Omega > omega_c + 2J (present for all g).
std::optional<double> phase_boundary_g(double omega_c, double omega, double hopping);

/// Single-photon scattering eigenstate for a wave incident from the left:
///   alpha_j = e^{ikj} + r e^{-ikj}  (j <= 0),   alpha_j = t e^{ikj}  (j >= 1),
/// with emitter amplitude `emitter`.
struct ScatteringSolution {
    double k;
    std::complex<double> t;
    std::complex<double> r;
    std::complex<double> emitter;

    double transmittance() const { return std::norm(t); }
    double reflectance() const { return std::norm(r); }
    /// Photon amplitude at site j.
    std::complex<double> amplitude(int j) const;
};

/// k must lie in (0, pi); DomainError otherwise. SolverError if the 3x3 system
/// is singular.
ScatteringSolution scattering_solution(const ModelParams& params, double k);

namespace detail {
/// Same linear solve without the incidence-direction check; any k with
/// sin k != 0. For k < 0 the result is the complex conjugate of the -k state.
ScatteringSolution solve_scattering(const ModelParams& params, double k);
}  // namespace detail

}  // namespace cra
