#pragma once

#include "cra/model.hpp"
#include "cra/spectrum.hpp"

namespace cra {

/// A normalized out-of-band eigenstate.
///
/// Photon amplitudes are
///   alpha_j = left  (-/+1)^j e^{-kappa |j|}   for j <= 0,
///   alpha_j = right (-/+1)^j e^{-kappa j}     for j >= 1,
/// with the alternating sign on the upper branch. In the usual parametrisation
/// left = N and right = N A. The stored form stays finite when the amplitude
/// denominator J(E - Omega) -/+ g1^2 e^{-kappa} vanishes (then left = 0).
struct BoundState {
    Branch branch;
    double energy;
    double kappa;
    double left;
    double right;
    double emitter;
    /// g0 == 0 or g1 == 0: the j = 1/2 chirality axis is not the symmetry axis.
    bool single_site_coupling;

    /// A = right / left; +/-inf when left vanishes.
    double asymmetry() const;
    /// N, the amplitude on site 0.
    double normalization() const { return left; }
    /// e^{-kappa}
    double decay() const;
    /// Closed-form sum of |alpha_j|^2 plus |u_e|^2.
    double norm() const;
};

struct ChiralityReport {
    double closed;        ///< (1 - A^2 e^{-2 kappa}) / (1 + A^2 e^{-2 kappa})
    double direct;        ///< from truncated lattice sums
    double left_weight;   ///< S_L, truncated sum over j <= 0
    double right_weight;  ///< S_R, truncated sum over j >= 1
    int truncation;       ///< |j| cut used for the direct sums
    bool axis_warning;    ///< single-site coupling, axis j = 1/2 is not a mirror line
};

/// kappa = arccosh(+/-(E - omega_c) / 2J) > 0. DomainError on or inside the
/// band or on the wrong side for `branch`.
double kappa_from_energy(const ModelParams& params, double energy, Branch branch);

/// SolverError when every amplitude component vanishes.
BoundState build_bound_state(const ModelParams& params, const BoundStateEnergy& level);

double wavefunction_amplitude(const BoundState& state, int j);

ChiralityReport chirality(const BoundState& state);

}  // namespace cra
