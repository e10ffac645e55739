#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "cra/dynamics.hpp"
#include "cra/model.hpp"
#include "cra/spectrum.hpp"

namespace cra {

/// Truncated open chain with the emitter, single-excitation sector.
///
/// Basis: photon sites 0 .. n_sites-1, then the emitter. The emitter couples
/// to sites i0 = (n_sites - 1)/2 (strength g0) and i0 + 1 (strength g1), so
/// lattice index j of the infinite model maps to site i0 + j.
class FiniteModel {
public:
    FiniteModel(const ModelParams& params, std::size_t n_sites);

    const ModelParams& params() const noexcept { return params_; }
    std::size_t n_sites() const noexcept { return n_sites_; }
    std::size_t dimension() const noexcept { return n_sites_ + 1; }
    std::size_t emitter_index() const noexcept { return n_sites_; }
    std::size_t origin_site() const noexcept { return (n_sites_ - 1) / 2; }
    const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

private:
    ModelParams params_;
    std::size_t n_sites_;
    Eigen::MatrixXd matrix_;
};

/// n_sites odd and >= 11, else DomainError.
FiniteModel build_finite_model(const ModelParams& params, std::size_t n_sites);

/// All eigenvalues, ascending.
Eigen::VectorXd finite_spectrum(const FiniteModel& model);

struct OutOfBandLevel {
    Branch branch;
    double energy;
    double localization_length;  ///< 1 / fitted tail slope
    double fitted_kappa;
    double left_weight;          ///< photon weight on j <= 0
    double right_weight;         ///< photon weight on j >= 1
    double emitter_weight;

    double asymmetry() const { return (left_weight - right_weight) / (left_weight + right_weight); }
};

/// Eigenvalues with |E - omega_c| > 2J + margin, with tail fits.
std::vector<OutOfBandLevel> out_of_band_levels(const FiniteModel& model,
                                               double margin_in_j = 1e-8);

/// Same selection without eigenvectors (cheaper; energies only).
std::vector<double> out_of_band_energies(const FiniteModel& model, double margin_in_j = 1e-8);

/// Smallest odd lattice satisfying n > 2 (2J t_max) + 200.
std::size_t light_cone_sites(const ModelParams& params, double t_max);

/// Full eigendecomposition, reused for repeated propagation.
class ExactPropagator {
public:
    explicit ExactPropagator(const FiniteModel& model);

    Eigen::VectorXcd propagate(const Eigen::VectorXcd& initial, double t) const;
    /// |<e| e^{-iHt} |e>|^2 for each t.
    std::vector<double> emitter_return(std::span<const double> times) const;

    const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
    const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

private:
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
    std::size_t emitter_;
    double shift_;
};

/// PreconditionError (naming the minimal lattice) when the light cone would
/// reach the boundary.
TimeSeries evolve_exact(const FiniteModel& model, std::span<const double> times);

struct WavepacketResult {
    double transmitted;  ///< photon weight on j >= 1
    double reflected;    ///< photon weight on j <= 0
    double emitter;      ///< residual emitter population
    double elapsed;
};

/// Launches exp(-(j - j0)^2 / (4 w^2) + i k0 j) from the left, evolves until
/// the packet has cleared the emitter, and returns the split of the photon
/// weight. k0 in (0.2, pi - 0.2), width >= 10. DomainError if the packet
/// touches a boundary.
WavepacketResult wavepacket_transmission(const ModelParams& params, double k0, double width,
                                         std::size_t n_sites);

/// Lattice size that keeps the packet of wavepacket_transmission off the
/// boundaries.
std::size_t wavepacket_sites(const ModelParams& params, double k0, double width);

}  // namespace cra
