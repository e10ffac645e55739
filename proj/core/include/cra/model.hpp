#pragma once

#include <string>

namespace cra {

/// Physical parameters of the array + emitter system. All energies share one
/// unit (conventionally the hopping J).
///
/// Invariants enforced at construction: finite values, J > 0, g0 >= 0,
/// g1 >= 0 and g0 + g1 > 0. Violations throw DomainError.
class ModelParams {
public:
    ModelParams(double omega_c, double omega, double hopping, double g0, double g1);

    double omega_c() const noexcept { return omega_c_; }
    double omega() const noexcept { return omega_; }
    double hopping() const noexcept { return hopping_; }
    double g0() const noexcept { return g0_; }
    double g1() const noexcept { return g1_; }

    /// omega_c - Omega; kept separate so energies near 200 J lose no digits.
    double detuning() const noexcept { return omega_c_ - omega_; }
    bool equal_couplings() const noexcept { return g0_ == g1_; }

    /// Same physics with both omega_c and Omega offset by `shift`.
    ModelParams shifted(double shift) const;
    ModelParams with_couplings(double g0, double g1) const;
    ModelParams with_omega(double omega) const;

    std::string describe() const;

private:
    double omega_c_;
    double omega_;
    double hopping_;
    double g0_;
    double g1_;
};

struct BandGeometry {
    double lower_edge;
    double upper_edge;

    double width() const noexcept { return upper_edge - lower_edge; }
    /// Closed band membership.
    bool contains(double energy) const noexcept {
        return energy >= lower_edge && energy <= upper_edge;
    }
};

/// omega_k = omega_c - 2 J cos k for k in [-pi, pi]; DomainError otherwise.
double dispersion(const ModelParams& params, double k);

BandGeometry band_edges(const ModelParams& params);

/// Group velocity d omega_k / dk = 2 J sin k.
double group_velocity(const ModelParams& params, double k);

}  // namespace cra
