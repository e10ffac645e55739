#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cra/bound_state.hpp"
#include "cra/model.hpp"

namespace cra {

inline constexpr std::size_t kDefaultGridSize = 16384;

/// Expansion of the initially excited emitter state in the exact eigenbasis.
struct OverlapDecomposition {
    std::vector<double> k_grid;                  ///< k_n = -pi + 2 pi n / nk
    std::vector<std::complex<double>> c_k;       ///< <psi_k | e>
    std::vector<std::complex<double>> emitter_k; ///< u_e(k) of each scattering state
    std::vector<BoundState> bound_states;        ///< lower first
    std::optional<double> c_plus;
    std::optional<double> c_minus;
    double continuum_weight = 0.0;  ///< trapezoid of |c_k|^2 dk / 2pi
    double completeness_defect = 0.0;

    double bound_weight() const;
};

enum class EvolutionMethod { spectral, oracle };
constexpr const char* to_string(EvolutionMethod m) noexcept {
    return m == EvolutionMethod::spectral ? "spectral" : "oracle";
}

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> p_e;
    EvolutionMethod method;
};

struct LongTimeDiagnostics {
    double mean;
    double oscillation_amplitude;
    std::optional<double> frequency;  ///< cycles per unit time, two levels only
};

/// nk >= 256 and even, else DomainError. SolverError if the completeness
/// defect exceeds 1e-4 (grid too coarse).
OverlapDecomposition overlaps(const ModelParams& params, std::size_t nk = kDefaultGridSize);

/// P_e(t) = |<e| e^{-iHt} |e>|^2 from the eigenstate expansion.
TimeSeries evolve_spectral(const ModelParams& params, std::span<const double> times,
                           std::size_t nk = kDefaultGridSize);
TimeSeries evolve_spectral(const ModelParams& params, const OverlapDecomposition& decomposition,
                           std::span<const double> times);

/// Bound-state part of P_e(t), valid once the continuum has dispersed.
LongTimeDiagnostics long_time_diagnostics(const ModelParams& params);

/// `count` samples 0, dt, 2 dt, ... up to and including t_max (within dt/2).
std::vector<double> uniform_times(double t_max, double dt);

}  // namespace cra
