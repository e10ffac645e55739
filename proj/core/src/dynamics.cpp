#include "cra/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cra/errors.hpp"
#include "cra/spectrum.hpp"

namespace cra {
namespace {

constexpr double kMaxCompletenessDefect = 1e-4;

void check_times(std::span<const double> times) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw DomainError("times must be nonnegative");
        if (i > 0 && times[i] < times[i - 1]) throw DomainError("times must be sorted");
    }
}

std::vector<BoundState> build_all(const ModelParams& params) {
    std::vector<BoundState> states;
    for (const auto& level : bound_state_energies(params)) {
        states.push_back(build_bound_state(params, level));
    }
    return states;
}

}  // namespace

double OverlapDecomposition::bound_weight() const {
    double w = 0.0;
    if (c_plus) w += *c_plus * *c_plus;
    if (c_minus) w += *c_minus * *c_minus;
    return w;
}

OverlapDecomposition overlaps(const ModelParams& params, std::size_t nk) {
    if (nk < 256 || nk % 2 != 0) throw DomainError("overlaps: nk must be even and >= 256");

    OverlapDecomposition d;
    d.k_grid.resize(nk);
    d.c_k.assign(nk, 0.0);
    d.emitter_k.assign(nk, 0.0);
    const double dk = 2.0 * std::numbers::pi / static_cast<double>(nk);
    for (std::size_t n = 0; n < nk; ++n) {
        d.k_grid[n] = -std::numbers::pi + dk * static_cast<double>(n);
    }

    // n = 0 is k = -pi and n = nk/2 is k = 0: band edges, zero spectral weight.
    // Positive k solved directly; k -> -k is the time-reversed state.
    const std::size_t half = nk / 2;
    for (std::size_t n = half + 1; n < nk; ++n) {
        const ScatteringSolution s = scattering_solution(params, d.k_grid[n]);
        d.emitter_k[n] = s.emitter;
        d.c_k[n] = std::conj(s.emitter);
        const std::size_t mirror = nk - n;
        d.emitter_k[mirror] = std::conj(s.emitter);
        d.c_k[mirror] = s.emitter;
    }

    double continuum = 0.0;
    for (const auto& c : d.c_k) continuum += std::norm(c);
    d.continuum_weight = continuum / static_cast<double>(nk);

    d.bound_states = build_all(params);
    for (const auto& bs : d.bound_states) {
        // c_pm = <psi_pm | e> is the (real) emitter amplitude of the bound state.
        (bs.branch == Branch::upper ? d.c_plus : d.c_minus) = bs.emitter;
    }
    d.completeness_defect = std::abs(1.0 - (d.continuum_weight + d.bound_weight()));
    if (d.completeness_defect > kMaxCompletenessDefect) {
        throw SolverError("overlap completeness defect " + std::to_string(d.completeness_defect) +
                          " at nk=" + std::to_string(nk) + "; use a larger nk");
    }
    return d;
}

TimeSeries evolve_spectral(const ModelParams& params, const OverlapDecomposition& decomposition,
                           std::span<const double> times) {
    check_times(times);
    const double J = params.hopping();
    const std::size_t nk = decomposition.k_grid.size();

    // Phases are taken relative to omega_c; P_e is insensitive to a global phase.
    std::vector<double> band_offset(nk);
    std::vector<std::complex<double>> weight(nk);
    for (std::size_t n = 0; n < nk; ++n) {
        band_offset[n] = -2.0 * J * std::cos(decomposition.k_grid[n]);
        weight[n] = decomposition.c_k[n] * decomposition.emitter_k[n] / static_cast<double>(nk);
    }

    TimeSeries series{{times.begin(), times.end()}, {}, EvolutionMethod::spectral};
    series.p_e.reserve(times.size());
    for (double t : times) {
        std::complex<double> amp = 0.0;
        for (std::size_t n = 0; n < nk; ++n) {
            if (weight[n] == 0.0) continue;
            amp += weight[n] * std::polar(1.0, -band_offset[n] * t);
        }
        for (const auto& bs : decomposition.bound_states) {
            const double offset = bs.energy - params.omega_c();
            amp += bs.emitter * bs.emitter * std::polar(1.0, -offset * t);
        }
        series.p_e.push_back(std::norm(amp));
    }
    return series;
}

TimeSeries evolve_spectral(const ModelParams& params, std::span<const double> times,
                           std::size_t nk) {
    check_times(times);
    return evolve_spectral(params, overlaps(params, nk), times);
}

LongTimeDiagnostics long_time_diagnostics(const ModelParams& params) {
    const auto states = build_all(params);
    LongTimeDiagnostics diag{0.0, 0.0, std::nullopt};
    for (const auto& bs : states) {
        const double a = bs.emitter * bs.emitter;
        diag.mean += a * a;
    }
    if (states.size() == 2) {
        const double a_lower = states[0].emitter * states[0].emitter;
        const double a_upper = states[1].emitter * states[1].emitter;
        diag.oscillation_amplitude = 2.0 * a_lower * a_upper;
        diag.frequency = std::abs(states[1].energy - states[0].energy) / (2.0 * std::numbers::pi);
    }
    return diag;
}

std::vector<double> uniform_times(double t_max, double dt) {
    if (!(t_max > 0.0) || !(dt > 0.0)) throw DomainError("t_max and dt must be positive");
    const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 0.5));
    std::vector<double> times(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) times[i] = dt * static_cast<double>(i);
    return times;
}

}  // namespace cra
