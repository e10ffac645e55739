#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cra/bound_state.hpp"
#include "cra/dynamics.hpp"
#include "cra/ed_oracle.hpp"
#include "cra/spectrum.hpp"
#include "csv.hpp"

namespace cra::cli {

namespace {

const char* branch_name(Branch b) { return b == Branch::upper ? "plus" : "minus"; }

CsvWriter open_csv(std::ostream& out, const std::string& command, const ModelFlags& flags,
                   const ModelParams& params) {
    CsvWriter csv(out, command);
    csv.meta(params_line(params) + " coupling=" + flags.coupling_note());
    return csv;
}

std::vector<BoundState> bound_states(const ModelParams& params) {
    std::vector<BoundState> states;
    for (const auto& level : bound_state_energies(params)) {
        states.push_back(build_bound_state(params, level));
    }
    return states;
}

}  // namespace

ModelParams ModelFlags::build() const {
    return ModelParams(omega_c, emitter(), hopping, coupling0(), coupling1());
}

std::string ModelFlags::coupling_note() const { return g ? "locked" : "independent"; }

void cmd_band(const ModelFlags& flags, int points, std::ostream& out) {
    if (points < 2) throw UsageError("--points must be >= 2");
    const auto params = flags.build();
    const auto band = band_edges(params);
    auto csv = open_csv(out, "band", flags, params);
    csv.meta("lower_edge=" + format_number(band.lower_edge) +
             " upper_edge=" + format_number(band.upper_edge));
    csv.columns({"k", "omega_k", "v_g"});
    for (int n = 0; n < points; ++n) {
        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * n / (points - 1);
        csv.row_numbers({k, dispersion(params, k), group_velocity(params, k)});
    }
}

void cmd_bound(const ModelFlags& flags, std::optional<int> profile, std::ostream& out) {
    const auto params = flags.build();
    const auto states = bound_states(params);
    auto csv = open_csv(out, "bound", flags, params);
    if (!profile) {
        csv.columns({"branch", "E", "kappa", "A", "N", "u_e", "S_closed"});
        for (const auto& s : states) {
            csv.row({branch_name(s.branch), format_number(s.energy), format_number(s.kappa),
                     format_number(s.asymmetry()), format_number(s.normalization()),
                     format_number(s.emitter), format_number(chirality(s).closed)});
        }
        return;
    }
    if (*profile < 1) throw UsageError("--profile must be >= 1");
    std::optional<BoundState> lower, upper;
    for (const auto& s : states) (s.branch == Branch::upper ? upper : lower) = s;
    csv.meta("profile j=" + std::to_string(1 - *profile) + ".." + std::to_string(*profile) +
             " u_e_minus=" + format_cell(lower ? std::optional(lower->emitter) : std::nullopt) +
             " u_e_plus=" + format_cell(upper ? std::optional(upper->emitter) : std::nullopt));
    csv.columns({"j", "alpha_minus", "alpha_plus"});
    for (int j = 1 - *profile; j <= *profile; ++j) {
        csv.row_numbers({double(j),
                         lower ? std::optional(wavefunction_amplitude(*lower, j)) : std::nullopt,
                         upper ? std::optional(wavefunction_amplitude(*upper, j)) : std::nullopt});
    }
}

void cmd_scatter(const ModelFlags& flags, std::optional<double> k, int points, std::ostream& out) {
    const auto params = flags.build();
    std::vector<double> ks;
    if (k) {
        ks.push_back(*k);
    } else {
        if (points < 1) throw UsageError("--points must be >= 1");
        for (int n = 0; n < points; ++n) ks.push_back(std::numbers::pi * (n + 0.5) / points);
    }
    auto csv = open_csv(out, "scatter", flags, params);
    csv.columns({"k", "omega_k", "t_re", "t_im", "r_re", "r_im", "u_re", "u_im", "T", "R",
                 "flux_defect"});
    for (double kk : ks) {
        const auto s = scattering_solution(params, kk);
        csv.row_numbers({kk, dispersion(params, kk), s.t.real(), s.t.imag(), s.r.real(),
                         s.r.imag(), s.emitter.real(), s.emitter.imag(), s.transmittance(),
                         s.reflectance(), s.transmittance() + s.reflectance() - 1.0});
    }
}

void cmd_chirality(const ModelFlags& flags, std::ostream& out) {
    const auto params = flags.build();
    const auto states = bound_states(params);
    auto csv = open_csv(out, "chirality", flags, params);
    csv.columns({"branch", "E", "kappa", "A", "S_closed", "S_direct", "S_L", "S_R", "truncation",
                 "axis_warning"});
    for (const auto& s : states) {
        const auto c = chirality(s);
        csv.row({branch_name(s.branch), format_number(s.energy), format_number(s.kappa),
                 format_number(s.asymmetry()), format_number(c.closed), format_number(c.direct),
                 format_number(c.left_weight), format_number(c.right_weight),
                 std::to_string(c.truncation), c.axis_warning ? "1" : "0"});
    }
}

void cmd_dynamics(const ModelFlags& flags, const DynamicsSpec& spec, std::ostream& out) {
    if (!(spec.t_max > 0.0)) throw UsageError("--t-max must be positive");
    if (!(spec.dt > 0.0)) throw UsageError("--dt must be positive");
    if (spec.method != "spectral" && spec.method != "oracle" && spec.method != "both") {
        throw UsageError("--method must be spectral, oracle or both");
    }
    const auto params = flags.build();
    const auto times = uniform_times(spec.t_max, spec.dt);
    const bool want_spectral = spec.method != "oracle";
    const bool want_oracle = spec.method != "spectral";

    std::optional<TimeSeries> spectral, oracle;
    std::size_t sites = 0;
    if (want_oracle) {
        // precondition failures surface before any output is written
        sites = spec.sites.value_or(light_cone_sites(params, times.back()));
        oracle = evolve_exact(build_finite_model(params, sites), times);
    }
    if (want_spectral) spectral = evolve_spectral(params, times, spec.nk);

    auto csv = open_csv(out, "dynamics", flags, params);
    std::string run = "t_max=" + format_number(spec.t_max) + " dt=" + format_number(spec.dt) +
                      " method=" + spec.method;
    if (want_spectral) run += " nk=" + std::to_string(spec.nk);
    if (want_oracle) run += " sites=" + std::to_string(sites);
    csv.meta(run);

    if (spectral && oracle) {
        csv.columns({"t", "p_e", "p_e_oracle"});
        double worst = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            worst = std::max(worst, std::abs(spectral->p_e[i] - oracle->p_e[i]));
            csv.row_numbers({times[i], spectral->p_e[i], oracle->p_e[i]});
        }
        csv.trailer("max_deviation=" + format_number(worst));
        return;
    }
    const auto& series = spectral ? *spectral : *oracle;
    csv.columns({"t", "p_e"});
    for (std::size_t i = 0; i < times.size(); ++i) csv.row_numbers({times[i], series.p_e[i]});
}

}  // namespace cra::cli
