#include <algorithm>
#include <array>
#include <optional>

#include "commands.hpp"
#include "cra/bound_state.hpp"
#include "cra/dynamics.hpp"
#include "cra/spectrum.hpp"
#include "csv.hpp"
#include "work_pool.hpp"

namespace cra::cli {

namespace {

using Row = std::vector<std::optional<double>>;

struct Levels {
    std::optional<double> lower, upper;
};

Levels levels_of(const ModelParams& p) {
    Levels out;
    for (const auto& level : bound_state_energies(p)) {
        (level.branch == Branch::upper ? out.upper : out.lower) = level.energy;
    }
    return out;
}

std::vector<std::string> columns_for(const std::string& quantity) {
    if (quantity == "levels") return {"E_minus", "E_plus", "count", "band_lower", "band_upper"};
    if (quantity == "chirality") return {"S_minus", "S_plus"};
    return {"c_minus_sq", "c_plus_sq", "sum"};
}

Row evaluate(const std::string& quantity, const std::optional<ModelParams>& p, std::size_t nk,
             double band_lower, double band_upper) {
    if (quantity == "levels") {
        if (!p) return {std::nullopt, std::nullopt, std::nullopt, band_lower, band_upper};
        const auto l = levels_of(*p);
        const double count = double(l.lower.has_value()) + double(l.upper.has_value());
        return {l.lower, l.upper, count, band_lower, band_upper};
    }
    if (!p) return Row(columns_for(quantity).size());
    if (quantity == "chirality") {
        Row row(2);
        for (const auto& level : bound_state_energies(*p)) {
            const auto s = build_bound_state(*p, level);
            row[level.branch == Branch::upper ? 1 : 0] = chirality(s).closed;
        }
        return row;
    }
    const auto d = overlaps(*p, nk);
    std::optional<double> minus, plus;
    if (d.c_minus) minus = *d.c_minus * *d.c_minus;
    if (d.c_plus) plus = *d.c_plus * *d.c_plus;
    return {minus, plus, d.bound_weight()};
}

}  // namespace

void cmd_sweep(const ModelFlags& flags, const SweepSpec& spec, std::ostream& out) {
    static const std::array<std::string, 4> axes{"g0", "g1", "g", "Omega"};
    static const std::array<std::string, 3> quantities{"levels", "chirality", "bound-weight"};
    if (std::find(axes.begin(), axes.end(), spec.axis) == axes.end()) {
        throw UsageError("--axis must be one of g0, g1, g, Omega");
    }
    if (std::find(quantities.begin(), quantities.end(), spec.quantity) == quantities.end()) {
        throw UsageError("--quantity must be one of levels, chirality, bound-weight");
    }
    if (spec.points < 2) throw UsageError("--points must be >= 2");
    if (!(spec.start < spec.stop)) throw UsageError("--start must be below --stop");

    const std::size_t n = static_cast<std::size_t>(spec.points);
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i) {
        axis[i] = i + 1 == n ? spec.stop
                             : spec.start + (spec.stop - spec.start) * double(i) / double(n - 1);
    }

    // Parameter sets are built up front so invalid values fail as usage errors.
    std::vector<std::optional<ModelParams>> params(n);
    for (std::size_t i = 0; i < n; ++i) {
        double g0 = flags.coupling0(), g1 = flags.coupling1(), omega = flags.emitter();
        if (spec.axis == "g0" || spec.axis == "g") g0 = axis[i];
        if (spec.axis == "g1" || spec.axis == "g") g1 = axis[i];
        if (spec.axis == "Omega") omega = axis[i];
        if (g0 == 0.0 && g1 == 0.0) continue;  // decoupled point: empty cells
        params[i] = ModelParams(flags.omega_c, omega, flags.hopping, g0, g1);
    }

    const double band_lower = flags.omega_c - 2.0 * flags.hopping;
    const double band_upper = flags.omega_c + 2.0 * flags.hopping;
    const auto rows = parallel_map<Row>(n, spec.threads, [&](std::size_t i) {
        return evaluate(spec.quantity, params[i], spec.nk, band_lower, band_upper);
    });

    CsvWriter csv(out, "sweep");
    std::string fixed = "omega_c=" + format_number(flags.omega_c) +
                        " J=" + format_number(flags.hopping);
    if (spec.axis != "Omega") fixed += " omega=" + format_number(flags.emitter());
    if (spec.axis == "g1") fixed += " g0=" + format_number(flags.coupling0());
    if (spec.axis == "g0") fixed += " g1=" + format_number(flags.coupling1());
    csv.meta(fixed);
    std::string axis_note = "axis=" + spec.axis;
    if (spec.axis == "g") axis_note += " (locked: g0=g1=g)";
    csv.meta(axis_note + " start=" + format_number(spec.start) + " stop=" +
             format_number(spec.stop) + " points=" + std::to_string(spec.points) +
             " quantity=" + spec.quantity +
             (spec.quantity == "bound-weight" ? " nk=" + std::to_string(spec.nk) : ""));
    csv.meta("decoupled points (g0=g1=0) and absent bound states are empty cells");

    auto names = columns_for(spec.quantity);
    names.insert(names.begin(), spec.axis);
    csv.columns(names);
    for (std::size_t i = 0; i < n; ++i) {
        Row row = rows[i];
        row.insert(row.begin(), axis[i]);
        csv.row_numbers(row);
    }
}

}  // namespace cra::cli
