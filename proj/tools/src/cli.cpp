#include "cra_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "cra/version.hpp"
#include "cra/errors.hpp"
#include "validate.hpp"

namespace cra::cli {

namespace {

struct ModelOptions {
    double omega = 0.0, g0 = 0.0, g1 = 0.0, g = 0.0;
    CLI::Option* omega_opt = nullptr;
    CLI::Option* g0_opt = nullptr;
    CLI::Option* g1_opt = nullptr;
    CLI::Option* g_opt = nullptr;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags, ModelOptions& o, std::string& out_path) {
    cmd->add_option("--omega-c", flags.omega_c, "Resonator frequency (units of J)")
        ->capture_default_str();
    o.omega_opt = cmd->add_option("--omega", o.omega, "Emitter frequency (default: omega-c)");
    cmd->add_option("--j", flags.hopping, "Hopping strength")->capture_default_str();
    o.g0_opt = cmd->add_option("--g0", o.g0, "Coupling to resonator 0");
    o.g1_opt = cmd->add_option("--g1", o.g1, "Coupling to resonator 1");
    o.g_opt = cmd->add_option("--g", o.g, "Sets g0 = g1 = g");
    o.g_opt->excludes(o.g0_opt)->excludes(o.g1_opt);
    cmd->add_option("--out", out_path, "Output path (default: standard output)");
}

void collect(const ModelOptions& o, ModelFlags& flags) {
    if (o.omega_opt->count()) flags.omega = o.omega;
    if (o.g0_opt->count()) flags.g0 = o.g0;
    if (o.g1_opt->count()) flags.g1 = o.g1;
    if (o.g_opt->count()) flags.g = o.g;
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty() || path == "-") {
        out << text;
        return kOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!(file << text) || !file.flush()) {
        err << "cra: cannot write " << path << "\n";
        return kPreconditionError;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coupled-resonator array with a two-point emitter", "cra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("cra ") + kVersion);

    ModelFlags flags;
    std::map<const CLI::App*, ModelOptions> model_opts;
    std::string out_path;
    std::function<void(std::ostream&)> action;
    auto model_cmd = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        add_model_flags(cmd, flags, model_opts[cmd], out_path);
        return cmd;
    };

    int band_points = 257;
    auto* band = model_cmd("band", "Dispersion relation over the Brillouin zone");
    band->add_option("--points", band_points, "Number of k samples")->capture_default_str();
    band->callback([&] { action = [&](std::ostream& o) { cmd_band(flags, band_points, o); }; });

    int profile = 0;
    auto* bound = model_cmd("bound", "Bound-state energies, localization and amplitudes");
    auto* profile_opt = bound->add_option(
        "--profile", profile, "Emit photon amplitudes for j in [1-P, P] instead of the summary");
    bound->callback([&] {
        std::optional<int> p;
        if (profile_opt->count()) p = profile;
        action = [&, p](std::ostream& o) { cmd_bound(flags, p, o); };
    });

    double k_value = 0.0;
    int scatter_points = 200;
    auto* scatter = model_cmd("scatter", "Single-photon transmission and reflection");
    auto* k_opt = scatter->add_option("--k", k_value, "Single wave number in (0, pi)");
    scatter->add_option("--points", scatter_points, "Midpoint k samples over (0, pi)")
        ->capture_default_str();
    scatter->callback([&] {
        std::optional<double> k;
        if (k_opt->count()) k = k_value;
        action = [&, k](std::ostream& o) { cmd_scatter(flags, k, scatter_points, o); };
    });

    auto* chiral = model_cmd("chirality", "Left/right photon weight of each bound state");
    chiral->callback([&] { action = [&](std::ostream& o) { cmd_chirality(flags, o); }; });

    DynamicsSpec dyn;
    std::size_t sites = 0;
    auto* dynamics = model_cmd("dynamics", "Emitter population P_e(t)");
    dynamics->add_option("--t-max", dyn.t_max, "Final time")->required();
    dynamics->add_option("--dt", dyn.dt, "Sample spacing")->capture_default_str();
    dynamics->add_option("--nk", dyn.nk, "Brillouin-zone grid size")->capture_default_str();
    dynamics->add_option("--method", dyn.method, "spectral, oracle or both")
        ->check(CLI::IsMember({"spectral", "oracle", "both"}))
        ->capture_default_str();
    auto* sites_opt =
        dynamics->add_option("--sites", sites, "Oracle lattice size (default: light cone)");
    dynamics->callback([&] {
        if (sites_opt->count()) dyn.sites = sites;
        action = [&](std::ostream& o) { cmd_dynamics(flags, dyn, o); };
    });

    SweepSpec sweep_spec;
    auto* sweep = model_cmd("sweep", "Parameter sweep over one axis");
    sweep->add_option("--axis", sweep_spec.axis, "g0, g1, g or Omega")
        ->required()
        ->check(CLI::IsMember({"g0", "g1", "g", "Omega"}));
    sweep->add_option("--start", sweep_spec.start, "First axis value")->required();
    sweep->add_option("--stop", sweep_spec.stop, "Last axis value")->required();
    sweep->add_option("--points", sweep_spec.points, "Number of axis values")->required();
    sweep->add_option("--quantity", sweep_spec.quantity, "levels, chirality or bound-weight")
        ->check(CLI::IsMember({"levels", "chirality", "bound-weight"}))
        ->capture_default_str();
    sweep->add_option("--nk", sweep_spec.nk, "Grid size for bound-weight")->capture_default_str();
    sweep->add_option("--threads", sweep_spec.threads, "Worker threads (0: all cores)")
        ->capture_default_str();
    sweep->callback([&] { action = [&](std::ostream& o) { cmd_sweep(flags, sweep_spec, o); }; });

    std::uint64_t seed = 7;
    double tolerance_scale = 1.0;
    std::optional<ValidationReport> report;
    auto* validate = app.add_subcommand("validate", "Cross-check analytic results against oracles");
    validate->add_option("--seed", seed, "Random seed")->capture_default_str();
    validate->add_option("--tolerance-scale", tolerance_scale, "Multiplier on every tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    validate->add_option("--out", out_path, "Report path (default: standard output)");
    validate->callback([&] {
        action = [&](std::ostream& o) {
            report = run_validation(seed, tolerance_scale);
            o << report->to_json();
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (auto it = model_opts.find(app.get_subcommands().front()); it != model_opts.end()) {
            collect(it->second, flags);
        }
        std::ostringstream buffer;
        action(buffer);
        if (int code = emit(buffer.str(), out_path, out, err); code != kOk) return code;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kOk : kUsageError;
    } catch (const UsageError& e) {
        err << "cra: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "cra: invalid input: " << e.what() << "\n";
        return kUsageError;
    } catch (const PreconditionError& e) {
        err << "cra: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const std::exception& e) {
        err << "cra: " << e.what() << "\n";
        return kValidationFailure;
    }

    if (report && !report->passed()) {
        for (const auto& c : report->checks) {
            if (!c.passed) {
                err << "cra validate: FAILED " << c.name << " (metric " << c.metric
                    << ", tolerance " << c.tolerance << ") " << c.detail << "\n";
            }
        }
        return kValidationFailure;
    }
    return kOk;
}

}  // namespace cra::cli
