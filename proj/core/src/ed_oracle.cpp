#include "cra/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cra/bound_state.hpp"
#include "cra/errors.hpp"
#include "symmetric_eigen.hpp"

namespace cra {
namespace {

constexpr std::size_t kMinSites = 11;
constexpr double kBoundaryWeightTolerance = 1e-8;
constexpr std::size_t kBoundaryStrip = 10;

struct TailFit {
    double kappa;
};

// Least-squares slope of log|v| against distance from the coupled pair, one
// side at a time, averaged with point-count weights.
TailFit fit_tail(const FiniteModel& model, const Eigen::VectorXd& v, double kappa_guess) {
    const auto origin = static_cast<long>(model.origin_site());
    const auto n = static_cast<long>(model.n_sites());
    const double peak = v.head(n).cwiseAbs().maxCoeff();
    const long reach = std::min<long>(origin - 20, static_cast<long>(std::ceil(25.0 / kappa_guess)));

    double slope_sum = 0.0;
    double count_sum = 0.0;
    for (int side : {-1, 1}) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
        for (long d = 2; d <= reach; ++d) {
            // Left: j = -d; right: j = 1 + d.
            const long site = side < 0 ? origin - d : origin + 1 + d;
            const double a = std::abs(v(site));
            if (a < 1e-11 * peak) break;
            const double y = std::log(a);
            sx += d;
            sy += y;
            sxx += static_cast<double>(d) * d;
            sxy += d * y;
            cnt += 1;
        }
        if (cnt < 3) continue;
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        slope_sum += -slope * cnt;
        count_sum += cnt;
    }
    if (count_sum == 0) return {kappa_guess};
    return {slope_sum / count_sum};
}

struct WavepacketPlan {
    double start_distance;  // |j0|
    double duration;
    long half_length;
};

WavepacketPlan plan_wavepacket(const ModelParams& params, double k0, double width) {
    const double J = params.hopping();
    const double v = 2.0 * J * std::sin(k0);
    const double curvature = std::abs(2.0 * J * std::cos(k0));
    const double start = std::ceil(6.0 * width) + 10.0;
    auto spread = [&](double t) {
        const double s = curvature * t / (2.0 * width * width);
        return width * std::sqrt(1.0 + s * s);
    };
    // Run until both outgoing packets sit 7 widths clear of the emitter.
    double t = 2.0 * start / v;
    while (v * t - start < 7.0 * spread(t) + 10.0) t += 1.0 / J;
    t += 20.0 / J;
    const double far = std::max(v * t - start + 7.0 * spread(t), start + 6.0 * width) + 20.0;
    return {start, t, static_cast<long>(std::ceil(far))};
}

}  // namespace

FiniteModel::FiniteModel(const ModelParams& params, std::size_t n_sites)
    : params_(params), n_sites_(n_sites) {
    if (n_sites < kMinSites || n_sites % 2 == 0) {
        throw DomainError("finite model needs an odd site count >= 11, got " +
                          std::to_string(n_sites));
    }
    const auto dim = static_cast<Eigen::Index>(n_sites + 1);
    const auto e = static_cast<Eigen::Index>(n_sites);
    const auto i0 = static_cast<Eigen::Index>(origin_site());
    matrix_ = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < e; ++i) {
        matrix_(i, i) = params.omega_c();
        if (i + 1 < e) {
            matrix_(i, i + 1) = -params.hopping();
            matrix_(i + 1, i) = -params.hopping();
        }
    }
    matrix_(e, e) = params.omega();
    matrix_(e, i0) = matrix_(i0, e) = params.g0();
    matrix_(e, i0 + 1) = matrix_(i0 + 1, e) = params.g1();
}

FiniteModel build_finite_model(const ModelParams& params, std::size_t n_sites) {
    return {params, n_sites};
}

Eigen::VectorXd finite_spectrum(const FiniteModel& model) {
    return detail::symmetric_eigenvalues(model.matrix());
}

std::vector<double> out_of_band_energies(const FiniteModel& model, double margin_in_j) {
    const auto band = band_edges(model.params());
    const double margin = margin_in_j * model.params().hopping();
    const Eigen::VectorXd values = finite_spectrum(model);
    std::vector<double> out;
    for (double e : values) {
        if (e < band.lower_edge - margin || e > band.upper_edge + margin) out.push_back(e);
    }
    return out;
}

std::vector<OutOfBandLevel> out_of_band_levels(const FiniteModel& model, double margin_in_j) {
    const ModelParams& p = model.params();
    const auto band = band_edges(p);
    const double margin = margin_in_j * p.hopping();
    // Generous outer limits: levels cannot leave the Gershgorin discs.
    const double reach = 4.0 * p.hopping() + std::abs(p.detuning()) + 2.0 * (p.g0() + p.g1()) + 1.0;

    std::vector<OutOfBandLevel> levels;
    const std::pair<Branch, std::pair<double, double>> windows[] = {
        {Branch::lower, {band.lower_edge - reach, band.lower_edge - margin}},
        {Branch::upper, {band.upper_edge + margin, band.upper_edge + reach}},
    };
    const auto n = static_cast<Eigen::Index>(model.n_sites());
    const auto origin = static_cast<Eigen::Index>(model.origin_site());
    for (const auto& [branch, range] : windows) {
        const auto pairs = detail::symmetric_eigenpairs_in_range(model.matrix(), range.first,
                                                                 range.second);
        for (Eigen::Index c = 0; c < pairs.values.size(); ++c) {
            const Eigen::VectorXd v = pairs.vectors.col(c);
            OutOfBandLevel level{};
            level.branch = branch;
            level.energy = pairs.values(c);
            level.left_weight = v.head(origin + 1).squaredNorm();
            level.right_weight = v.segment(origin + 1, n - origin - 1).squaredNorm();
            level.emitter_weight = v(n) * v(n);
            const double guess = kappa_from_energy(p, level.energy, branch);
            level.fitted_kappa = fit_tail(model, v, guess).kappa;
            level.localization_length = 1.0 / level.fitted_kappa;
            levels.push_back(level);
        }
    }
    return levels;
}

std::size_t light_cone_sites(const ModelParams& params, double t_max) {
    const double bound = 2.0 * (2.0 * params.hopping() * t_max) + 200.0;
    auto n = static_cast<std::size_t>(std::floor(bound)) + 1;
    if (n % 2 == 0) ++n;
    return std::max(n, kMinSites);
}

ExactPropagator::ExactPropagator(const FiniteModel& model)
    : emitter_(model.emitter_index()), shift_(model.params().omega_c()) {
    auto pairs = detail::symmetric_eigenpairs(model.matrix());
    values_ = std::move(pairs.values);
    vectors_ = std::move(pairs.vectors);
}

Eigen::VectorXcd ExactPropagator::propagate(const Eigen::VectorXcd& initial, double t) const {
    const Eigen::VectorXcd coeffs = vectors_.transpose().cast<std::complex<double>>() * initial;
    Eigen::VectorXcd phased(coeffs.size());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        phased(i) = coeffs(i) * std::polar(1.0, -(values_(i) - shift_) * t);
    }
    return vectors_.cast<std::complex<double>>() * phased;
}

std::vector<double> ExactPropagator::emitter_return(std::span<const double> times) const {
    const auto e = static_cast<Eigen::Index>(emitter_);
    const Eigen::VectorXd weights = vectors_.row(e).transpose().array().square();
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        std::complex<double> amp = 0.0;
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            amp += weights(i) * std::polar(1.0, -(values_(i) - shift_) * t);
        }
        out.push_back(std::norm(amp));
    }
    return out;
}

TimeSeries evolve_exact(const FiniteModel& model, std::span<const double> times) {
    if (times.empty()) return {{}, {}, EvolutionMethod::oracle};
    const double t_max = *std::max_element(times.begin(), times.end());
    const std::size_t needed = light_cone_sites(model.params(), t_max);
    if (model.n_sites() < needed) {
        throw PreconditionError("light cone reaches the lattice boundary before t=" +
                                    std::to_string(t_max) + "; need at least " +
                                    std::to_string(needed) + " sites",
                                needed);
    }
    ExactPropagator propagator(model);
    return {{times.begin(), times.end()}, propagator.emitter_return(times), EvolutionMethod::oracle};
}

std::size_t wavepacket_sites(const ModelParams& params, double k0, double width) {
    const auto plan = plan_wavepacket(params, k0, width);
    return 2 * static_cast<std::size_t>(plan.half_length) + 1;
}

WavepacketResult wavepacket_transmission(const ModelParams& params, double k0, double width,
                                         std::size_t n_sites) {
    if (!(k0 > 0.2 && k0 < std::numbers::pi - 0.2)) {
        throw DomainError("wavepacket: k0 must lie in (0.2, pi - 0.2)");
    }
    if (!(width >= 10.0)) throw DomainError("wavepacket: width must be >= 10 sites");
    const auto plan = plan_wavepacket(params, k0, width);
    const std::size_t needed = 2 * static_cast<std::size_t>(plan.half_length) + 1;
    if (n_sites < needed) {
        throw DomainError("wavepacket would reach the lattice boundary; need at least " +
                          std::to_string(needed) + " sites");
    }

    const FiniteModel model(params, n_sites);
    const auto n = static_cast<Eigen::Index>(n_sites);
    const auto origin = static_cast<Eigen::Index>(model.origin_site());
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n + 1);
    for (Eigen::Index s = 0; s < n; ++s) {
        const double j = static_cast<double>(s - origin);
        const double x = j + plan.start_distance;
        psi(s) = std::polar(std::exp(-x * x / (4.0 * width * width)), k0 * j);
    }
    psi /= psi.norm();

    const ExactPropagator propagator(model);
    const Eigen::VectorXcd out = propagator.propagate(psi, plan.duration);

    const auto strip = static_cast<Eigen::Index>(kBoundaryStrip);
    const double edge_weight =
        out.head(strip).squaredNorm() + out.segment(n - strip, strip).squaredNorm();
    if (edge_weight > kBoundaryWeightTolerance) {
        throw DomainError("wavepacket reached the lattice boundary");
    }
    return {out.segment(origin + 1, n - origin - 1).squaredNorm(), out.head(origin + 1).squaredNorm(),
            std::norm(out(n)), plan.duration};
}

}  // namespace cra
