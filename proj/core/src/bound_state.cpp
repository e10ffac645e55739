#include "cra/bound_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "cra/errors.hpp"

namespace cra {
namespace {

// arccosh(1 + y) without cancellation for small y.
double acosh_one_plus(double y) { return std::log1p(y + std::sqrt(y * (2.0 + y))); }

// 1 - e^{-2 kappa}
double one_minus_q2(double kappa) { return -std::expm1(-2.0 * kappa); }

constexpr int kMinTruncation = 200;
constexpr int kMaxTruncation = 20'000'000;

}  // namespace

double kappa_from_energy(const ModelParams& params, double energy, Branch branch) {
    const double two_j = 2.0 * params.hopping();
    const double outside = branch_sign(branch) * (energy - params.omega_c()) - two_j;
    if (!(outside > 0.0)) {
        throw DomainError("kappa_from_energy: energy is not outside the band on the requested side");
    }
    return acosh_one_plus(outside / two_j);
}

double BoundState::asymmetry() const {
    if (left == 0.0) return std::copysign(std::numeric_limits<double>::infinity(), right);
    return right / left;
}

double BoundState::decay() const { return std::exp(-kappa); }

double BoundState::norm() const {
    const double q = decay();
    return (left * left + right * right * q * q) / one_minus_q2(kappa) + emitter * emitter;
}

BoundState build_bound_state(const ModelParams& params, const BoundStateEnergy& level) {
    const int s = branch_sign(level.branch);
    const double J = params.hopping();
    const double g0 = params.g0();
    const double g1 = params.g1();
    const double kappa = kappa_from_energy(params, level.energy, level.branch);
    const double q = std::exp(-kappa);
    const double e_minus_omega = (level.energy - params.omega_c()) + params.detuning();

    // (left, right, emitter) spans the null space of the matching conditions
    //   j = 1:    J (left - right)                    = g1 u
    //   j = 0:   -s J (right q - left / q)            = g0 u
    //   emitter: (E - Omega) u = g0 left - s g1 q right
    // Use the best-conditioned cross product of two rows.
    const Eigen::Vector3d rows[3] = {
        {J, -J, -g1},
        {s * J / q, -s * J * q, -g0},
        {g0, -s * g1 * q, -e_minus_omega},
    };
    Eigen::Vector3d null = rows[0].cross(rows[2]);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}}) {
        const Eigen::Vector3d c = rows[a].cross(rows[b]);
        if (c.norm() > null.norm()) null = c;
    }
    double left = null(0);
    double right = null(1);
    double emitter = null(2);
    if (g0 == g1) {
        // Mirror symmetry about j = 1/2 fixes |alpha_0| = |alpha_1| exactly.
        const double m = 0.5 * (std::abs(left) + std::abs(right) * q);
        left = std::copysign(m, left);
        right = std::copysign(m / q, right);
    }

    const double norm2 = (left * left + right * right * q * q) / one_minus_q2(kappa) +
                         emitter * emitter;
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw SolverError("degenerate bound-state amplitudes for " + params.describe());
    }
    const double scale = 1.0 / std::sqrt(norm2);
    left *= scale;
    right *= scale;
    emitter *= scale;
    // Fix the global sign so N >= 0 (and the emitter amplitude when N = 0).
    const double lead = left != 0.0 ? left : emitter;
    if (lead < 0.0) {
        left = -left;
        right = -right;
        emitter = -emitter;
    }
    return {level.branch, level.energy, kappa, left, right, emitter, g0 == 0.0 || g1 == 0.0};
}

double wavefunction_amplitude(const BoundState& state, int j) {
    const double parity = (state.branch == Branch::upper && (j % 2 != 0)) ? -1.0 : 1.0;
    const double envelope = std::exp(-state.kappa * std::abs(static_cast<double>(j)));
    return parity * (j <= 0 ? state.left : state.right) * envelope;
}

ChiralityReport chirality(const BoundState& state) {
    ChiralityReport report{};
    const double q2 = std::exp(-2.0 * state.kappa);
    const double l2 = state.left * state.left;
    const double r2q2 = state.right * state.right * q2;
    report.closed = (l2 - r2q2) / (l2 + r2q2);

    const double cut = std::ceil(40.0 / state.kappa);
    report.truncation =
        static_cast<int>(std::clamp(cut, static_cast<double>(kMinTruncation),
                                    static_cast<double>(kMaxTruncation)));
    // Sum the small tail terms first.
    double left_sum = 0.0;
    double right_sum = 0.0;
    for (int j = report.truncation; j >= 1; --j) {
        const double a_right = wavefunction_amplitude(state, j);
        const double a_left = wavefunction_amplitude(state, -j);
        right_sum += a_right * a_right;
        left_sum += a_left * a_left;
    }
    left_sum += state.left * state.left;
    report.left_weight = left_sum;
    report.right_weight = right_sum;
    report.direct = (left_sum - right_sum) / (left_sum + right_sum);
    report.axis_warning = state.single_site_coupling;
    return report;
}

}  // namespace cra
