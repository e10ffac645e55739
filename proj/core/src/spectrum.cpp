#include "cra/spectrum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "cra/errors.hpp"
#include "cra/root_find.hpp"

namespace cra {
namespace {

constexpr double kInnerOffset = 1e-9;      // bracket start, units of J
constexpr double kInnerOffsetFloor = 1e-13;
constexpr int kMaxOuterDoublings = 40;

// Defect as a function of x = E - omega_c with |x| > 2J.
double defect_at_offset(const ModelParams& p, double x) {
    const double J = p.hopping();
    const double g0g1_over_j = p.g0() * p.g1() / J;
    const double ax = std::abs(x);
    // x sqrt(1 - 4J^2/x^2) = sign(x) sqrt(x^2 - 4J^2); factored for accuracy
    // near the band edge.
    const double root = std::copysign(std::sqrt((ax - 2.0 * J) * (ax + 2.0 * J)), x);
    const double lhs = (x + p.detuning() - g0g1_over_j) * root;
    const double rhs = p.g0() * p.g0() + p.g1() * p.g1() - g0g1_over_j * x;
    return lhs - rhs;
}

// Defect a distance d >= 0 outside the band edge on side `sign`.
double defect_outside_edge(const ModelParams& p, int sign, double d) {
    return defect_at_offset(p, sign * (2.0 * p.hopping() + d));
}

// Limit of the defect at the band edge: -(g0 - g1)^2 above, -(g0 + g1)^2 below.
double edge_limit(const ModelParams& p, int sign) {
    const double s = p.g0() - sign * p.g1();
    return -s * s;
}

std::optional<BoundStateEnergy> find_side(const ModelParams& p, Branch branch) {
    const int sign = branch_sign(branch);
    const double J = p.hopping();

    if (branch == Branch::upper && p.equal_couplings()) {
        // Edge limit is exactly zero; the analytic criterion certifies absence.
        const double g = p.g0();
        if (p.omega() + g * g / J <= p.omega_c() + 2.0 * J) return std::nullopt;
    }

    auto f = [&](double d) { return defect_outside_edge(p, sign, d); };

    double outer = 0.0;
    for (int m = 1; m <= kMaxOuterDoublings; ++m) {
        const double trial = J * std::ldexp(1.0, m);
        if (f(trial) > 0.0) {
            outer = trial;
            break;
        }
    }
    if (outer == 0.0) return std::nullopt;

    std::optional<double> d_root;
    for (double eps : {kInnerOffset, kInnerOffsetFloor}) {
        const double inner = eps * J;
        if (f(inner) <= 0.0) {
            d_root = bracketed_root(f, {inner, outer});
            break;
        }
    }
    if (!d_root && edge_limit(p, sign) < 0.0) {
        // Root hides within the floor offset; the edge itself is a valid
        // negative endpoint.
        d_root = bracketed_root(f, {0.0, kInnerOffsetFloor * J});
    }
    if (!d_root || !(*d_root > 0.0)) return std::nullopt;

    const double two_j = 2.0 * J;
    auto outside = [&](double e) { return sign * (e - p.omega_c()) > two_j; };
    double energy = p.omega_c() + sign * (two_j + *d_root);
    if (!outside(energy)) return std::nullopt;
    auto defect_e = [&](double e) { return defect_at_offset(p, e - p.omega_c()); };
    energy = polish_to_ulp(defect_e, energy, outside);
    return BoundStateEnergy{branch, energy, std::abs(defect_e(energy))};
}

}  // namespace

double bound_defect(const ModelParams& params, double energy) {
    const double x = energy - params.omega_c();
    if (!(std::abs(x) > 2.0 * params.hopping())) {
        throw DomainError("bound_defect: energy lies inside the closed band");
    }
    return defect_at_offset(params, x);
}

std::vector<BoundStateEnergy> bound_state_energies(const ModelParams& params) {
    std::vector<BoundStateEnergy> out;
    for (Branch b : {Branch::lower, Branch::upper}) {
        if (auto level = find_side(params, b)) out.push_back(*level);
    }
    return out;
}

UpperStateCheck has_upper_bound_state(const ModelParams& params) {
    bool present = false;
    for (const auto& level : bound_state_energies(params)) {
        if (level.branch == Branch::upper) present = true;
    }
    UpperStateCheck check{present, std::nullopt};
    const double J = params.hopping();
    if (params.equal_couplings()) {
        const double g = params.g0();
        const double margin = params.omega() + g * g / J - (params.omega_c() + 2.0 * J);
        check.analytic = margin > 0.0;
        if (*check.analytic != present) {
            // Predicted distance of the root from the edge, 4 c^2 J^3 / g^4.
            const double offset = 4.0 * margin * margin * J * J * J / (g * g * g * g);
            if (offset > kInnerOffsetFloor * J) {
                throw ConsistencyError("upper bound state: root scan disagrees with the analytic "
                                       "criterion for " + params.describe());
            }
        }
    } else if (!present) {
        // Near-equal couplings with E_f below the upper edge put the root at
        // d = ((g0 - g1)^2 / 2c)^2 / J, c = omega_c + 2J - Omega - g0 g1/J.
        const double c = params.omega_c() + 2.0 * J - params.omega() - params.g0() * params.g1() / J;
        const double split = params.g0() - params.g1();
        const double offset = c > 0.0 ? std::pow(split * split / (2.0 * c), 2) / J : HUGE_VAL;
        if (offset > kInnerOffsetFloor * J) {
            throw ConsistencyError("upper bound state missing although g0 != g1 for " +
                                   params.describe());
        }
    }
    return check;
}

std::optional<double> phase_boundary_g(double omega_c, double omega, double hopping) {
    if (!(hopping > 0.0)) throw DomainError("hopping J must be positive");
    const double gap = omega_c + 2.0 * hopping - omega;
    if (gap < 0.0) return std::nullopt;
    return std::sqrt(hopping * gap);
}

std::complex<double> ScatteringSolution::amplitude(int j) const {
    using namespace std::complex_literals;
    if (j <= 0) return std::exp(1i * (k * j)) + r * std::exp(-1i * (k * j));
    return t * std::exp(1i * (k * j));
}

namespace detail {

ScatteringSolution solve_scattering(const ModelParams& params, double k) {
    using namespace std::complex_literals;
    const double J = params.hopping();
    const double g0 = params.g0();
    const double g1 = params.g1();
    const std::complex<double> e_plus = std::exp(1i * k);
    const std::complex<double> e_minus = std::exp(-1i * k);
    // omega_k - Omega without forming omega_k.
    const double detuning_k = params.detuning() - 2.0 * J * std::cos(k);

    // Unknowns (t, r, u). Rows: lattice equation at j = 0, at j = 1, emitter.
    Eigen::Matrix3cd m;
    m << -J * e_plus, J * e_minus, g0,
         J, -J, g1,
         -g1 * e_plus, -g0, detuning_k;
    Eigen::Vector3cd rhs(-J * e_plus, J, g0);

    Eigen::FullPivLU<Eigen::Matrix3cd> lu(m);
    if (!lu.isInvertible()) {
        throw SolverError("scattering system singular at k=" + std::to_string(k) + " for " +
                          params.describe());
    }
    const Eigen::Vector3cd sol = lu.solve(rhs);
    return {k, sol(0), sol(1), sol(2)};
}

}  // namespace detail

ScatteringSolution scattering_solution(const ModelParams& params, double k) {
    if (!(k > 0.0 && k < std::numbers::pi)) {
        throw DomainError("scattering_solution: k must lie in (0, pi)");
    }
    return detail::solve_scattering(params, k);
}

}  // namespace cra
