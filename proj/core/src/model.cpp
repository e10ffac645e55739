#include "cra/model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "cra/errors.hpp"

namespace cra {

ModelParams::ModelParams(double omega_c, double omega, double hopping, double g0, double g1)
    : omega_c_(omega_c), omega_(omega), hopping_(hopping), g0_(g0), g1_(g1) {
    if (!std::isfinite(omega_c) || !std::isfinite(omega) || !std::isfinite(hopping) ||
        !std::isfinite(g0) || !std::isfinite(g1)) {
        throw DomainError("model parameters must be finite");
    }
    if (!(hopping > 0.0)) throw DomainError("hopping J must be positive");
    if (g0 < 0.0 || g1 < 0.0) throw DomainError("couplings g0, g1 must be nonnegative");
    if (!(g0 + g1 > 0.0)) throw DomainError("emitter is decoupled (g0 = g1 = 0)");
}

ModelParams ModelParams::shifted(double shift) const {
    return {omega_c_ + shift, omega_ + shift, hopping_, g0_, g1_};
}

ModelParams ModelParams::with_couplings(double g0, double g1) const {
    return {omega_c_, omega_, hopping_, g0, g1};
}

ModelParams ModelParams::with_omega(double omega) const {
    return {omega_c_, omega, hopping_, g0_, g1_};
}

std::string ModelParams::describe() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "omega_c=%.12g Omega=%.12g J=%.12g g0=%.12g g1=%.12g",
                  omega_c_, omega_, hopping_, g0_, g1_);
    return buf;
}

double dispersion(const ModelParams& params, double k) {
    if (!(k >= -std::numbers::pi && k <= std::numbers::pi)) {
        throw DomainError("wave number outside [-pi, pi]");
    }
    return params.omega_c() - 2.0 * params.hopping() * std::cos(k);
}

BandGeometry band_edges(const ModelParams& params) {
    const double two_j = 2.0 * params.hopping();
    return {params.omega_c() - two_j, params.omega_c() + two_j};
}

double group_velocity(const ModelParams& params, double k) {
    return 2.0 * params.hopping() * std::sin(k);
}

}  // namespace cra
