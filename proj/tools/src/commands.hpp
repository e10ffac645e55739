#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "cra/model.hpp"

namespace cra::cli {

/// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelFlags {
    double omega_c = 200.0;
    std::optional<double> omega;  ///< defaults to omega_c
    double hopping = 1.0;
    std::optional<double> g0;
    std::optional<double> g1;
    std::optional<double> g;

    double coupling0() const { return g ? *g : g0.value_or(0.0); }
    double coupling1() const { return g ? *g : g1.value_or(0.0); }
    double emitter() const { return omega.value_or(omega_c); }
    ModelParams build() const;
    std::string coupling_note() const;
};

void cmd_band(const ModelFlags& flags, int points, std::ostream& out);
void cmd_bound(const ModelFlags& flags, std::optional<int> profile, std::ostream& out);
void cmd_scatter(const ModelFlags& flags, std::optional<double> k, int points, std::ostream& out);
void cmd_chirality(const ModelFlags& flags, std::ostream& out);

struct DynamicsSpec {
    double t_max = 0.0;
    double dt = 0.1;
    std::size_t nk = 16384;
    std::string method = "spectral";
    std::optional<std::size_t> sites;
};

void cmd_dynamics(const ModelFlags& flags, const DynamicsSpec& spec, std::ostream& out);

struct SweepSpec {
    std::string axis;
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    std::string quantity = "levels";
    std::size_t nk = 16384;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

void cmd_sweep(const ModelFlags& flags, const SweepSpec& spec, std::ostream& out);

}  // namespace cra::cli
