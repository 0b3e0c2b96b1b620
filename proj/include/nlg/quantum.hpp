#pragma once

#include <array>
#include <complex>
#include <vector>

#include "nlg/behavior.hpp"
#include "nlg/game.hpp"

namespace nlg {

// Float-valued behavior produced by quantum models; same canonical indexing
// as the exact Behavior.
struct FloatBehavior {
    int n;
    std::vector<double> p;

    explicit FloatBehavior(int n_) : n(n_), p(std::size_t{1} << (2 * n_)) {}

    double& at(Bits out, Bits in) { return p[(static_cast<std::size_t>(out) << n) | in]; }
    double at(Bits out, Bits in) const { return p[(static_cast<std::size_t>(out) << n) | in]; }
};

// Bloch-sphere direction of a +-1 qubit observable; eigenvalue +1 maps to
// output bit 0.
struct MeasurementSetting {
    double theta;
    double phi;
};

struct QuantumModel {
    int n;
    std::vector<std::complex<double>> state;                 // dimension 2^n, unit norm
    std::vector<std::array<MeasurementSetting, 2>> settings;  // per party, per input
};

struct Tolerance {
    double eps = 1e-9;
};

QuantumModel make_model(int n, std::vector<std::complex<double>> state,
                        std::vector<std::array<MeasurementSetting, 2>> settings);

// (|0...0> + |1...1>)/sqrt(2)
std::vector<std::complex<double>> ghz(int n);

// P(x|X) = || (tensor of chosen eigenprojectors) |psi> ||^2
FloatBehavior behavior_from_model(const QuantumModel& m);

double value(const BellFunctional& f, const FloatBehavior& b);

// Largest violation of normalization / per-party no-signaling, for diagnostics.
double ns_residual(const FloatBehavior& b);
double normalization_residual(const FloatBehavior& b);

// Equatorial settings under which the GHZ state reaches S_n value (2+sqrt 2)/4.
std::vector<std::array<MeasurementSetting, 2>> optimal_svetlichny_settings(
    const SvetlichnyGame& game);
std::vector<std::array<MeasurementSetting, 2>> optimal_svetlichny_settings(int n);

struct AngleSearchResult {
    double value;
    std::vector<std::array<MeasurementSetting, 2>> settings;
};

// Best functional value over equatorial measurement angles on a fixed state:
// per-angle grid scan plus cyclic coordinate descent. A lower bound on max_Q.
AngleSearchResult angle_search(const BellFunctional& f,
                               const std::vector<std::complex<double>>& state,
                               int grid_density = 24);

// Entry-wise rounding to denominator `den`, for the float-to-rational bridge.
Behavior round_to_rational(const FloatBehavior& b, long den);

}  // namespace nlg
