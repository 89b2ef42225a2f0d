#pragma once

#include <string>
#include <string_view>

namespace kharper {

// Parameters of the generalized kicked Harper Hamiltonian
//   H = L cos(p) + K V(q) sum_n delta(t - n),
//   V(q) = cos(q + phi1) + eta sin(2q + phi2),
// in dimensionless units. `hbar` is the effective Planck constant
// (i hbar = [q, p]) and is only meaningful for quantum runs.
struct ModelParams {
    double K = 0.0;     // kick strength, >= 0
    double L = 0.0;     // kinetic strength, >= 0
    double phi1 = 0.0;  // phase offset of the fundamental harmonic
    double phi2 = 0.0;  // phase offset of the second harmonic
    double eta = 0.0;   // second-harmonic amplitude
    double hbar = 1.0;  // effective Planck constant, > 0

    // Throws std::invalid_argument on non-finite or out-of-range fields.
    void validate() const;
};

// The kicking potential V(q) = cos(q + phi1) + eta sin(2q + phi2).
double potential(const ModelParams& params, double q);

// V'(q) = -sin(q + phi1) + 2 eta cos(2q + phi2).
double potential_derivative(const ModelParams& params, double q);

// True iff max_q |V(pi - q) - V(q)| < tol on a dense q grid. The kinetic
// term L cos(p) is even in p, so this single condition decides whether the
// map is invariant under q -> pi - q, p -> -p (the symmetry that forces a
// vanishing q-averaged current).
bool is_ratchet_symmetric(const ModelParams& params, double tol = 1e-10,
                          int grid_points = 1024);

// hbar = 2 pi / (6 + sigma_g), sigma_g = (sqrt(5) - 1) / 2. Makes
// hbar / 2 pi as irrational as possible, keeping the dynamics away from
// quantum resonances.
double resonance_free_hbar();

// Flat key=value serialization (keys: K, L, phi1, phi2, eta, hbar),
// one pair per line. parse accepts '#' comments and blank lines and
// leaves fields missing from the text at their current values.
std::string format_model_params(const ModelParams& params);
ModelParams parse_model_params(std::string_view text);

}  // namespace kharper
