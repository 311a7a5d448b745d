// Copyright 2026 The qopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qopt/types.hpp"

namespace qopt::gate {

/// Piecewise-constant control amplitudes: one row per control line, one
/// column per time step of length dt.
struct PulseSequence {
  Eigen::MatrixXd amplitudes;  // lines x steps
  double dt = 1.0;

  std::size_t lines() const {
    return static_cast<std::size_t>(amplitudes.rows());
  }
  std::size_t steps() const {
    return static_cast<std::size_t>(amplitudes.cols());
  }
  double tau() const { return static_cast<double>(steps()) * dt; }
};

/// Flat parameter layout used by the optimizer: index = line * steps + t.
std::vector<double> flatten_pulses(const PulseSequence& pulses);
PulseSequence unflatten_pulses(std::span<const double> values,
                               std::size_t lines, std::size_t steps,
                               double dt);

/// Qubit-chain control model: fixed ZZ nearest-neighbour couplings and Z
/// detunings, with control line i driving X on qubit i.
struct HamiltonianSpec {
  int n_qubits = 3;
  std::vector<double> couplings;  // size n_qubits - 1
  std::vector<double> detunings;  // size n_qubits

  int dimension() const { return 1 << n_qubits; }
  void validate() const;
};

/// A gate-synthesis instance: target unitary, control model, time grid,
/// and amplitude box. Operator caches are built once by make_gate_problem.
struct GateProblem {
  Eigen::MatrixXcd target;
  HamiltonianSpec hamiltonian;
  double dt = 1.0;
  std::size_t steps = 27;  // T
  double amplitude_bound = 0.0;

  Eigen::MatrixXcd h_static;                // detunings + couplings
  std::vector<Eigen::MatrixXcd> x_controls; // X_i per qubit

  /// Hamiltonian for one time step given the control column.
  Eigen::MatrixXcd step_hamiltonian(std::span<const double> controls) const;
};

/// Validates the spec, checks the target is unitary, and builds the
/// operator caches.
GateProblem make_gate_problem(Eigen::MatrixXcd target, HamiltonianSpec spec,
                              double dt, std::size_t steps,
                              double amplitude_bound);

/// The default 3-qubit instance: Ising chain with J = 2*pi*0.05, zero
/// detunings, |eps| <= 2*pi*0.5, T = 27 steps of dt = 1, Toffoli target.
GateProblem toffoli_problem();

Eigen::MatrixXcd toffoli_gate();

/// U = exp(-i H dt) for Hermitian H (checked to 1e-10), computed by
/// eigendecomposition.
Eigen::MatrixXcd propagate_step(const Eigen::MatrixXcd& hamiltonian,
                                double dt);

/// Time-ordered product U(eps(tau - dt)) ... U(eps(0)).
Eigen::MatrixXcd compose_unitary(const PulseSequence& pulses,
                                 const GateProblem& problem);

/// |tr(target^dagger approx)| / d; insensitive to global phase.
double intrinsic_fidelity(const Eigen::MatrixXcd& target,
                          const Eigen::MatrixXcd& approx);

/// Per-line convolution with a normalized Gaussian kernel of width
/// kernel_sigma (time units), truncated at +-4 sigma with edge samples
/// replicated. kernel_sigma = 0 is the identity.
PulseSequence gaussian_filter(const PulseSequence& pulses,
                              double kernel_sigma);

struct RobustnessPoint {
  double delta_eps = 0.0;
  double mean_fidelity = 0.0;
  double std_error = 0.0;
};

/// Post-hoc noise scan: for each grid value, `trials` perturbations
/// eps + delta_eps * rand(-1, 1) per bin per line are composed directly
/// (no filtering) and the fidelities averaged.
std::vector<RobustnessPoint> robustness_scan(
    const PulseSequence& pulses, const GateProblem& problem,
    std::span<const double> delta_eps_grid, int trials, RngStream& rng);

/// Deterministic fitness: intrinsic fidelity of the Gaussian-filtered
/// pulse sequence reconstructed from the flat parameter vector.
Objective gate_objective(const GateProblem& problem, double filter_sigma);

/// Amplitude box for the flat parameter vector (non-periodic clamp).
Bounds pulse_bounds(const GateProblem& problem);

}  // namespace qopt::gate
