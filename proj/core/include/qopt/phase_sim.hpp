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

#include <complex>
#include <cstdint>
#include <vector>

#include "qopt/types.hpp"

namespace qopt::phase {

/// File-format / convention tag for policies produced by this simulator.
inline constexpr const char* kConventionVersion = "sine-exit-port-v1";

/// Adaptive interferometric phase estimation instance: N photons fed one
/// at a time through a two-mode interferometer with Gaussian phase noise
/// of width sigma and per-photon loss probability eta. A sharpness
/// estimate averages over trials random true phases.
struct PhaseSimConfig {
  int n_photons = 4;        // N
  double sigma = 0.0;       // phase-noise std-dev (radians)
  double eta = 0.0;         // photon-loss probability
  std::int64_t trials = 0;  // K; 0 = default 10 * N^2

  std::int64_t effective_trials() const {
    return trials > 0 ? trials
                      : static_cast<std::int64_t>(10) * n_photons * n_photons;
  }
  void validate() const;
};

/// Markov feedback policy: after outcome x for photon m the controllable
/// phase moves by +delta[m] (x = 0) or -delta[m] (x = 1), wrapped into
/// [0, 2*pi).
struct Policy {
  std::vector<double> deltas;  // radians, each in [0, 2*pi)
};

/// Pure state of the remaining n photons in the symmetric two-mode basis
/// |k photons in arm a, n-k in arm b>, k = 0..n.
struct SymmetricState {
  std::vector<std::complex<double>> amplitudes;  // length n + 1

  int photons() const { return static_cast<int>(amplitudes.size()) - 1; }
  double norm_squared() const;
};

/// The entangled input state with amplitudes
/// sqrt(2 / (N+2)) * sin((k+1) * pi / (N+2)).
SymmetricState make_sine_state(int n_photons);

struct MeasurementResult {
  int outcome = 0;           // exit port, 0 or 1
  double probability = 0.0;  // branch probability actually used
};

/// Branch probabilities of the next photon exiting port 0/1 given the
/// effective phase theta = phi - Phi + noise, without sampling.
/// p(0) + p(1) = 1 for any normalized state.
std::pair<double, double> exit_probabilities(const SymmetricState& state,
                                             double theta);

/// Measures one photon: exit-port Kraus update
///   (A_x v)_k = (e^{i theta} sqrt(k+1) v_{k+1} + (-1)^x sqrt(n-k) v_k)
///               / sqrt(2 n)
/// with outcome x sampled from the branch norms; the state is renormalized
/// and loses one photon. For a single photon this reduces to
/// p(0) = cos^2(theta / 2).
MeasurementResult measure_photon(SymmetricState& state, double theta,
                                 RngStream& rng);

/// Removes one photon without producing a detector click: the lost arm is
/// sampled proportionally to its mean occupation and the corresponding
/// annihilation applied, keeping the trajectory pure.
void lose_photon(SymmetricState& state, RngStream& rng);

/// Feedback update rule: Phi_m = Phi_{m-1} + (-1)^x * delta, wrapped into
/// [0, 2*pi).
double feedback_step(double phi_prev, int outcome, double delta);

enum class PhotonEvent : std::int8_t { kExit0 = 0, kExit1 = 1, kLost = 2 };

struct TrajectoryOutcome {
  std::vector<PhotonEvent> events;  // one per photon (filled when recorded)
  int detected = 0;                 // M
  double phi_control = 0.0;         // Phi_M after the last update
  double estimate = 0.0;            // Phi_M mod 2*pi
  bool all_lost = false;
};

/// Runs one adaptive estimation round: photons are processed in order;
/// lost photons leave the control phase unchanged but still consume their
/// policy entry. Phi_0 = 0.
TrajectoryOutcome simulate_trajectory(const Policy& policy, double phi,
                                      const PhaseSimConfig& config,
                                      RngStream& rng,
                                      bool record_events = false);

/// Sharpness of a synthetic residual sample: |sum_k exp(i theta_k)| / K.
double sharpness_of_residuals(std::span<const double> residuals);

/// One Monte-Carlo sharpness sample: K true phases uniform on [0, 2*pi),
/// one trajectory each, S = |sum exp(i (phi_k - estimate_k))| / K.
/// A fresh training set is drawn per call.
double sharpness(const Policy& policy, const PhaseSimConfig& config,
                 RngStream& rng);

/// Holevo variance V_H = S^-2 - 1. S = 0 maps to +infinity; S outside
/// (0, 1] throws.
double holevo_variance(double sharpness_value);

/// Packages sharpness as a stochastic fitness (to be maximized);
/// dimension equals the photon count.
Objective policy_objective(const PhaseSimConfig& config);

/// Policies live on the torus [0, 2*pi)^N.
Bounds policy_bounds(int n_photons);

}  // namespace qopt::phase
