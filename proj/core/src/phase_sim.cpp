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

#include "qopt/phase_sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qopt::phase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double angle) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  return wrapped;
}

// Scratch buffers reused across the photons of one trajectory and across
// the trajectories of one sharpness sample.
struct Workspace {
  std::vector<double> sqrt_table;  // sqrt(0..n)
  std::vector<std::complex<double>> branch0;
  std::vector<std::complex<double>> branch1;

  void prepare(int n_photons) {
    sqrt_table.resize(static_cast<std::size_t>(n_photons) + 1);
    for (std::size_t k = 0; k < sqrt_table.size(); ++k) {
      sqrt_table[k] = std::sqrt(static_cast<double>(k));
    }
    branch0.resize(static_cast<std::size_t>(n_photons));
    branch1.resize(static_cast<std::size_t>(n_photons));
  }
};

// Builds both exit branches A_0 v and A_1 v and their norms.
void build_branches(const SymmetricState& state, double theta, Workspace& ws,
                    double& p0, double& p1) {
  const int n = state.photons();
  const double inv = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  const std::complex<double> phase = std::polar(1.0, theta);

  p0 = 0.0;
  p1 = 0.0;
  for (int k = 0; k < n; ++k) {
    const std::complex<double> transmitted =
        phase * state.amplitudes[static_cast<std::size_t>(k) + 1] *
        (ws.sqrt_table[static_cast<std::size_t>(k) + 1] * inv);
    const std::complex<double> reflected =
        state.amplitudes[static_cast<std::size_t>(k)] *
        (ws.sqrt_table[static_cast<std::size_t>(n - k)] * inv);
    const std::complex<double> plus = transmitted + reflected;
    const std::complex<double> minus = transmitted - reflected;
    ws.branch0[static_cast<std::size_t>(k)] = plus;
    ws.branch1[static_cast<std::size_t>(k)] = minus;
    p0 += std::norm(plus);
    p1 += std::norm(minus);
  }
}

MeasurementResult measure_photon_impl(SymmetricState& state, double theta,
                                      double draw, Workspace& ws) {
  const int n = state.photons();
  if (n < 1) throw std::invalid_argument("measure_photon: no photons left");

  double p0, p1;
  build_branches(state, theta, ws, p0, p1);

  MeasurementResult result;
  if (draw <= p0) {
    result.outcome = 0;
    result.probability = p0;
  } else {
    result.outcome = 1;
    result.probability = p1;
  }

  const auto& branch = result.outcome == 0 ? ws.branch0 : ws.branch1;
  const double scale = 1.0 / std::sqrt(result.probability);
  state.amplitudes.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    state.amplitudes[static_cast<std::size_t>(k)] =
        branch[static_cast<std::size_t>(k)] * scale;
  }
  return result;
}

void lose_photon_impl(SymmetricState& state, double draw, Workspace& ws) {
  const int n = state.photons();
  if (n < 1) throw std::invalid_argument("lose_photon: no photons left");

  double occupation_a = 0.0;  // mean photon number in arm a
  for (int k = 1; k <= n; ++k) {
    occupation_a += static_cast<double>(k) *
                    std::norm(state.amplitudes[static_cast<std::size_t>(k)]);
  }
  const double p_arm_a = occupation_a / static_cast<double>(n);

  std::vector<std::complex<double>>& amps = state.amplitudes;
  if (draw <= p_arm_a) {
    // Annihilate in arm a: w_k = sqrt(k+1) v_{k+1}; squared norm is the
    // mean occupation itself.
    const double scale = 1.0 / std::sqrt(occupation_a);
    for (int k = 0; k < n; ++k) {
      amps[static_cast<std::size_t>(k)] =
          ws.sqrt_table[static_cast<std::size_t>(k) + 1] *
          amps[static_cast<std::size_t>(k) + 1] * scale;
    }
  } else {
    const double scale =
        1.0 / std::sqrt(static_cast<double>(n) - occupation_a);
    for (int k = 0; k < n; ++k) {
      amps[static_cast<std::size_t>(k)] =
          ws.sqrt_table[static_cast<std::size_t>(n - k)] *
          amps[static_cast<std::size_t>(k)] * scale;
    }
  }
  amps.resize(static_cast<std::size_t>(n));
}

TrajectoryOutcome run_trajectory(const Policy& policy, double phi,
                                 const PhaseSimConfig& config, RngStream& rng,
                                 const SymmetricState& input, Workspace& ws,
                                 bool record_events) {
  SymmetricState state = input;
  TrajectoryOutcome outcome;
  if (record_events) {
    outcome.events.reserve(static_cast<std::size_t>(config.n_photons));
  }

  double phi_control = 0.0;  // Phi_0
  int detected = 0;

  for (int m = 0; m < config.n_photons; ++m) {
    if (config.eta > 0.0 && rng.uniform() <= config.eta) {
      // Lost photon: no click, no feedback; the policy entry for this
      // photon index is consumed anyway.
      lose_photon_impl(state, rng.uniform(), ws);
      if (record_events) outcome.events.push_back(PhotonEvent::kLost);
      continue;
    }
    double theta = phi - phi_control;
    if (config.sigma > 0.0) theta += rng.gaussian(0.0, config.sigma);
    const MeasurementResult measured =
        measure_photon_impl(state, theta, rng.uniform(), ws);
    phi_control = feedback_step(phi_control, measured.outcome,
                                policy.deltas[static_cast<std::size_t>(m)]);
    ++detected;
    if (record_events) {
      outcome.events.push_back(measured.outcome == 0 ? PhotonEvent::kExit0
                                                     : PhotonEvent::kExit1);
    }
  }

  outcome.detected = detected;
  outcome.phi_control = phi_control;
  outcome.estimate = wrap_two_pi(phi_control);
  outcome.all_lost = detected == 0;
  return outcome;
}

}  // namespace

void PhaseSimConfig::validate() const {
  if (n_photons < 1) throw std::invalid_argument("n_photons must be >= 1");
  if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
  if (eta < 0.0 || eta >= 1.0) {
    throw std::invalid_argument("eta must lie in [0, 1)");
  }
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
}

double SymmetricState::norm_squared() const {
  double sum = 0.0;
  for (const auto& amp : amplitudes) sum += std::norm(amp);
  return sum;
}

SymmetricState make_sine_state(int n_photons) {
  if (n_photons < 1) {
    throw std::invalid_argument("make_sine_state: need at least one photon");
  }
  const double denom = static_cast<double>(n_photons) + 2.0;
  const double scale = std::sqrt(2.0 / denom);
  SymmetricState state;
  state.amplitudes.resize(static_cast<std::size_t>(n_photons) + 1);
  for (int k = 0; k <= n_photons; ++k) {
    state.amplitudes[static_cast<std::size_t>(k)] =
        scale * std::sin((static_cast<double>(k) + 1.0) * std::numbers::pi /
                         denom);
  }
  return state;
}

std::pair<double, double> exit_probabilities(const SymmetricState& state,
                                             double theta) {
  if (state.photons() < 1) {
    throw std::invalid_argument("exit_probabilities: no photons left");
  }
  Workspace ws;
  ws.prepare(state.photons());
  double p0, p1;
  build_branches(state, theta, ws, p0, p1);
  return {p0, p1};
}

MeasurementResult measure_photon(SymmetricState& state, double theta,
                                 RngStream& rng) {
  Workspace ws;
  ws.prepare(state.photons());
  return measure_photon_impl(state, theta, rng.uniform(), ws);
}

void lose_photon(SymmetricState& state, RngStream& rng) {
  Workspace ws;
  ws.prepare(state.photons());
  lose_photon_impl(state, rng.uniform(), ws);
}

double feedback_step(double phi_prev, int outcome, double delta) {
  return wrap_two_pi(phi_prev + (outcome == 0 ? delta : -delta));
}

TrajectoryOutcome simulate_trajectory(const Policy& policy, double phi,
                                      const PhaseSimConfig& config,
                                      RngStream& rng, bool record_events) {
  config.validate();
  if (policy.deltas.size() != static_cast<std::size_t>(config.n_photons)) {
    throw std::invalid_argument("policy length must equal the photon count");
  }
  Workspace ws;
  ws.prepare(config.n_photons);
  const SymmetricState input = make_sine_state(config.n_photons);
  return run_trajectory(policy, phi, config, rng, input, ws, record_events);
}

double sharpness_of_residuals(std::span<const double> residuals) {
  std::complex<double> acc{0.0, 0.0};
  for (double theta : residuals) acc += std::polar(1.0, theta);
  return std::abs(acc) / static_cast<double>(residuals.size());
}

double sharpness(const Policy& policy, const PhaseSimConfig& config,
                 RngStream& rng) {
  config.validate();
  if (policy.deltas.size() != static_cast<std::size_t>(config.n_photons)) {
    throw std::invalid_argument("policy length must equal the photon count");
  }

  Workspace ws;
  ws.prepare(config.n_photons);
  const SymmetricState input = make_sine_state(config.n_photons);
  const std::int64_t trials = config.effective_trials();

  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t k = 0; k < trials; ++k) {
    const double phi = wrap_two_pi(kTwoPi * rng.uniform());
    const TrajectoryOutcome outcome =
        run_trajectory(policy, phi, config, rng, input, ws, false);
    acc += std::polar(1.0, phi - outcome.estimate);
  }
  return std::abs(acc) / static_cast<double>(trials);
}

double holevo_variance(double sharpness_value) {
  if (sharpness_value == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  if (sharpness_value < 0.0 || sharpness_value > 1.0) {
    throw std::invalid_argument("sharpness must lie in [0, 1]");
  }
  return 1.0 / (sharpness_value * sharpness_value) - 1.0;
}

Objective policy_objective(const PhaseSimConfig& config) {
  config.validate();
  Objective objective;
  objective.dimension = static_cast<std::size_t>(config.n_photons);
  objective.deterministic = false;
  objective.sample = [config](std::span<const double> position,
                              RngStream& rng) {
    Policy policy;
    policy.deltas.assign(position.begin(), position.end());
    return sharpness(policy, config, rng);
  };
  return objective;
}

Bounds policy_bounds(int n_photons) {
  return Bounds::cube(static_cast<std::size_t>(n_photons), 0.0, kTwoPi, true);
}

}  // namespace qopt::phase
