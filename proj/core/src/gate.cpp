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

#include "qopt/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qopt::gate {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;

bool is_hermitian(const Eigen::MatrixXcd& m, double tolerance) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tolerance) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols()))
             .cwiseAbs()
             .maxCoeff() <= tolerance;
}

// Z eigenvalue of qubit q in basis state b (qubit 0 is the most
// significant bit).
double z_sign(int basis_state, int qubit, int n_qubits) {
  const int bit = (basis_state >> (n_qubits - 1 - qubit)) & 1;
  return bit == 0 ? 1.0 : -1.0;
}

}  // namespace

std::vector<double> flatten_pulses(const PulseSequence& pulses) {
  std::vector<double> flat(pulses.lines() * pulses.steps());
  for (std::size_t line = 0; line < pulses.lines(); ++line) {
    for (std::size_t t = 0; t < pulses.steps(); ++t) {
      flat[line * pulses.steps() + t] =
          pulses.amplitudes(static_cast<Eigen::Index>(line),
                            static_cast<Eigen::Index>(t));
    }
  }
  return flat;
}

PulseSequence unflatten_pulses(std::span<const double> values,
                               std::size_t lines, std::size_t steps,
                               double dt) {
  if (values.size() != lines * steps) {
    throw std::invalid_argument("pulse vector length must equal lines*steps");
  }
  PulseSequence pulses;
  pulses.dt = dt;
  pulses.amplitudes.resize(static_cast<Eigen::Index>(lines),
                           static_cast<Eigen::Index>(steps));
  for (std::size_t line = 0; line < lines; ++line) {
    for (std::size_t t = 0; t < steps; ++t) {
      pulses.amplitudes(static_cast<Eigen::Index>(line),
                        static_cast<Eigen::Index>(t)) =
          values[line * steps + t];
    }
  }
  return pulses;
}

void HamiltonianSpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
  if (couplings.size() != static_cast<std::size_t>(n_qubits - 1)) {
    throw std::invalid_argument("couplings must have n_qubits - 1 entries");
  }
  if (detunings.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("detunings must have n_qubits entries");
  }
}

Eigen::MatrixXcd GateProblem::step_hamiltonian(
    std::span<const double> controls) const {
  if (controls.size() != static_cast<std::size_t>(hamiltonian.n_qubits)) {
    throw std::invalid_argument("one control amplitude per qubit required");
  }
  Eigen::MatrixXcd h = h_static;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    h += controls[i] * x_controls[i];
  }
  return h;
}

GateProblem make_gate_problem(Eigen::MatrixXcd target, HamiltonianSpec spec,
                              double dt, std::size_t steps,
                              double amplitude_bound) {
  spec.validate();
  if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
  if (amplitude_bound <= 0.0) {
    throw std::invalid_argument("amplitude_bound must be positive");
  }
  const int d = spec.dimension();
  if (target.rows() != d || target.cols() != d) {
    throw std::invalid_argument("target dimension must equal 2^n_qubits");
  }
  if (!is_unitary(target, kUnitaryTolerance)) {
    throw std::invalid_argument("target must be unitary");
  }

  GateProblem problem;
  problem.target = std::move(target);
  problem.hamiltonian = std::move(spec);
  problem.dt = dt;
  problem.steps = steps;
  problem.amplitude_bound = amplitude_bound;

  const int n = problem.hamiltonian.n_qubits;
  problem.h_static = Eigen::MatrixXcd::Zero(d, d);
  for (int b = 0; b < d; ++b) {
    double diag = 0.0;
    for (int q = 0; q < n; ++q) {
      diag += problem.hamiltonian.detunings[static_cast<std::size_t>(q)] *
              z_sign(b, q, n);
    }
    for (int q = 0; q + 1 < n; ++q) {
      diag += problem.hamiltonian.couplings[static_cast<std::size_t>(q)] *
              z_sign(b, q, n) * z_sign(b, q + 1, n);
    }
    problem.h_static(b, b) = diag;
  }

  problem.x_controls.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    const int mask = 1 << (n - 1 - q);
    for (int b = 0; b < d; ++b) x(b ^ mask, b) = 1.0;
    problem.x_controls.push_back(std::move(x));
  }
  return problem;
}

Eigen::MatrixXcd toffoli_gate() {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(8, 8);
  u(6, 6) = 0.0;
  u(7, 7) = 0.0;
  u(6, 7) = 1.0;
  u(7, 6) = 1.0;
  return u;
}

GateProblem toffoli_problem() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  HamiltonianSpec spec;
  spec.n_qubits = 3;
  spec.couplings = {two_pi * 0.05, two_pi * 0.05};
  spec.detunings = {0.0, 0.0, 0.0};
  return make_gate_problem(toffoli_gate(), spec, 1.0, 27, two_pi * 0.5);
}

Eigen::MatrixXcd propagate_step(const Eigen::MatrixXcd& hamiltonian,
                                double dt) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("hamiltonian must be square");
  }
  if (!is_hermitian(hamiltonian, kHermitianTolerance)) {
    throw std::invalid_argument("hamiltonian must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  const Eigen::VectorXd phases = -dt * solver.eigenvalues().array();
  const Eigen::VectorXcd exponentials =
      phases.array().cos().cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) *
          phases.array().sin().cast<std::complex<double>>();
  return solver.eigenvectors() * exponentials.asDiagonal() *
         solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd compose_unitary(const PulseSequence& pulses,
                                 const GateProblem& problem) {
  if (pulses.lines() != static_cast<std::size_t>(problem.hamiltonian.n_qubits) ||
      pulses.steps() != problem.steps) {
    throw std::invalid_argument("pulse shape does not match the problem");
  }
  const int d = problem.hamiltonian.dimension();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  std::vector<double> controls(pulses.lines());
  for (std::size_t t = 0; t < pulses.steps(); ++t) {
    for (std::size_t line = 0; line < pulses.lines(); ++line) {
      controls[line] = pulses.amplitudes(static_cast<Eigen::Index>(line),
                                         static_cast<Eigen::Index>(t));
    }
    u = propagate_step(problem.step_hamiltonian(controls), pulses.dt) * u;
  }
  return u;
}

double intrinsic_fidelity(const Eigen::MatrixXcd& target,
                          const Eigen::MatrixXcd& approx) {
  if (target.rows() != approx.rows() || target.cols() != approx.cols()) {
    throw std::invalid_argument("intrinsic_fidelity: dimension mismatch");
  }
  // tr(target^dagger approx) without forming the product.
  const std::complex<double> trace =
      (target.conjugate().cwiseProduct(approx)).sum();
  return std::abs(trace) / static_cast<double>(target.rows());
}

PulseSequence gaussian_filter(const PulseSequence& pulses,
                              double kernel_sigma) {
  if (kernel_sigma < 0.0) {
    throw std::invalid_argument("kernel_sigma must be >= 0");
  }
  if (kernel_sigma == 0.0) return pulses;

  const double sigma_steps = kernel_sigma / pulses.dt;
  const int radius = static_cast<int>(std::ceil(4.0 * sigma_steps));
  std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (int j = -radius; j <= radius; ++j) {
    const double w = std::exp(-0.5 * (static_cast<double>(j) / sigma_steps) *
                              (static_cast<double>(j) / sigma_steps));
    kernel[static_cast<std::size_t>(j + radius)] = w;
    total += w;
  }
  for (double& w : kernel) w /= total;

  PulseSequence filtered = pulses;
  const int steps = static_cast<int>(pulses.steps());
  for (int line = 0; line < static_cast<int>(pulses.lines()); ++line) {
    for (int t = 0; t < steps; ++t) {
      double value = 0.0;
      for (int j = -radius; j <= radius; ++j) {
        const int source = std::clamp(t + j, 0, steps - 1);  // edge replication
        value += kernel[static_cast<std::size_t>(j + radius)] *
                 pulses.amplitudes(line, source);
      }
      filtered.amplitudes(line, t) = value;
    }
  }
  return filtered;
}

std::vector<RobustnessPoint> robustness_scan(
    const PulseSequence& pulses, const GateProblem& problem,
    std::span<const double> delta_eps_grid, int trials, RngStream& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  std::vector<RobustnessPoint> curve;
  curve.reserve(delta_eps_grid.size());
  PulseSequence perturbed = pulses;

  for (double delta_eps : delta_eps_grid) {
    double sum = 0.0;
    double sum_squares = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      for (Eigen::Index line = 0; line < perturbed.amplitudes.rows(); ++line) {
        for (Eigen::Index t = 0; t < perturbed.amplitudes.cols(); ++t) {
          perturbed.amplitudes(line, t) =
              pulses.amplitudes(line, t) +
              delta_eps * (2.0 * rng.uniform() - 1.0);
        }
      }
      const double fidelity =
          intrinsic_fidelity(problem.target, compose_unitary(perturbed, problem));
      sum += fidelity;
      sum_squares += fidelity * fidelity;
    }
    RobustnessPoint point;
    point.delta_eps = delta_eps;
    point.mean_fidelity = sum / trials;
    if (trials > 1) {
      const double variance = std::max(
          0.0, (sum_squares - sum * sum / trials) / (trials - 1));
      point.std_error = std::sqrt(variance / trials);
    }
    curve.push_back(point);
  }
  return curve;
}

Objective gate_objective(const GateProblem& problem, double filter_sigma) {
  if (filter_sigma < 0.0) {
    throw std::invalid_argument("filter_sigma must be >= 0");
  }
  Objective objective;
  objective.dimension =
      static_cast<std::size_t>(problem.hamiltonian.n_qubits) * problem.steps;
  objective.deterministic = true;
  objective.sample = [problem, filter_sigma](std::span<const double> position,
                                             RngStream&) {
    const PulseSequence pulses = unflatten_pulses(
        position, static_cast<std::size_t>(problem.hamiltonian.n_qubits),
        problem.steps, problem.dt);
    const PulseSequence filtered = gaussian_filter(pulses, filter_sigma);
    return intrinsic_fidelity(problem.target,
                              compose_unitary(filtered, problem));
  };
  return objective;
}

Bounds pulse_bounds(const GateProblem& problem) {
  return Bounds::cube(
      static_cast<std::size_t>(problem.hamiltonian.n_qubits) * problem.steps,
      -problem.amplitude_bound, problem.amplitude_bound, false);
}

}  // namespace qopt::gate
