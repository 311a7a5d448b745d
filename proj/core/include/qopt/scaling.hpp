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

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qopt {

/// Raised when a regression is requested with too few points for the
/// prediction interval (n - 2 degrees of freedom must be positive).
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordinary least squares y = intercept + slope * x together with the
/// sufficient statistics needed for prediction intervals.
struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_points = 0;
  double residual_ss = 0.0;  // sum of squared residuals
  double x_mean = 0.0;
  double x_ss = 0.0;  // sum of (x_i - x_mean)^2
};

/// Two-sided normal quantile for a given confidence level; 0.98 maps to
/// the pinned value 2.3263.
double normal_quantile_two_sided(double confidence);

inline constexpr double kZStar98 = 2.3263;

/// Least squares on raw (x, y) samples. Requires >= 3 points.
RegressionFit fit_linear(std::span<const double> x, std::span<const double> y);

/// Half-width of the confidence band for the mean response at x_new:
///   z * sqrt((residual_ss / (n-2)) * (1/n + (x_new - x_mean)^2 / x_ss)).
double prediction_interval(const RegressionFit& fit, double x_new,
                           double z_star = kZStar98);

/// Exact text round-trip of the sufficient statistics.
std::string serialize_regression_fit(const RegressionFit& fit);
RegressionFit parse_regression_fit(const std::string& text);

/// One accepted (N, Holevo variance) sample in a scaling campaign.
struct ScalingPoint {
  int n = 0;
  double v_h = 0.0;
  std::string policy_id;
};

/// Least squares on (log N, log V_H). Requires >= 3 points and positive
/// variances.
RegressionFit fit_loglog(std::span<const ScalingPoint> points);

/// Accepted (log N, log V_H) points plus the regression used by the
/// accept-reject criterion: a candidate variance is accepted only when its
/// log residual lies within the prediction interval of the fitted
/// power law.
class ScalingLedger {
 public:
  explicit ScalingLedger(double confidence = 0.98);

  /// Unconditional append (fixed-iteration regime). N must be
  /// non-decreasing; v_h must be positive.
  void add_point(int n, double v_h, std::string policy_id = {});

  struct Decision {
    bool accepted = false;
    double predicted = 0.0;   // y' at log N
    double residual = 0.0;    // log V_H - y'
    double delta_y = 0.0;
  };

  /// The acceptance test without mutating the ledger. Requires a fit
  /// (>= 3 points).
  Decision evaluate(int n, double v_h) const;

  /// Acceptance test; appends the point when it passes.
  Decision accept_policy(int n, double v_h, std::string policy_id = {});

  bool can_fit() const { return points_.size() >= 3; }
  RegressionFit fit() const;

  const std::vector<ScalingPoint>& points() const { return points_; }
  double confidence() const { return confidence_; }
  double z_star() const { return z_star_; }

 private:
  std::vector<ScalingPoint> points_;
  double confidence_;
  double z_star_;
};

/// Runs one optimization attempt for particle number n with the given
/// seed and returns (policy, measured Holevo variance).
using ScalingRunner =
    std::function<std::pair<std::vector<double>, double>(int n,
                                                         std::uint64_t seed)>;

struct ScalingCampaignConfig {
  int n_min = 4;
  int n_max = 20;
  /// Particle numbers >= this value use the accept-reject criterion (once
  /// at least 3 points are available for the fit); smaller ones append
  /// unconditionally.
  int accept_reject_from = std::numeric_limits<int>::max();
  int retry_cap = 20;  // attempts per N in accept-reject mode
  double confidence = 0.98;
  std::uint64_t seed = 0;
};

/// One optimization attempt as recorded in the campaign log.
struct CampaignAttempt {
  int n = 0;
  int attempt = 0;
  double v_h = 0.0;
  bool accepted = false;
  double predicted = 0.0;
  double delta_y = 0.0;
  double log_residual = 0.0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<double> policy;
};

struct CampaignOutcome {
  ScalingLedger ledger;
  std::vector<CampaignAttempt> attempts;
  bool aborted = false;
  int aborted_at_n = -1;
};

/// Sequential campaign over ascending N. In accept-reject mode each N is
/// re-optimized with fresh seeds until the criterion passes or retry_cap
/// attempts are exhausted, in which case the campaign aborts with the
/// partial ledger.
CampaignOutcome run_scaling_campaign(const ScalingRunner& runner,
                                     const ScalingCampaignConfig& config);

}  // namespace qopt
