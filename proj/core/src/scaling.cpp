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

#include "qopt/scaling.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qopt/rng.hpp"

namespace qopt {

namespace {

// Acklam's rational approximation of the inverse normal CDF (absolute
// error below 1.2e-9), used for confidences other than the pinned 0.98.
double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("inverse_normal_cdf requires p in (0, 1)");
  }
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile_two_sided(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  if (confidence == 0.98) return kZStar98;
  return inverse_normal_cdf(0.5 + confidence / 2.0);
}

RegressionFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit_linear: x and y lengths differ");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw InsufficientDataError(
        "regression needs at least 3 points (n - 2 degrees of freedom)");
  }

  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += x[i];
    y_mean += y[i];
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - x_mean;
    sxx += dx * dx;
    sxy += dx * (y[i] - y_mean);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_linear: x values are all identical");
  }

  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.n_points = static_cast<int>(n);
  fit.x_mean = x_mean;
  fit.x_ss = sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    rss += r * r;
  }
  fit.residual_ss = rss;
  return fit;
}

RegressionFit fit_loglog(std::span<const ScalingPoint> points) {
  std::vector<double> x(points.size()), y(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].v_h <= 0.0) {
      throw std::invalid_argument("fit_loglog: V_H must be positive");
    }
    x[i] = std::log(static_cast<double>(points[i].n));
    y[i] = std::log(points[i].v_h);
  }
  return fit_linear(x, y);
}

double prediction_interval(const RegressionFit& fit, double x_new,
                           double z_star) {
  if (fit.n_points < 3) {
    throw InsufficientDataError(
        "prediction interval needs n - 2 >= 1 data points");
  }
  const double n = static_cast<double>(fit.n_points);
  const double variance = fit.residual_ss / (n - 2.0);
  const double dx = x_new - fit.x_mean;
  return z_star * std::sqrt(variance * (1.0 / n + dx * dx / fit.x_ss));
}

std::string serialize_regression_fit(const RegressionFit& fit) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%.17g %.17g %d %.17g %.17g %.17g",
                fit.slope, fit.intercept, fit.n_points, fit.residual_ss,
                fit.x_mean, fit.x_ss);
  return buffer;
}

RegressionFit parse_regression_fit(const std::string& text) {
  RegressionFit fit;
  std::istringstream in(text);
  if (!(in >> fit.slope >> fit.intercept >> fit.n_points >> fit.residual_ss >>
        fit.x_mean >> fit.x_ss)) {
    throw std::invalid_argument("malformed regression fit record");
  }
  return fit;
}

ScalingLedger::ScalingLedger(double confidence)
    : confidence_(confidence), z_star_(normal_quantile_two_sided(confidence)) {}

void ScalingLedger::add_point(int n, double v_h, std::string policy_id) {
  if (v_h <= 0.0) {
    throw std::invalid_argument("ledger: V_H must be positive");
  }
  if (!points_.empty() && n < points_.back().n) {
    throw std::invalid_argument("ledger: points must be added with ascending N");
  }
  points_.push_back({n, v_h, std::move(policy_id)});
}

ScalingLedger::Decision ScalingLedger::evaluate(int n, double v_h) const {
  if (v_h <= 0.0) {
    throw std::invalid_argument("ledger: V_H must be positive");
  }
  const RegressionFit current = fit();
  const double x = std::log(static_cast<double>(n));
  Decision decision;
  decision.predicted = current.intercept + current.slope * x;
  decision.residual = std::log(v_h) - decision.predicted;
  decision.delta_y = prediction_interval(current, x, z_star_);
  decision.accepted = std::abs(decision.residual) <= decision.delta_y;
  return decision;
}

ScalingLedger::Decision ScalingLedger::accept_policy(int n, double v_h,
                                                     std::string policy_id) {
  Decision decision = evaluate(n, v_h);
  if (decision.accepted) add_point(n, v_h, std::move(policy_id));
  return decision;
}

RegressionFit ScalingLedger::fit() const { return fit_loglog(points_); }

CampaignOutcome run_scaling_campaign(const ScalingRunner& runner,
                                     const ScalingCampaignConfig& config) {
  if (config.n_min > config.n_max) {
    throw std::invalid_argument("campaign: n_min must be <= n_max");
  }
  if (config.retry_cap < 1) {
    throw std::invalid_argument("campaign: retry_cap must be >= 1");
  }

  CampaignOutcome outcome{ScalingLedger(config.confidence), {}, false, -1};
  const RngStream seeder(config.seed);

  for (int n = config.n_min; n <= config.n_max; ++n) {
    const bool accept_reject =
        n >= config.accept_reject_from && outcome.ledger.can_fit();
    const int attempts = accept_reject ? config.retry_cap : 1;
    bool settled = false;

    for (int attempt = 0; attempt < attempts; ++attempt) {
      RngStream run_seed_stream =
          seeder.child({static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(attempt)});
      const std::uint64_t run_seed = run_seed_stream.next_u64();

      const auto start = std::chrono::steady_clock::now();
      auto [policy, v_h] = runner(n, run_seed);
      const auto stop = std::chrono::steady_clock::now();

      CampaignAttempt record;
      record.n = n;
      record.attempt = attempt;
      record.v_h = v_h;
      record.seed = run_seed;
      record.wall_seconds =
          std::chrono::duration<double>(stop - start).count();
      record.policy = std::move(policy);

      if (accept_reject) {
        const auto decision = outcome.ledger.accept_policy(n, v_h);
        record.accepted = decision.accepted;
        record.predicted = decision.predicted;
        record.delta_y = decision.delta_y;
        record.log_residual = decision.residual;
      } else {
        record.accepted = true;
        if (outcome.ledger.can_fit()) {
          // Informational band for the log even though fixed mode never
          // rejects.
          const auto decision = outcome.ledger.evaluate(n, v_h);
          record.predicted = decision.predicted;
          record.delta_y = decision.delta_y;
          record.log_residual = decision.residual;
        } else {
          record.predicted = std::numeric_limits<double>::quiet_NaN();
          record.delta_y = std::numeric_limits<double>::quiet_NaN();
          record.log_residual = std::numeric_limits<double>::quiet_NaN();
        }
        outcome.ledger.add_point(n, v_h);
      }

      const bool accepted = record.accepted;
      outcome.attempts.push_back(std::move(record));
      if (accepted) {
        settled = true;
        break;
      }
    }

    if (!settled) {
      outcome.aborted = true;
      outcome.aborted_at_n = n;
      break;
    }
  }
  return outcome;
}

}  // namespace qopt
