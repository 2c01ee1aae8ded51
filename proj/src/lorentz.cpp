#include "logsmooth/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "logsmooth/errors.hpp"

namespace logsmooth {

void validate(const LorentzParams& lp) {
  if (!(lp.p > 1.0) || !std::isfinite(lp.p))
    throw param_error("lorentz: p must satisfy 1 < p < infinity, got p=" + std::to_string(lp.p));
  if (!(lp.tau >= 1.0) || !std::isfinite(lp.tau))
    throw param_error("lorentz: tau must satisfy 1 <= tau < infinity, got tau=" + std::to_string(lp.tau));
}

static void validate_samples(const GridSamples& g) {
  if (g.m < 1) throw param_error("grid samples: dimension must be >= 1");
  if (g.n < 1) throw param_error("grid samples: n must be >= 1");
  std::size_t expect = 1;
  for (int j = 0; j < g.m; ++j) expect *= static_cast<std::size_t>(g.n);
  if (g.values.size() != expect)
    throw param_error("grid samples: values.size() != n^m");
}

StepRearrangement rearrange(std::vector<double> samples) {
  if (samples.empty()) throw param_error("rearrange: empty sample set");
  for (double& v : samples) v = std::abs(v);
  std::sort(samples.begin(), samples.end(), std::greater<double>());
  StepRearrangement r;
  r.cell_measure = 1.0 / static_cast<double>(samples.size());
  r.values = std::move(samples);
  return r;
}

StepRearrangement rearrange(const GridSamples& samples) {
  validate_samples(samples);
  return rearrange(samples.values);
}

// Quadrature weights ((k+1)/M)^q - (k/M)^q reused heavily across per-block
// norms with identical (M, q); cached because pow dominates the cost.
static const std::vector<double>& step_weights(std::size_t M, double q) {
  static std::map<std::pair<std::size_t, double>, std::unique_ptr<std::vector<double>>> cache;
  auto key = std::make_pair(M, q);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() >= 16) cache.clear();
    auto w = std::make_unique<std::vector<double>>(M);
    const double inv = 1.0 / static_cast<double>(M);
    double prev = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      double next = std::pow(static_cast<double>(k + 1) * inv, q);
      (*w)[k] = next - prev;
      prev = next;
    }
    it = cache.emplace(key, std::move(w)).first;
  }
  return *it->second;
}

double lorentz_norm(const StepRearrangement& r, const LorentzParams& lp) {
  validate(lp);
  if (r.values.empty()) throw param_error("lorentz_norm: empty rearrangement");
  const std::size_t M = r.values.size();
  const double q = lp.tau / lp.p;
  const std::vector<double>& w = step_weights(M, q);
  double acc = 0.0;
  for (std::size_t k = 0; k < M; ++k) {
    if (r.values[k] <= 0.0) break;  // non-increasing: rest contribute nothing
    acc += std::pow(r.values[k], lp.tau) * w[k];
  }
  return std::pow(acc, 1.0 / lp.tau);
}

double lorentz_norm(const GridSamples& samples, const LorentzParams& lp) {
  validate(lp);
  return lorentz_norm(rearrange(samples), lp);
}

double lp_norm(const GridSamples& samples, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw param_error("lp_norm: p must satisfy 1 <= p < infinity");
  validate_samples(samples);
  double acc = 0.0;
  for (double v : samples.values) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(samples.values.size()), 1.0 / p);
}

double hl_lorentz_estimate(const std::vector<double>& a, const LorentzParams& lp) {
  validate(lp);
  if (a.empty()) throw param_error("hl_lorentz_estimate: empty coefficient list");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0.0) throw param_error("hl_lorentz_estimate: coefficients must be non-negative");
    if (i > 0 && a[i] > a[i - 1] * (1.0 + 1e-12))
      throw param_error("hl_lorentz_estimate: coefficients must be non-increasing");
  }
  const double e = lp.tau * (1.0 - 1.0 / lp.p) - 1.0;  // tau/p' - 1
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double nu = static_cast<double>(i + 1);
    acc += std::pow(a[i], lp.tau) * std::pow(nu, e);
  }
  return std::pow(acc, 1.0 / lp.tau);
}

} // namespace logsmooth
