#include "logsmooth/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

constexpr double kRayTol = 1e-12;    // FP guard for exponent sign tests
constexpr double kBandTol = 0.02;    // symbolic boundary band around -1
constexpr double kFitTol = 0.05;     // numeric verdict band

double inv_or_zero(double theta) {
  return std::isinf(theta) ? 0.0 : 1.0 / theta;
}

void validate_series(const SeriesSpec& spec) {
  if (spec.m < 1) throw param_error("series dimension must be >= 1");
  if (static_cast<int>(spec.alpha.size()) != spec.m)
    throw param_error("series needs one power exponent per coordinate");
  if (!spec.log_exp.empty() && static_cast<int>(spec.log_exp.size()) != spec.m)
    throw param_error("series log exponents must be empty or one per coordinate");
}

void validate_geometric(const GeometricSeriesSpec& spec) {
  if (spec.m < 1) throw param_error("series dimension must be >= 1");
  if (static_cast<int>(spec.a.size()) != spec.m)
    throw param_error("series needs one exponent per coordinate");
}

// Largest ray exponent over nonempty coordinate subsets; per_coord gets
// added per member, shell once, and slot counts |e| - 1 when set.
double worst_ray(const std::vector<double>& per_coord, double shell,
                 bool count_slots) {
  int m = static_cast<int>(per_coord.size());
  double worst = -1e300;
  for (int mask = 1; mask < (1 << m); ++mask) {
    double e = shell;
    int members = 0;
    for (int j = 0; j < m; ++j)
      if (mask & (1 << j)) {
        e += per_coord[j];
        ++members;
      }
    if (count_slots) e += members - 1;
    worst = std::max(worst, e);
  }
  return worst;
}

// Solves the 3x3 normal equations of y ~ r*x1 + s*x2 + c.
void fit_two_exponents(const std::vector<double>& x1,
                       const std::vector<double>& x2,
                       const std::vector<double>& y, double& r, double& s) {
  double m[3][4] = {};
  for (std::size_t i = 0; i < y.size(); ++i) {
    double row[3] = {x1[i], x2[i], 1.0};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) m[a][b] += row[a] * row[b];
      m[a][3] += row[a] * y[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int rw = col + 1; rw < 3; ++rw)
      if (std::abs(m[rw][col]) > std::abs(m[piv][col])) piv = rw;
    std::swap(m[col], m[piv]);
    if (std::abs(m[col][col]) < 1e-300) throw param_error("degenerate shell fit");
    for (int rw = 0; rw < 3; ++rw) {
      if (rw == col) continue;
      double f = m[rw][col] / m[col][col];
      for (int cc = col; cc < 4; ++cc) m[rw][cc] -= f * m[col][cc];
    }
  }
  r = m[0][3] / m[0][0];
  s = m[1][3] / m[1][1];
}

Verdict decide(double rho, double sigma, double center) {
  if (rho < center - kFitTol) return Verdict::Converges;
  if (rho > center + kFitTol) return Verdict::Diverges;
  if (sigma < -1.0 - kFitTol) return Verdict::Converges;
  if (sigma > -1.0 + kFitTol) return Verdict::Diverges;
  return Verdict::Inconclusive;
}

ConvergenceVerdict referee(const std::vector<double>& shell_mass,
                           const std::vector<double>& shell_var,
                           const std::vector<double>& cumulative,
                           const std::vector<double>& cut_positions,
                           double center) {
  // fit over the upper half of the logarithmic range of the shell variable
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < shell_mass.size(); ++i)
    if (shell_mass[i] > 0.0) {
      lo = std::min(lo, shell_var[i]);
      hi = std::max(hi, shell_var[i]);
    }
  if (!(hi > lo)) throw param_error("too few shells to fit");
  double split = std::sqrt(lo * hi);
  std::vector<double> x1, x2, y;
  for (std::size_t i = 0; i < shell_mass.size(); ++i) {
    if (shell_mass[i] <= 0.0 || shell_var[i] < split) continue;
    x1.push_back(std::log(shell_var[i]));
    x2.push_back(std::log(std::log(shell_var[i])));
    y.push_back(std::log(shell_mass[i]));
  }
  if (x1.size() < 4) throw param_error("too few shells to fit");
  ConvergenceVerdict out;
  fit_two_exponents(x1, x2, y, out.rho, out.sigma);
  out.verdict = decide(out.rho, out.sigma, center);
  out.partial_sums = cut_positions;
  for (std::size_t i = 0; i < cut_positions.size(); ++i)
    out.partial_sums[i] = cumulative[static_cast<std::size_t>(cut_positions[i])];
  return out;
}

} // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Converges: return "converges";
    case Verdict::Diverges: return "diverges";
    default: return "inconclusive";
  }
}

double eta_prime_of(double theta_big, double theta_small) {
  if (!(theta_small > 0.0) || std::isinf(theta_small))
    throw param_error("eta' needs a finite positive smaller exponent");
  if (!(theta_big > theta_small))
    throw param_error("eta' needs theta_big > theta_small");
  if (std::isinf(theta_big)) return 1.0;
  double eta = theta_big / theta_small;
  return eta / (eta - 1.0);
}

Verdict power_series_verdict(const SeriesSpec& spec) {
  validate_series(spec);
  double worst = worst_ray(spec.alpha, spec.gamma, true);
  if (worst < -1.0 - kBandTol) return Verdict::Converges;
  if (worst > -1.0 + kBandTol) return Verdict::Diverges;
  return Verdict::Inconclusive;
}

bool power_sup_finite(const SeriesSpec& spec) {
  validate_series(spec);
  if (worst_ray(spec.alpha, spec.gamma, false) > kRayTol) return false;
  if (spec.log_exp.empty()) return true;
  // a positive log factor on a zero-exponent ray still grows
  int m = spec.m;
  for (int mask = 1; mask < (1 << m); ++mask) {
    double e = spec.gamma;
    bool pos_log = false;
    for (int j = 0; j < m; ++j)
      if (mask & (1 << j)) {
        e += spec.alpha[j];
        pos_log = pos_log || spec.log_exp[j] > kRayTol;
      }
    if (std::abs(e) <= kRayTol && pos_log) return false;
  }
  return true;
}

Verdict geometric_series_verdict(const GeometricSeriesSpec& spec) {
  validate_geometric(spec);
  double worst = worst_ray(spec.a, spec.g, false);
  return worst < -kRayTol ? Verdict::Converges : Verdict::Diverges;
}

bool geometric_sup_finite(const GeometricSeriesSpec& spec) {
  validate_geometric(spec);
  return worst_ray(spec.a, spec.g, false) <= kRayTol;
}

ConvergenceVerdict series_convergence(const SeriesSpec& spec,
                                      const std::vector<long long>& cutoffs) {
  validate_series(spec);
  if (cutoffs.size() < 4) throw param_error("need at least 4 cutoffs");
  for (std::size_t i = 1; i < cutoffs.size(); ++i)
    if (cutoffs[i] <= cutoffs[i - 1])
      throw param_error("cutoffs must increase strictly");
  long long N = cutoffs.back();
  if (N > (1LL << 24)) throw param_error("cutoff too large for shell table");
  int smin = spec.plain_base ? 1 : 0;
  if (N < (smin + 1) * spec.m + 4) throw param_error("cutoff below first shell");

  std::vector<double> shell(static_cast<std::size_t>(N) + 1, 0.0);
  // walk s recursively, pruning once the shell variable passes N
  std::function<void(int, long long, double)> rec = [&](int j, long long t,
                                                        double factor) {
    for (int s = smin;; ++s) {
      long long tj = t + s + 1;
      long long rest = static_cast<long long>(spec.m - 1 - j) * (smin + 1);
      if (tj + rest > N) break;
      double base = spec.plain_base ? double(s) : double(s + 1);
      double f = factor * std::pow(base, spec.alpha[j]);
      if (!spec.log_exp.empty())
        f *= std::pow(1.0 + std::log2(base), spec.log_exp[j]);
      if (j + 1 == spec.m)
        shell[static_cast<std::size_t>(tj)] += f * std::pow(double(tj), spec.gamma);
      else
        rec(j + 1, tj, f);
    }
  };
  rec(0, 0, 1.0);

  std::vector<double> var(shell.size()), cum(shell.size(), 0.0);
  double acc = 0.0;
  for (std::size_t n = 0; n < shell.size(); ++n) {
    var[n] = double(n);
    acc += shell[n];
    cum[n] = acc;
  }
  std::vector<double> cuts(cutoffs.begin(), cutoffs.end());
  return referee(shell, var, cum, cuts, -1.0);
}

ConvergenceVerdict geometric_series_convergence(const GeometricSeriesSpec& spec,
                                                int level_cap) {
  validate_geometric(spec);
  if (level_cap < 8) throw param_error("geometric level cap must be >= 8");
  if (level_cap * spec.m > 60) throw param_error("geometric level cap too large");

  int buckets = level_cap + spec.m + 2;
  std::vector<double> mass(static_cast<std::size_t>(buckets), 0.0);
  std::vector<int> l(spec.m, 0);
  for (;;) {
    double f = 1.0;
    double total = 0.0;
    for (int j = 0; j < spec.m; ++j) {
      f *= std::pow(2.0, l[j] * spec.a[j]);
      total += std::ldexp(1.0, l[j]);
    }
    f *= std::pow(total, spec.g);
    int k = static_cast<int>(std::floor(std::log2(total)));
    mass[static_cast<std::size_t>(k)] += f;
    int j = 0;
    for (; j < spec.m; ++j) {
      if (l[j] < level_cap) {
        ++l[j];
        break;
      }
      l[j] = 0;
    }
    if (j == spec.m) break;
  }

  std::vector<double> var(mass.size()), cum(mass.size(), 0.0);
  double acc = 0.0;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    var[k] = std::ldexp(1.0, static_cast<int>(k));
    acc += mass[k];
    cum[k] = acc;
  }
  // report partial sums at the quartile bucket positions
  std::vector<double> cuts;
  for (int q = 1; q <= 4; ++q)
    cuts.push_back(std::floor(double(buckets - 1) * q / 4.0));
  return referee(mass, var, cum, cuts, 0.0);
}

void validate(const EmbeddingQuery& q) {
  int m = static_cast<int>(q.source.b.size());
  validate(q.source, m);
  validate(q.target, m);
  if (q.source.p != q.target.p)
    throw param_error("embedding criteria compare spaces over one p");
}

bool sb_embeds(const std::vector<double>& b1, double theta1,
               const std::vector<double>& b2, double theta2) {
  if (b1.size() != b2.size()) throw param_error("smoothness vectors differ in size");
  if (!(theta1 > 0.0) || !(theta2 > 0.0))
    throw param_error("aggregation exponents must be positive");
  double i1 = inv_or_zero(theta1), i2 = inv_or_zero(theta2);
  bool equality = false;
  for (std::size_t j = 0; j < b1.size(); ++j) {
    double d = (b1[j] + i1) - (b2[j] + i2);
    if (d < -kRayTol) return false;
    if (d <= kRayTol) equality = true;
  }
  return !equality || theta1 < theta2;
}

SeriesSpec lorentz_embedding_series(double p, double tau1, double tau2,
                                    double theta, const std::vector<double>& b) {
  SpaceParams prm{p, tau1, theta, b};
  validate(prm, static_cast<int>(b.size()));
  if (!((tau2 > 1.0 && tau2 <= 2.0) || (p > 2.0 && tau2 > 2.0 && !std::isinf(tau2))))
    throw param_error("tau2 must satisfy 1 < tau2 <= 2, or 2 < p with 2 < tau2");
  if (!(tau2 < tau1) || std::isinf(tau1)) throw param_error("need tau2 < tau1 < inf");
  double beta = std::min(2.0, tau2);
  if (!(theta > beta))
    throw param_error("series branch needs theta > min{2, tau2}");
  double d = beta * eta_prime_of(theta, beta);
  SeriesSpec spec;
  spec.m = static_cast<int>(b.size());
  for (double bj : b) spec.alpha.push_back(-d * bj);
  spec.gamma = d * (1.0 / tau2 - 1.0 / tau1);
  return spec;
}

bool lorentz_embedding_sup(double p, double tau1, double tau2, double theta,
                           const std::vector<double>& b) {
  SpaceParams prm{p, tau1, theta, b};
  validate(prm, static_cast<int>(b.size()));
  if (!((tau2 > 1.0 && tau2 <= 2.0) || (p > 2.0 && tau2 > 2.0 && !std::isinf(tau2))))
    throw param_error("tau2 must satisfy 1 < tau2 <= 2, or 2 < p with 2 < tau2");
  if (!(tau2 < tau1) || std::isinf(tau1)) throw param_error("need tau2 < tau1 < inf");
  double beta = std::min(2.0, tau2);
  if (!(theta <= beta) || std::isinf(theta))
    throw param_error("sup branch needs theta <= min{2, tau2} < inf");
  SeriesSpec spec;
  spec.m = static_cast<int>(b.size());
  for (double bj : b) spec.alpha.push_back(-bj);
  spec.gamma = 1.0 / tau2 - 1.0 / tau1;
  return power_sup_finite(spec);
}

namespace {

void require_tau_ordered(const EmbeddingQuery& q) {
  if (!(q.target.tau < q.source.tau))
    throw param_error("criteria need target tau < source tau");
}

} // namespace

SeriesSpec sb_embedding_series(const EmbeddingQuery& q) {
  validate(q);
  require_tau_ordered(q);
  if (!(q.target.theta < q.source.theta))
    throw param_error("series branch needs target theta < source theta");
  double delta = q.target.theta * eta_prime_of(q.source.theta, q.target.theta);
  SeriesSpec spec;
  spec.m = static_cast<int>(q.source.b.size());
  spec.plain_base = true;
  for (int j = 0; j < spec.m; ++j)
    spec.alpha.push_back(delta * (q.target.b[j] - q.source.b[j]));
  spec.gamma = delta * (1.0 / q.target.tau - 1.0 / q.source.tau);
  return spec;
}

bool sb_embedding_sup(const EmbeddingQuery& q) {
  validate(q);
  require_tau_ordered(q);
  if (!(q.source.theta <= q.target.theta))
    throw param_error("sup branch needs source theta <= target theta");
  SeriesSpec spec;
  spec.m = static_cast<int>(q.source.b.size());
  for (int j = 0; j < spec.m; ++j)
    spec.alpha.push_back(q.target.b[j] - q.source.b[j]);
  spec.gamma = 1.0 / q.target.tau - 1.0 / q.source.tau;
  return power_sup_finite(spec);
}

GeometricSeriesSpec geometric_embedding_series(const EmbeddingQuery& q) {
  validate(q);
  require_tau_ordered(q);
  if (!(q.target.theta < q.source.theta))
    throw param_error("series branch needs target theta < source theta");
  double delta = q.target.theta * eta_prime_of(q.source.theta, q.target.theta);
  double shift = inv_or_zero(q.target.theta) - inv_or_zero(q.source.theta);
  GeometricSeriesSpec spec;
  spec.m = static_cast<int>(q.source.b.size());
  for (int j = 0; j < spec.m; ++j)
    spec.a.push_back(delta * (q.target.b[j] - q.source.b[j] + shift));
  spec.g = delta * (1.0 / q.target.tau - 1.0 / q.source.tau);
  return spec;
}

bool geometric_embedding_sup(const EmbeddingQuery& q) {
  validate(q);
  require_tau_ordered(q);
  if (!(q.source.theta < q.target.theta))
    throw param_error("sup branch needs source theta < target theta");
  double shift = inv_or_zero(q.target.theta) - inv_or_zero(q.source.theta);
  GeometricSeriesSpec spec;
  spec.m = static_cast<int>(q.source.b.size());
  for (int j = 0; j < spec.m; ++j)
    spec.a.push_back(q.target.b[j] - q.source.b[j] + shift);
  spec.g = 1.0 / q.target.tau - 1.0 / q.source.tau;
  return geometric_sup_finite(spec);
}

std::pair<double, std::vector<double>> modulus_divergence_exponents(
    double p, double tau, double theta, const std::vector<double>& b) {
  SpaceParams prm{p, tau, theta, b};
  validate(prm, static_cast<int>(b.size()));
  double beta;
  if (tau > 1.0 && tau <= 2.0)
    beta = tau;
  else if (tau > 2.0 && p > 2.0)
    beta = 2.0;
  else
    throw param_error("parameters outside the printed sharpness cases");
  double shift = 1.0 / std::min(beta, theta);
  std::vector<double> v;
  for (double bj : b) v.push_back(bj + shift);
  return {beta, v};
}

std::pair<double, std::vector<double>> block_divergence_exponents(
    double p, double tau, double theta, const std::vector<double>& b) {
  SpaceParams prm{p, tau, theta, b};
  validate(prm, static_cast<int>(b.size()));
  double gamma;
  if (tau > 1.0 && tau <= 2.0)
    gamma = 2.0;
  else if (tau > 2.0 && p > 2.0)
    gamma = tau;
  else
    throw param_error("parameters outside the printed sharpness cases");
  double shift = std::isinf(theta) ? 0.0 : 1.0 / std::max(gamma, theta);
  std::vector<double> u;
  for (double bj : b) u.push_back(bj + shift);
  return {gamma, u};
}

} // namespace logsmooth
