#ifndef LOGSMOOTH_EMBEDDING_HPP
#define LOGSMOOTH_EMBEDDING_HPP

#include <utility>
#include <vector>

#include "logsmooth/spaces.hpp"

namespace logsmooth {

enum class Verdict { Converges, Diverges, Inconclusive };

const char* to_string(Verdict v);

// Positive multi-index series term over s in Z_+^m:
//   prod_j base_j^{alpha_j} * (sum_j (s_j+1))^gamma
//     * prod_j (1 + log2 base_j)^{log_exp_j}
// with base_j = s_j + 1, or base_j = s_j when plain_base is set (the sum
// then starts at s_j = 1; the shell variable stays sum_j (s_j+1)).
struct SeriesSpec {
  int m = 1;
  std::vector<double> alpha;
  double gamma = 0.0;
  std::vector<double> log_exp;  // empty = no log factors
  bool plain_base = false;
};

// Positive term over l in Z_+^m on the geometric scale:
//   prod_j 2^(l_j a_j) * (sum_j 2^(l_j))^g.
struct GeometricSeriesSpec {
  int m = 1;
  std::vector<double> a;
  double g = 0.0;
};

// Outcome of the numeric referee: fitted shell exponents (term mass per
// shell ~ n^rho * (log n)^sigma) and partial sums at the requested cutoffs.
struct ConvergenceVerdict {
  Verdict verdict = Verdict::Inconclusive;
  double rho = 0.0;
  double sigma = 0.0;
  std::vector<double> partial_sums;
};

// eta' = eta/(eta-1) for eta = theta_big/theta_small; exactly 1 when
// theta_big = inf. Pre: 0 < theta_small < theta_big <= inf.
double eta_prime_of(double theta_big, double theta_small);

// Symbolic ray analysis. The series converges iff every nonempty coordinate
// subset e has shell exponent gamma + sum_e alpha_j + |e| - 1 < -1; within
// +-0.02 of the boundary the verdict is Inconclusive (log factors can tip
// either way there and the numeric referee decides).
Verdict power_series_verdict(const SeriesSpec& spec);

// sup over s of the term is finite iff every nonempty subset ray has
// exponent gamma + sum_e alpha_j <= 0, with no positive log factor on a
// zero-exponent ray. Boundary 0 counts as finite (bounded, not decaying).
bool power_sup_finite(const SeriesSpec& spec);

// Geometric scale: converges iff every nonempty subset has
// sum_e a_j + g < 0; an exact 0 gives constant terms along a cone, so the
// boundary verdict is Diverges. Never Inconclusive.
Verdict geometric_series_verdict(const GeometricSeriesSpec& spec);

// sup finite iff every nonempty subset has sum_e a_j + g <= 0.
bool geometric_sup_finite(const GeometricSeriesSpec& spec);

// Numeric referee: shell sums a_n over n = sum_j (s_j+1) <= max cutoff,
// then a least-squares fit log a_n ~ rho log n + sigma log log n + c over
// the upper half of the logarithmic shell range. Converges when
// rho < -1-eps, or |rho+1| <= eps and sigma < -1-eps; Diverges when
// rho > -1+eps, or |rho+1| <= eps and sigma > -1+eps; eps = 0.05.
// Pre: at least 4 strictly increasing cutoffs.
ConvergenceVerdict series_convergence(const SeriesSpec& spec,
                                      const std::vector<long long>& cutoffs);

// Numeric cross-check on the geometric scale: terms bucketed by
// floor(log2 sum_j 2^(l_j)) for l_j <= level_cap, same fit with shell
// variable 2^k, thresholds at 0 instead of -1 (the buckets already
// aggregate a full shell).
ConvergenceVerdict geometric_series_convergence(const GeometricSeriesSpec& spec,
                                                int level_cap);

// Source and target of a smoothness-scale embedding over one Lorentz p.
struct EmbeddingQuery {
  SpaceParams source;
  SpaceParams target;
};

void validate(const EmbeddingQuery& q);

// Embedding predicate on the weighted-block scale: every coordinate needs
// b1_j + 1/theta1 >= b2_j + 1/theta2 (1/inf = 0), and any equality demands
// theta1 < theta2. Equality axes with theta1 >= theta2 fail.
bool sb_embeds(const std::vector<double>& b1, double theta1,
               const std::vector<double>& b2, double theta2);

// Embedding of the weighted-block space into the Lorentz space with the
// smaller second index tau2 < tau1. With beta = min{2, tau2}: for
// theta > beta the certificate is the series
//   sum_s (sum_j (s_j+1))^(beta eta' (1/tau2-1/tau1)) prod_j (s_j+1)^(-beta eta' b_j),
// eta = theta/beta; for theta <= beta the sup of
//   (sum_j (s_j+1))^(1/tau2-1/tau1) prod_j (s_j+1)^(-b_j).
// Each builder enforces its own branch. Required ranges: 1 < tau2 <= 2, or
// 2 < p and 2 < tau2 < inf.
SeriesSpec lorentz_embedding_series(double p, double tau1, double tau2,
                                    double theta, const std::vector<double>& b);
bool lorentz_embedding_sup(double p, double tau1, double tau2, double theta,
                           const std::vector<double>& b);

// Between two weighted-block spaces over one p, tau2 < tau1 (both finite):
// for theta2 < theta1 the exact certificate is the series with
// delta = theta2 eta', eta = theta1/theta2,
//   sum_{s >= 1} prod_j s_j^((b2_j-b1_j) delta) (sum_j (s_j+1))^((1/tau2-1/tau1) delta);
// for theta1 <= theta2 a sufficient condition is finiteness of
//   sup prod_j (s_j+1)^(b2_j-b1_j) (sum_j (s_j+1))^(1/tau2-1/tau1).
SeriesSpec sb_embedding_series(const EmbeddingQuery& q);
bool sb_embedding_sup(const EmbeddingQuery& q);

// Between two modulus-form spaces over one p, tau2 < tau1: the super-dyadic
// aggregation turns the criteria geometric. For theta2 < theta1 the exact
// certificate has a_j = (b2_j - b1_j - 1/theta1 + 1/theta2) delta and
// g = (1/tau2 - 1/tau1) delta; for theta1 < theta2 a sufficient condition
// is geometric sup-finiteness of the unscaled exponents.
GeometricSeriesSpec geometric_embedding_series(const EmbeddingQuery& q);
bool geometric_embedding_sup(const EmbeddingQuery& q);

// Sharpness threshold for the modulus-form scale: case exponent
// beta = tau when 1 < tau <= 2 (any p), beta = 2 when 2 < tau and 2 < p,
// and the shifted vector v_j = b_j + 1/min{beta, theta}. Any smaller shift
// on one axis breaks the embedding of the modulus-form space into the
// weighted-block space.
std::pair<double, std::vector<double>> modulus_divergence_exponents(
    double p, double tau, double theta, const std::vector<double>& b);

// Sharpness threshold in the opposite direction: gamma = 2 when
// 1 < tau <= 2 (any p), gamma = tau when 2 < tau and 2 < p, and
// u_j = b_j + 1/max{gamma, theta}. Any positive extra shift on one axis
// breaks the embedding of the weighted-block space into the modulus-form
// scale.
std::pair<double, std::vector<double>> block_divergence_exponents(
    double p, double tau, double theta, const std::vector<double>& b);

} // namespace logsmooth

#endif
