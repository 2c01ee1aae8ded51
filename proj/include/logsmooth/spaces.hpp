#ifndef LOGSMOOTH_SPACES_HPP
#define LOGSMOOTH_SPACES_HPP

#include <utility>
#include <vector>

#include "logsmooth/grid_eval.hpp"
#include "logsmooth/lorentz.hpp"
#include "logsmooth/trig_poly.hpp"

namespace logsmooth {

// Parameters of the mixed logarithmic smoothness scales: the Lorentz pair
// (p, tau), the aggregation exponent theta (infinity selects sup forms),
// and one smoothness weight exponent b_j per coordinate.
// Invariants: 1 < p < inf, 1 <= tau < inf, theta > 0, b_j > -1/theta
// (with 1/inf read as 0).
struct SpaceParams {
  double p = 2.0;
  double tau = 2.0;
  double theta = 1.0;
  std::vector<double> b;
};

void validate(const SpaceParams& prm, int m);

// Controls for the modulus-of-smoothness computations.
//   order:      difference order k_j >= 1 per coordinate; empty = all ones.
//   levels:     deepest dyadic t-level L (cells l_j = 0..L); 0 = auto,
//               max block index of f plus 2.
//   h_start:    points per axis of the first h-lattice on [0, t_j]; the
//               lattice h = t*i/(S-1) always contains the corner h = t.
//   h_max:      refinement cap; sizes step S -> 2S-1 so lattices nest and
//               refinement never decreases the sampled sup.
//   refine_tol: stop refining once the sup improves by less than this
//               fraction.
//   grid_n:     per-axis Lorentz grid; 0 = smallest adequate power of two,
//               floored at 512 (m = 1) or 64 (m >= 2).
struct ModulusConfig {
  std::vector<int> order;
  int levels = 0;
  int h_start = 17;
  int h_max = 65;
  double refine_tol = 0.01;
  int grid_n = 0;
};

// A norm split into its aggregated parts: total = base + the l_theta
// aggregation of the contribution values (sup when theta = inf). base is
// the plain Lorentz-norm summand and is 0 for norms that lack it.
struct NormBreakdown {
  double total = 0.0;
  double base = 0.0;
  double theta = 1.0;
  std::vector<std::pair<std::vector<int>, double>> contributions;
};

// (sum_i v_i^theta)^(1/theta) for finite theta, max_i v_i for theta = inf;
// empty input gives 0. Pre: v_i >= 0.
double ltheta_aggregate(const std::vector<double>& v, double theta);

// Weighted dyadic-block norm
//   { sum_s prod_j (s_j+1)^(b_j theta) ||delta_s(f)||_{p,tau}^theta }^(1/theta),
// sup over s of prod_j (s_j+1)^(b_j) ||delta_s(f)|| when theta = inf.
// Contributions are keyed by block index s with the weighted block value.
// n = 0 lets each block pick its own adequate grid.
NormBreakdown block_norm(const TrigPoly& f, const SpaceParams& prm, int n = 0,
                         const GridOptions& opt = {});

// Mixed modulus of smoothness sup_{|h_j| <= t_j} ||Delta_h^k f||_{p,tau},
// sampled over nested h-lattices per cfg (a lower bound of the true sup;
// refinement never decreases it). Reflection h -> -h preserves the norm,
// so only h_j >= 0 is sampled. Pre: t_j in (0, 1].
double mixed_modulus(const TrigPoly& f, const std::vector<double>& t,
                     const LorentzParams& lp, const ModulusConfig& cfg = {});

// Modulus form of the smoothness norm: ||f||_{p,tau} plus the integral
//   { int ... int omega_k^theta(f,t) prod_j (1-log2 t_j)^(theta b_j) / t_j dt }^(1/theta)
// discretized over dyadic t-cells t_j in (2^-(l_j+1), 2^-l_j]: per-cell
// weight prod_j (l_j+3/2)^(theta b_j) times (ln 2)^m, modulus taken at the
// cell corner t_j = 2^-l_j and forced non-increasing in l (the sampled sup
// can otherwise dip where the true modulus cannot). Sup form when
// theta = inf drops the measure factor. A lower-bound approximation: the
// h-sup is sampled, the t-tail is truncated at cfg.levels.
NormBreakdown smoothness_norm_modulus(const TrigPoly& f, const SpaceParams& prm,
                                      const ModulusConfig& cfg = {});

// Discrete equivalent of the modulus form and the toolkit's canonical
// computable version: ||f||_{p,tau} plus
//   { sum_l prod_j 2^(l_j theta (b_j + 1/theta)) || sum_{s in cell(l)} delta_s(f) ||_{p,tau}^theta }^(1/theta)
// over super-dyadic cells of block indices, per axis cell(0) = {1} and
// cell(l) = [2^(l-1)+1 .. 2^l] for l >= 1 (sizes 1, 1, 2, 4, 8, ...).
// Blocks with any s_j = 0 lie outside every cell and only enter the base
// term. Sup form when theta = inf uses weights prod_j 2^(l_j b_j).
NormBreakdown smoothness_norm_discrete(const TrigPoly& f, const SpaceParams& prm,
                                       int n = 0, const GridOptions& opt = {});

// Super-dyadic cell index of a block index s >= 1: 0 for s = 1, else the
// smallest l with 2^l >= s.
int super_dyadic_level(int s);

// Closed form of the weighted block norm for lacunary series: with the
// cosine of frequency 2^nu_j sitting in block s_j = nu_j + 1,
//   { sum_nu prod_j (nu_j+2)^(b_j theta) |lambda_nu|^theta }^(1/theta),
// sup form when theta = inf.
double lacunary_block_norm(const LacunarySeries& ls, const SpaceParams& prm);

// Tail form of the smoothness norm for lacunary series:
//   { sum_{nu >= 1} prod_j (nu_j+1)^(b_j theta)
//       ( sum_{s >= nu} |lambda_{s-1}|^q )^(theta/q) }^(1/theta),
// sup form when theta = inf. q must be 2 or tau (the two regimes in which
// the two-sided comparison with the smoothness norm holds).
double lacunary_tail_norm(const LacunarySeries& ls, const SpaceParams& prm,
                          double q);

} // namespace logsmooth

#endif
