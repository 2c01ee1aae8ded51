#include "logsmooth/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

double inv_theta_of(double theta) {
  return std::isinf(theta) ? 0.0 : 1.0 / theta;
}

// Grid for internal Lorentz evaluations: adequate for the spectrum but not
// floored at the full default resolution (modulus sups need many norms).
int modest_grid(const TrigPoly& f, int requested) {
  if (requested > 0) return requested;
  long long need = 4 * std::max<long long>(1, f.max_abs_freq());
  long long floor_n = f.m == 1 ? 512 : 64;
  long long n = 1;
  while (n < std::max(need, floor_n)) n <<= 1;
  return static_cast<int>(n);
}

std::vector<int> resolve_order(const ModulusConfig& cfg, int m) {
  std::vector<int> order = cfg.order.empty() ? std::vector<int>(m, 1) : cfg.order;
  if (static_cast<int>(order.size()) != m)
    throw param_error("difference order must have one entry per coordinate");
  for (int k : order)
    if (k < 1) throw param_error("difference order entries must be >= 1");
  return order;
}

// Advances a mixed-radix counter over [lo, hi]^m; returns false on wrap.
bool advance(std::vector<int>& idx, int lo, int hi) {
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < hi) {
      ++idx[j];
      return true;
    }
    idx[j] = lo;
  }
  return false;
}

} // namespace

void validate(const SpaceParams& prm, int m) {
  if (!(prm.p > 1.0) || std::isinf(prm.p))
    throw param_error("space parameter p must lie in (1, inf)");
  if (!(prm.tau >= 1.0) || std::isinf(prm.tau))
    throw param_error("space parameter tau must lie in [1, inf)");
  if (!(prm.theta > 0.0)) throw param_error("space parameter theta must be > 0");
  if (static_cast<int>(prm.b.size()) != m)
    throw param_error("space parameter b must have one entry per coordinate");
  double it = inv_theta_of(prm.theta);
  for (double bj : prm.b)
    if (!(bj > -it)) throw param_error("space parameter b_j must exceed -1/theta");
}

double ltheta_aggregate(const std::vector<double>& v, double theta) {
  if (v.empty()) return 0.0;
  if (std::isinf(theta)) return *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::pow(x, theta);
  return std::pow(s, 1.0 / theta);
}

NormBreakdown block_norm(const TrigPoly& f, const SpaceParams& prm, int n,
                         const GridOptions& opt) {
  validate(prm, f.m);
  LorentzParams lp{prm.p, prm.tau};
  NormBreakdown out;
  out.theta = prm.theta;
  std::vector<double> vals;
  for (const auto& [s, blk] : blocks_of(f)) {
    double w = 1.0;
    for (int j = 0; j < f.m; ++j) w *= std::pow(s[j] + 1.0, prm.b[j]);
    double v = w * poly_lorentz_norm(blk, lp, n, opt);
    out.contributions.emplace_back(s, v);
    vals.push_back(v);
  }
  out.total = ltheta_aggregate(vals, prm.theta);
  return out;
}

double mixed_modulus(const TrigPoly& f, const std::vector<double>& t,
                     const LorentzParams& lp, const ModulusConfig& cfg) {
  if (static_cast<int>(t.size()) != f.m)
    throw param_error("modulus step bound t must have one entry per coordinate");
  for (double tj : t)
    if (!(tj > 0.0) || tj > 1.0) throw param_error("modulus step bound t_j must lie in (0, 1]");
  if (cfg.h_start < 2 || cfg.h_max < cfg.h_start)
    throw param_error("h-lattice sizes must satisfy 2 <= h_start <= h_max");
  std::vector<int> order = resolve_order(cfg, f.m);
  if (f.size() == 0) return 0.0;

  int n = modest_grid(f, cfg.grid_n);
  GridOptions opt;
  double prev = -1.0;
  double sup = 0.0;
  for (int S = cfg.h_start;; S = 2 * S - 1) {
    // Any h_j = 0 kills the whole difference, so the lattice starts at 1.
    std::vector<int> idx(f.m, 1);
    std::vector<double> h(f.m);
    do {
      for (int j = 0; j < f.m; ++j) h[j] = t[j] * idx[j] / (S - 1);
      TrigPoly d = mixed_difference(f, order, h);
      sup = std::max(sup, poly_lorentz_norm(d, lp, n, opt));
    } while (advance(idx, 1, S - 1));
    if (prev >= 0.0 && sup - prev <= cfg.refine_tol * sup) break;
    if (2 * S - 1 > cfg.h_max) break;
    prev = sup;
  }
  return sup;
}

NormBreakdown smoothness_norm_modulus(const TrigPoly& f, const SpaceParams& prm,
                                      const ModulusConfig& cfg) {
  validate(prm, f.m);
  if (cfg.levels < 0) throw param_error("modulus level count must be >= 0");
  LorentzParams lp{prm.p, prm.tau};
  NormBreakdown out;
  out.theta = prm.theta;
  out.base = poly_lorentz_norm(f, lp, cfg.grid_n);

  int L = cfg.levels;
  if (L == 0) {
    int s_max = 0;
    for (const auto& [k, c] : f.coeffs)
      for (int kj : k) s_max = std::max(s_max, block_index(kj));
    L = s_max + 2;
  }

  // Raw sampled modulus per dyadic t-cell, then a running max toward
  // larger t: the true modulus is non-decreasing in every t_j.
  std::map<std::vector<int>, double> omega;
  std::vector<int> l(f.m, 0);
  std::vector<double> t(f.m);
  do {
    for (int j = 0; j < f.m; ++j) t[j] = std::ldexp(1.0, -l[j]);
    omega[l] = mixed_modulus(f, t, lp, cfg);
  } while (advance(l, 0, L));
  for (auto it = omega.rbegin(); it != omega.rend(); ++it) {
    for (int j = 0; j < f.m; ++j) {
      std::vector<int> deeper = it->first;
      if (deeper[j] == L) continue;
      ++deeper[j];
      it->second = std::max(it->second, omega.at(deeper));
    }
  }

  const bool sup_form = std::isinf(prm.theta);
  const double cell_measure = sup_form ? 1.0 : std::pow(std::log(2.0), f.m / prm.theta);
  std::vector<double> vals;
  for (const auto& [lv, om] : omega) {
    double w = 1.0;
    for (int j = 0; j < f.m; ++j) w *= std::pow(lv[j] + 1.5, prm.b[j]);
    double v = w * cell_measure * om;
    out.contributions.emplace_back(lv, v);
    vals.push_back(v);
  }
  out.total = out.base + ltheta_aggregate(vals, prm.theta);
  return out;
}

int super_dyadic_level(int s) {
  if (s < 1) throw param_error("super-dyadic level needs a block index >= 1");
  if (s == 1) return 0;
  int l = 0;
  while ((1 << l) < s) ++l;
  return l;
}

NormBreakdown smoothness_norm_discrete(const TrigPoly& f, const SpaceParams& prm,
                                       int n, const GridOptions& opt) {
  validate(prm, f.m);
  LorentzParams lp{prm.p, prm.tau};
  NormBreakdown out;
  out.theta = prm.theta;
  out.base = poly_lorentz_norm(f, lp, n, opt);

  std::map<std::vector<int>, TrigPoly> cells;
  for (const auto& [s, blk] : blocks_of(f)) {
    if (std::any_of(s.begin(), s.end(), [](int sj) { return sj == 0; })) continue;
    std::vector<int> lv(f.m);
    for (int j = 0; j < f.m; ++j) lv[j] = super_dyadic_level(s[j]);
    auto [it, fresh] = cells.emplace(lv, blk);
    if (!fresh)
      for (const auto& [k, c] : blk.coeffs) it->second.add(k, c);
  }

  const double it = inv_theta_of(prm.theta);
  std::vector<double> vals;
  for (const auto& [lv, cell] : cells) {
    double w = 1.0;
    for (int j = 0; j < f.m; ++j) w *= std::pow(2.0, lv[j] * (prm.b[j] + it));
    double v = w * poly_lorentz_norm(cell, lp, n, opt);
    out.contributions.emplace_back(lv, v);
    vals.push_back(v);
  }
  out.total = out.base + ltheta_aggregate(vals, prm.theta);
  return out;
}

double lacunary_block_norm(const LacunarySeries& ls, const SpaceParams& prm) {
  validate(prm, ls.m);
  std::vector<double> vals;
  for (const auto& [nu, lam] : ls.lambda) {
    double w = 1.0;
    for (int j = 0; j < ls.m; ++j) w *= std::pow(nu[j] + 2.0, prm.b[j]);
    vals.push_back(w * std::abs(lam));
  }
  return ltheta_aggregate(vals, prm.theta);
}

double lacunary_tail_norm(const LacunarySeries& ls, const SpaceParams& prm,
                          double q) {
  validate(prm, ls.m);
  if (q != 2.0 && q != prm.tau)
    throw param_error("tail exponent q must be 2 or tau");
  if (ls.lambda.empty()) return 0.0;

  std::vector<int> hi(ls.m, 0);
  for (const auto& [nu, lam] : ls.lambda)
    for (int j = 0; j < ls.m; ++j) hi[j] = std::max(hi[j], nu[j] + 1);

  std::vector<double> vals;
  std::vector<int> nu(ls.m, 1);
  do {
    double tail = 0.0;
    for (const auto& [mu, lam] : ls.lambda) {
      bool in = true;
      for (int j = 0; j < ls.m; ++j)
        if (mu[j] < nu[j] - 1) { in = false; break; }
      if (in) tail += std::pow(std::abs(lam), q);
    }
    if (tail > 0.0) {
      double w = 1.0;
      for (int j = 0; j < ls.m; ++j) w *= std::pow(nu[j] + 1.0, prm.b[j]);
      vals.push_back(w * std::pow(tail, 1.0 / q));
    }
  } while ([&] {
    for (int j = 0; j < ls.m; ++j) {
      if (nu[j] < hi[j]) { ++nu[j]; return true; }
      nu[j] = 1;
    }
    return false;
  }());
  return ltheta_aggregate(vals, prm.theta);
}

} // namespace logsmooth
