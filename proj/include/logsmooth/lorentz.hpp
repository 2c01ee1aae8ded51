#ifndef LOGSMOOTH_LORENTZ_HPP
#define LOGSMOOTH_LORENTZ_HPP

#include <cstddef>
#include <vector>

namespace logsmooth {

// Values of a function on the uniform grid of the unit torus [0,1)^m,
// n points per axis, row-major over (i_1,...,i_m), values.size() == n^m.
struct GridSamples {
  int m = 1;
  int n = 0;
  std::vector<double> values;
};

// Second index of L_{p,tau}: 1 < p < infinity, 1 <= tau < infinity.
struct LorentzParams {
  double p = 2.0;
  double tau = 2.0;
};

// Non-increasing rearrangement of |samples| as a step function on (0,1]:
// value values[k] on ((k)/M, (k+1)/M], M = values.size().
struct StepRearrangement {
  std::vector<double> values;     // non-increasing, >= 0
  double cell_measure = 0.0;      // 1/M
};

void validate(const LorentzParams& lp);

StepRearrangement rearrange(std::vector<double> samples);
StepRearrangement rearrange(const GridSamples& samples);

// { (tau/p) * integral_0^1 f*(t)^tau t^(tau/p - 1) dt }^(1/tau), evaluated
// in closed form per step of the rearrangement (no quadrature error beyond
// round-off for the step function itself).
double lorentz_norm(const StepRearrangement& r, const LorentzParams& lp);
double lorentz_norm(const GridSamples& samples, const LorentzParams& lp);

// Discrete mean L_p norm ((1/M) sum |v|^p)^(1/p), 1 <= p < infinity.
double lp_norm(const GridSamples& samples, double p);

// Two-sided Lorentz-norm estimate for a cosine series with non-increasing
// non-negative coefficients a_1 >= a_2 >= ... >= 0:
//   ( sum_nu a_nu^tau * nu^(tau/p' - 1) )^(1/tau),  1/p' = 1 - 1/p.
// Throws param_error if the coefficients are not non-increasing.
double hl_lorentz_estimate(const std::vector<double>& a, const LorentzParams& lp);

} // namespace logsmooth

#endif
