#ifndef LOGSMOOTH_HARMONIC_RUN_HPP
#define LOGSMOOTH_HARMONIC_RUN_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "logsmooth/grid_eval.hpp"
#include "logsmooth/lorentz.hpp"
#include "logsmooth/trig_poly.hpp"

namespace logsmooth {

// One structured term:
//   scale * prod_{k != run_coord} e^{i 2 pi mod_k x_k}
//         * sum_{l=lo}^{hi-1} l^(-decay) cos(2 pi l x_run_coord).
// Compact stand-in for coefficient runs far too long to materialize.
struct CosineRunTerm {
  int run_coord = 0;
  long long lo = 1;
  long long hi = 2;              // half-open [lo, hi), lo >= 1
  double decay = 0.0;
  double scale = 1.0;
  std::vector<long long> mod;    // size m; entry at run_coord ignored
};

struct RunPoly {
  int m = 1;
  std::vector<CosineRunTerm> terms;

  long long max_abs_freq() const;
  // Total exponential coefficient count if expanded (2 per run element).
  long long expanded_size() const;
};

// Explicit expansion; throws size_error beyond max_coeffs.
TrigPoly to_trigpoly(const RunPoly& rp, long long max_coeffs = (1LL << 22));

// sum_{l=lo}^{hi-1} l^(-decay) e^{i 2 pi l (i + offset)/n} folded mod n:
// out[r] accumulates the classes l = r (mod n). Exact on the offset grid.
std::vector<std::complex<double>> fold_cosine_run(long long lo, long long hi, double decay,
                                                  int n, double offset);

// Complex values of the run polynomial on the (offset) uniform grid.
// n must be a power of two. Sub-Nyquist sampling is intentional here; with a
// nonzero offset the folded frequency classes stay phase-equidistributed.
std::vector<std::complex<double>> evaluate_complex(const RunPoly& rp, int n,
                                                   double offset);

GridSamples evaluate_modulus_on_grid(const RunPoly& rp, int n, double offset);

// Lorentz norm via modulus samples at resolution n per axis (n power of two).
// Picks offset 0 when the grid resolves the spectrum (n >= 4*max|k|) and the
// equidistributed offset otherwise.
double run_lorentz_norm(const RunPoly& rp, const LorentzParams& lp, int n);

// L_2 norm by coefficient sums: sqrt(sum over terms of scale^2/2 * sum l^(-2*decay)).
// Valid when distinct terms have disjoint spectra (the builders guarantee it).
double run_parseval_l2(const RunPoly& rp);

} // namespace logsmooth

#endif
