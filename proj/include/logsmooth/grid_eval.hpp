#ifndef LOGSMOOTH_GRID_EVAL_HPP
#define LOGSMOOTH_GRID_EVAL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "logsmooth/lorentz.hpp"
#include "logsmooth/trig_poly.hpp"

namespace logsmooth {

// Sampling controls for grid evaluation.
//   offset: samples are taken at x_j = (i_j + offset)/n instead of i_j/n.
//   allow_subnyquist: permit n < 4*max|k| (frequencies fold mod n; sample
//     values stay exact, but the grid no longer resolves the spectrum).
struct GridOptions {
  double offset = 0.0;
  bool allow_subnyquist = false;
};

// Golden-ratio fraction used for sub-Nyquist sampling: keeps the sample
// phases of folded frequency classes equidistributed instead of coherent.
inline constexpr double kEquidistributedOffset = 0.6180339887498949;

// Default per-axis resolution (m=1: 8192, m=2: 1024, m>=3: 128).
int default_grid_n(int m);

// Cap on total sample count n^m, overridable via LOGSMOOTH_GRID_MAX.
std::size_t grid_sample_cap();

// Smallest power of two >= max(default_grid_n(m), 4*max|k|) subject to the
// sample cap; throws resolution_error if the cap forbids an adequate grid.
int adequate_grid_n(const TrigPoly& f);

// Complex values of f at the (offset) uniform grid, row-major.
std::vector<std::complex<double>> evaluate_complex(const TrigPoly& f, int n,
                                                   const GridOptions& opt = {});

// Real part of f on the grid (pre: n >= 4*max|k| unless allow_subnyquist).
GridSamples evaluate_on_grid(const TrigPoly& f, int n, const GridOptions& opt = {});

// |f| on the grid; the input to rearrangement for complex polynomials.
GridSamples evaluate_modulus_on_grid(const TrigPoly& f, int n, const GridOptions& opt = {});

// Lorentz norm of f via modulus samples at resolution n (0 = adequate auto).
double poly_lorentz_norm(const TrigPoly& f, const LorentzParams& lp, int n = 0,
                         const GridOptions& opt = {});

// In-place complex FFT, n a power of two. sign=+1 computes
// X_i = sum_k x_k e^{+2 pi i k i / n} (the evaluation direction).
void fft_pow2(std::vector<std::complex<double>>& x, int sign);

} // namespace logsmooth

#endif
