#ifndef LOGSMOOTH_TRIG_POLY_HPP
#define LOGSMOOTH_TRIG_POLY_HPP

#include <complex>
#include <map>
#include <vector>

namespace logsmooth {

// Integer frequency vector k = (k_1,...,k_m); the basis function is
// e^{i 2 pi <k, x>} on the unit torus [0,1)^m.
using Frequency = std::vector<int>;

// Per-axis dyadic block index s = (s_1,...,s_m), s_j >= 0.
using DyadicIndex = std::vector<int>;

// Finite trigonometric polynomial as a sparse coefficient map.
// Invariant: no stored coefficient is exactly zero; every key has size m.
struct TrigPoly {
  int m = 1;
  std::map<Frequency, std::complex<double>> coeffs;

  explicit TrigPoly(int dim = 1);

  void add(const Frequency& k, std::complex<double> c);  // accumulate, prune zeros
  std::complex<double> at(const Frequency& k) const;     // 0 if absent
  std::size_t size() const { return coeffs.size(); }

  // Largest |k_j| over all coefficients and axes; 0 for the zero polynomial.
  long long max_abs_freq() const;

  // c(-k) == conj(c(k)) for every k, within tol -> the polynomial is real.
  bool is_hermitian(double tol = 1e-12) const;

  // Coefficient-wise mean-zero check in each variable: every frequency has
  // k_j != 0 for all j (the paper-side zero-mean condition per variable).
  bool is_mean_zero_each_variable() const;
};

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
TrigPoly operator*(double s, const TrigPoly& f);

// Dyadic shell of axis index s: |k| in [lo, hi). s=0 gives [0,1) = {0};
// s>=1 gives [2^(s-1), 2^s).
struct AxisShell {
  long long lo = 0;
  long long hi = 1;
  bool contains(long long k) const {
    long long a = k < 0 ? -k : k;
    return a >= lo && a < hi;
  }
};

// Per-axis shells of the dyadic cell rho(s); pre: s_j >= 0.
std::vector<AxisShell> dyadic_cell(const DyadicIndex& s);

// Block index of a scalar frequency: 0 for k=0, floor(log2|k|)+1 otherwise.
int block_index(long long k);

// Block index vector of a frequency.
DyadicIndex block_of(const Frequency& k);

// The sub-polynomial of f with spectrum in the dyadic cell rho(s).
TrigPoly block_extract(const TrigPoly& f, const DyadicIndex& s);

// All nonempty dyadic blocks of f, keyed by block index.
std::map<DyadicIndex, TrigPoly> blocks_of(const TrigPoly& f);

// Lacunary series sum_nu lambda_nu * prod_j cos(2 pi 2^(nu_j) x_j),
// keyed by nu = (nu_1,...,nu_m), nu_j >= 0.
struct LacunarySeries {
  int m = 1;
  std::map<std::vector<int>, double> lambda;
};

// Expansion into exponentials: each product of cosines contributes
// lambda/2^m at the 2^m sign combinations of (+-2^(nu_j)).
TrigPoly lacunary_to_trigpoly(const LacunarySeries& ls);

// Mixed difference of order k (k_j >= 1) with step h: multiplies the
// coefficient at frequency n by prod_j (e^{i 2 pi n_j h_j} - 1)^(k_j).
TrigPoly mixed_difference(const TrigPoly& f, const std::vector<int>& order,
                          const std::vector<double>& h);

// L_2 norm on the unit torus: sqrt(sum |c_k|^2) (orthonormal basis).
double parseval_l2(const TrigPoly& f);

} // namespace logsmooth

#endif
