#include "logsmooth/grid_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "logsmooth/errors.hpp"

namespace logsmooth {

int default_grid_n(int m) {
  if (m <= 1) return 8192;
  if (m == 2) return 1024;
  return 128;
}

std::size_t grid_sample_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("LOGSMOOTH_GRID_MAX");
    if (env != nullptr) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v >= 1024ULL) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1) << 24;
  }();
  return cap;
}

static bool is_pow2(long long n) { return n > 0 && (n & (n - 1)) == 0; }

static int pow2_ceil(long long v) {
  int n = 1;
  while (n < v) n <<= 1;
  return n;
}

static std::size_t total_samples(int m, int n) {
  std::size_t t = 1;
  for (int j = 0; j < m; ++j) {
    if (t > grid_sample_cap() / static_cast<std::size_t>(n))
      throw resolution_error("grid: n^m exceeds the sample cap (LOGSMOOTH_GRID_MAX)");
    t *= static_cast<std::size_t>(n);
  }
  return t;
}

int adequate_grid_n(const TrigPoly& f) {
  const long long need = 4 * f.max_abs_freq();
  int n = pow2_ceil(std::max<long long>(default_grid_n(f.m), need));
  total_samples(f.m, n);  // throws if the cap forbids it
  return n;
}

void fft_pow2(std::vector<std::complex<double>>& x, int sign) {
  const std::size_t n = x.size();
  if (!is_pow2(static_cast<long long>(n))) throw param_error("fft: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

namespace {

// e^{2 pi i r / n} from a shared table; exact phases, no recurrence drift.
struct RootTable {
  int n;
  std::vector<std::complex<double>> root;
  explicit RootTable(int n_) : n(n_), root(n_) {
    for (int r = 0; r < n; ++r)
      root[r] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n));
  }
};

int mod_n(long long k, int n) {
  long long r = k % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

} // namespace

std::vector<std::complex<double>> evaluate_complex(const TrigPoly& f, int n,
                                                   const GridOptions& opt) {
  if (n < 1) throw param_error("evaluate: n must be >= 1");
  const long long mf = f.max_abs_freq();
  if (!opt.allow_subnyquist && static_cast<long long>(n) < 4 * mf)
    throw resolution_error("evaluate: n < 4*max|k|; raise n or allow sub-Nyquist sampling");
  const std::size_t total = total_samples(f.m, n);

  std::vector<std::complex<double>> field(total, std::complex<double>(0.0, 0.0));
  const double phase_scale = 2.0 * M_PI * opt.offset / static_cast<double>(n);

  if (is_pow2(n)) {
    // Fold coefficients mod n per axis, then transform each axis.
    std::vector<std::size_t> stride(f.m);
    stride[f.m - 1] = 1;
    for (int j = f.m - 2; j >= 0; --j) stride[j] = stride[j + 1] * static_cast<std::size_t>(n);
    for (const auto& [k, c] : f.coeffs) {
      std::size_t idx = 0;
      double ang = 0.0;
      for (int j = 0; j < f.m; ++j) {
        idx += stride[j] * static_cast<std::size_t>(mod_n(k[j], n));
        ang += phase_scale * static_cast<double>(k[j]);
      }
      field[idx] += c * std::polar(1.0, ang);
    }
    std::vector<std::complex<double>> line(static_cast<std::size_t>(n));
    for (int axis = 0; axis < f.m; ++axis) {
      const std::size_t st = stride[axis];
      const std::size_t nlines = total / static_cast<std::size_t>(n);
      for (std::size_t li = 0; li < nlines; ++li) {
        // base index of this line: expand li skipping the transformed axis
        std::size_t rem = li, base = 0;
        for (int j = f.m - 1; j >= 0; --j) {
          if (j == axis) continue;
          base += (rem % n) * stride[j];
          rem /= n;
        }
        for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = field[base + st * i];
        fft_pow2(line, +1);
        for (int i = 0; i < n; ++i) field[base + st * i] = line[static_cast<std::size_t>(i)];
      }
    }
    return field;
  }

  // Direct summation with exact twiddles; only viable for sparse spectra.
  if (f.coeffs.size() * total > (static_cast<std::size_t>(1) << 28))
    throw resolution_error("evaluate: non-power-of-two n too costly for this spectrum size");
  const RootTable table(n);
  std::vector<int> digits(f.m, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, c] : f.coeffs) {
      std::complex<double> e(1.0, 0.0);
      double ang = 0.0;
      for (int j = 0; j < f.m; ++j) {
        const long long ki = static_cast<long long>(k[j]) * digits[j];
        e *= table.root[mod_n(ki, n)];
        ang += phase_scale * static_cast<double>(k[j]);
      }
      acc += c * e * std::polar(1.0, ang);
    }
    field[idx] = acc;
    for (int j = f.m - 1; j >= 0; --j) {
      if (++digits[j] < n) break;
      digits[j] = 0;
    }
  }
  return field;
}

GridSamples evaluate_on_grid(const TrigPoly& f, int n, const GridOptions& opt) {
  const auto field = evaluate_complex(f, n, opt);
  GridSamples g{f.m, n, std::vector<double>(field.size())};
  for (std::size_t i = 0; i < field.size(); ++i) g.values[i] = field[i].real();
  return g;
}

GridSamples evaluate_modulus_on_grid(const TrigPoly& f, int n, const GridOptions& opt) {
  const auto field = evaluate_complex(f, n, opt);
  GridSamples g{f.m, n, std::vector<double>(field.size())};
  for (std::size_t i = 0; i < field.size(); ++i) g.values[i] = std::abs(field[i]);
  return g;
}

double poly_lorentz_norm(const TrigPoly& f, const LorentzParams& lp, int n,
                         const GridOptions& opt) {
  if (f.coeffs.empty()) return 0.0;
  const int use_n = n > 0 ? n : adequate_grid_n(f);
  return lorentz_norm(evaluate_modulus_on_grid(f, use_n, opt), lp);
}

} // namespace logsmooth
