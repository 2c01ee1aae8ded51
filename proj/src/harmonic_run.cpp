#include "logsmooth/harmonic_run.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logsmooth/errors.hpp"

namespace logsmooth {

namespace {

constexpr long long kTableThreshold = 1LL << 21;
constexpr int kTableSize = 8192;

bool is_pow2(long long n) { return n > 0 && (n & (n - 1)) == 0; }

void validate_term(const CosineRunTerm& t, int m) {
  if (t.run_coord < 0 || t.run_coord >= m)
    throw param_error("run poly: run_coord out of range");
  if (t.lo < 1 || t.hi <= t.lo)
    throw param_error("run poly: need 1 <= lo < hi");
  if (static_cast<int>(t.mod.size()) != m)
    throw param_error("run poly: modulation vector must have size m");
}

// e^{2 pi i * offset * l / n} recomputed exactly (extended precision keeps the
// reduced angle accurate for l up to ~2^40).
std::complex<double> phase_at(double offset, long long l, int n) {
  long double t = std::fmod(static_cast<long double>(offset) * static_cast<long double>(l),
                            static_cast<long double>(n));
  const long double ang = 2.0L * 3.14159265358979323846264338327950288L * t /
                          static_cast<long double>(n);
  return std::polar(1.0, static_cast<double>(ang));
}

} // namespace

long long RunPoly::max_abs_freq() const {
  long long mx = 0;
  for (const auto& t : terms) {
    mx = std::max(mx, t.hi - 1);
    for (int k = 0; k < m; ++k)
      if (k != t.run_coord) mx = std::max(mx, std::llabs(t.mod[k]));
  }
  return mx;
}

long long RunPoly::expanded_size() const {
  long long total = 0;
  for (const auto& t : terms) total += 2 * (t.hi - t.lo);
  return total;
}

TrigPoly to_trigpoly(const RunPoly& rp, long long max_coeffs) {
  if (rp.expanded_size() > max_coeffs)
    throw size_error("run poly: expansion would exceed the coefficient budget");
  TrigPoly out(rp.m);
  Frequency k(rp.m);
  for (const auto& t : rp.terms) {
    validate_term(t, rp.m);
    for (int j = 0; j < rp.m; ++j)
      if (j != t.run_coord) {
        if (t.mod[j] > (1LL << 30) || t.mod[j] < -(1LL << 30))
          throw size_error("run poly: modulation frequency exceeds int range");
        k[j] = static_cast<int>(t.mod[j]);
      }
    if (t.hi - 1 > (1LL << 30)) throw size_error("run poly: run frequency exceeds int range");
    for (long long l = t.lo; l < t.hi; ++l) {
      const double a = 0.5 * t.scale * std::pow(static_cast<double>(l), -t.decay);
      k[t.run_coord] = static_cast<int>(l);
      out.add(k, std::complex<double>(a, 0.0));
      k[t.run_coord] = static_cast<int>(-l);
      out.add(k, std::complex<double>(a, 0.0));
    }
  }
  return out;
}

std::vector<std::complex<double>> fold_cosine_run(long long lo, long long hi, double decay,
                                                  int n, double offset) {
  if (lo < 1 || hi <= lo) throw param_error("fold: need 1 <= lo < hi");
  if (!is_pow2(n)) throw param_error("fold: n must be a power of two");
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n), {0.0, 0.0});
  const std::complex<double> dz = phase_at(offset, 1, n);
  const int mask = n - 1;

  // Walk dyadic blocks [2^(s-1), 2^s) so the coefficient l^(-decay) can be
  // tabulated as factor * g(l * 2^(1-s)) with g on [1,2).
  long long a = lo;
  while (a < hi) {
    int s = 1;
    while ((1LL << s) <= a) ++s;            // 2^(s-1) <= a < 2^s
    const long long b = std::min(hi, 1LL << s);
    const double inv = std::ldexp(1.0, -(s - 1));
    const double factor = std::pow(std::ldexp(1.0, s - 1), -decay);
    const bool tabulate = (b - a) >= kTableThreshold;

    static thread_local std::vector<double> g, dg;
    if (tabulate) {
      g.resize(kTableSize + 1);
      dg.resize(kTableSize);
      for (int i = 0; i <= kTableSize; ++i)
        g[static_cast<std::size_t>(i)] =
            std::pow(1.0 + static_cast<double>(i) / kTableSize, -decay);
      for (int i = 0; i < kTableSize; ++i)
        dg[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i) + 1] - g[static_cast<std::size_t>(i)];
    }

    int r = static_cast<int>(a & mask);
    std::complex<double> z = phase_at(offset, a, n);
    long long l = a;
    while (l < b) {
      const long long chunk = std::min(b, l + 65536);
      if (tabulate) {
        for (; l < chunk; ++l) {
          const double pos = (static_cast<double>(l) * inv - 1.0) * kTableSize;
          const int idx = static_cast<int>(pos);
          const double val =
              factor * (g[static_cast<std::size_t>(idx)] +
                        (pos - idx) * dg[static_cast<std::size_t>(idx)]);
          w[static_cast<std::size_t>(r)] += val * z;
          z *= dz;
          r = (r + 1) & mask;
        }
      } else {
        for (; l < chunk; ++l) {
          const double val = std::pow(static_cast<double>(l), -decay);
          w[static_cast<std::size_t>(r)] += val * z;
          z *= dz;
          r = (r + 1) & mask;
        }
      }
      z = phase_at(offset, l, n);  // renormalize the rotation
    }
    a = b;
  }
  return w;
}

std::vector<std::complex<double>> evaluate_complex(const RunPoly& rp, int n, double offset) {
  if (!is_pow2(n)) throw param_error("run poly: n must be a power of two");
  std::size_t total = 1;
  for (int j = 0; j < rp.m; ++j) {
    if (total > grid_sample_cap() / static_cast<std::size_t>(n))
      throw resolution_error("run poly: n^m exceeds the sample cap");
    total *= static_cast<std::size_t>(n);
  }
  std::vector<std::complex<double>> field(total, {0.0, 0.0});
  std::vector<std::size_t> stride(static_cast<std::size_t>(rp.m));
  stride[static_cast<std::size_t>(rp.m) - 1] = 1;
  for (int j = rp.m - 2; j >= 0; --j)
    stride[static_cast<std::size_t>(j)] = stride[static_cast<std::size_t>(j) + 1] * static_cast<std::size_t>(n);

  for (const auto& t : rp.terms) {
    validate_term(t, rp.m);
    // Run-axis values: fold, transform, take the real part (the cosine sum
    // along that axis is a real function).
    std::vector<std::complex<double>> line = fold_cosine_run(t.lo, t.hi, t.decay, n, offset);
    fft_pow2(line, +1);
    std::vector<double> run_vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) run_vals[static_cast<std::size_t>(i)] = line[static_cast<std::size_t>(i)].real();

    if (rp.m == 1) {
      for (int i = 0; i < n; ++i)
        field[static_cast<std::size_t>(i)] += t.scale * run_vals[static_cast<std::size_t>(i)];
      continue;
    }

    // Modulation exponentials per remaining axis.
    std::vector<std::vector<std::complex<double>>> mods(static_cast<std::size_t>(rp.m));
    for (int k = 0; k < rp.m; ++k) {
      if (k == t.run_coord) continue;
      auto& v = mods[static_cast<std::size_t>(k)];
      v.resize(static_cast<std::size_t>(n));
      const std::complex<double> ph = phase_at(offset, t.mod[static_cast<std::size_t>(k)], n);
      for (int i = 0; i < n; ++i) {
        const long long r = (static_cast<long long>(t.mod[static_cast<std::size_t>(k)]) * i) % n;
        v[static_cast<std::size_t>(i)] =
            std::polar(1.0, 2.0 * M_PI * static_cast<double>(r < 0 ? r + n : r) / n) * ph;
      }
    }

    std::vector<int> digits(static_cast<std::size_t>(rp.m), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::complex<double> v(t.scale * run_vals[static_cast<std::size_t>(digits[static_cast<std::size_t>(t.run_coord)])], 0.0);
      for (int k = 0; k < rp.m; ++k)
        if (k != t.run_coord)
          v *= mods[static_cast<std::size_t>(k)][static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
      field[idx] += v;
      for (int j = rp.m - 1; j >= 0; --j) {
        if (++digits[static_cast<std::size_t>(j)] < n) break;
        digits[static_cast<std::size_t>(j)] = 0;
      }
    }
  }
  return field;
}

GridSamples evaluate_modulus_on_grid(const RunPoly& rp, int n, double offset) {
  const auto field = evaluate_complex(rp, n, offset);
  GridSamples g{rp.m, n, std::vector<double>(field.size())};
  for (std::size_t i = 0; i < field.size(); ++i) g.values[i] = std::abs(field[i]);
  return g;
}

double run_lorentz_norm(const RunPoly& rp, const LorentzParams& lp, int n) {
  const double offset =
      4 * rp.max_abs_freq() <= static_cast<long long>(n) ? 0.0 : kEquidistributedOffset;
  return lorentz_norm(evaluate_modulus_on_grid(rp, n, offset), lp);
}

double run_parseval_l2(const RunPoly& rp) {
  double acc = 0.0;
  for (const auto& t : rp.terms) {
    const double q = 2.0 * t.decay;
    double s = 0.0;
    if (t.hi - t.lo < kTableThreshold) {
      for (long long l = t.lo; l < t.hi; ++l) s += std::pow(static_cast<double>(l), -q);
    } else {
      // Euler-Maclaurin: sum_{l=a}^{b-1} l^-q with endpoint and first
      // derivative corrections; error negligible for a >= 2^16.
      const double a = static_cast<double>(t.lo), b = static_cast<double>(t.hi);
      if (q == 1.0) s = std::log(b / a);
      else s = (std::pow(b, 1.0 - q) - std::pow(a, 1.0 - q)) / (1.0 - q);
      s += 0.5 * (std::pow(a, -q) - std::pow(b, -q));
      s += (q / 12.0) * (std::pow(a, -q - 1.0) - std::pow(b, -q - 1.0));
    }
    acc += 0.5 * t.scale * t.scale * s;
  }
  return std::sqrt(acc);
}

} // namespace logsmooth
