#include "logsmooth/trig_poly.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "logsmooth/errors.hpp"

namespace logsmooth {

TrigPoly::TrigPoly(int dim) : m(dim) {
  if (dim < 1) throw param_error("trig poly: dimension must be >= 1");
}

void TrigPoly::add(const Frequency& k, std::complex<double> c) {
  if (static_cast<int>(k.size()) != m)
    throw param_error("trig poly: frequency dimension mismatch");
  auto it = coeffs.find(k);
  if (it == coeffs.end()) {
    if (c != std::complex<double>(0.0, 0.0)) coeffs.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == std::complex<double>(0.0, 0.0)) coeffs.erase(it);
}

std::complex<double> TrigPoly::at(const Frequency& k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

long long TrigPoly::max_abs_freq() const {
  long long mx = 0;
  for (const auto& [k, c] : coeffs)
    for (int kj : k) mx = std::max(mx, static_cast<long long>(kj < 0 ? -static_cast<long long>(kj) : kj));
  return mx;
}

bool TrigPoly::is_hermitian(double tol) const {
  Frequency neg;
  for (const auto& [k, c] : coeffs) {
    neg.resize(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) neg[j] = -k[j];
    if (std::abs(at(neg) - std::conj(c)) > tol) return false;
  }
  return true;
}

bool TrigPoly::is_mean_zero_each_variable() const {
  for (const auto& [k, c] : coeffs)
    for (int kj : k)
      if (kj == 0) return false;
  return true;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  if (a.m != b.m) throw param_error("trig poly: dimension mismatch in +");
  TrigPoly r = a;
  for (const auto& [k, c] : b.coeffs) r.add(k, c);
  return r;
}

TrigPoly operator*(double s, const TrigPoly& f) {
  TrigPoly r(f.m);
  if (s == 0.0) return r;
  r.coeffs = f.coeffs;
  for (auto& [k, c] : r.coeffs) c *= s;
  return r;
}

std::vector<AxisShell> dyadic_cell(const DyadicIndex& s) {
  if (s.empty()) throw param_error("dyadic_cell: empty index");
  std::vector<AxisShell> cell(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 0) throw param_error("dyadic_cell: block index must be >= 0");
    if (s[j] >= 62) throw param_error("dyadic_cell: block index too large");
    if (s[j] == 0) {
      cell[j] = {0, 1};  // [2^(-1)] = 0, so only k = 0
    } else {
      cell[j] = {1LL << (s[j] - 1), 1LL << s[j]};
    }
  }
  return cell;
}

int block_index(long long k) {
  if (k < 0) k = -k;
  if (k == 0) return 0;
  int s = 1;
  while ((1LL << s) <= k) ++s;
  return s;  // 2^(s-1) <= |k| < 2^s
}

DyadicIndex block_of(const Frequency& k) {
  DyadicIndex s(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) s[j] = block_index(k[j]);
  return s;
}

TrigPoly block_extract(const TrigPoly& f, const DyadicIndex& s) {
  if (static_cast<int>(s.size()) != f.m)
    throw param_error("block_extract: index dimension mismatch");
  const std::vector<AxisShell> cell = dyadic_cell(s);
  TrigPoly r(f.m);
  for (const auto& [k, c] : f.coeffs) {
    bool in = true;
    for (int j = 0; j < f.m && in; ++j) in = cell[j].contains(k[j]);
    if (in) r.coeffs.emplace(k, c);
  }
  return r;
}

std::map<DyadicIndex, TrigPoly> blocks_of(const TrigPoly& f) {
  std::map<DyadicIndex, TrigPoly> out;
  for (const auto& [k, c] : f.coeffs) {
    DyadicIndex s = block_of(k);
    auto it = out.find(s);
    if (it == out.end()) it = out.emplace(s, TrigPoly(f.m)).first;
    it->second.coeffs.emplace(k, c);
  }
  return out;
}

TrigPoly lacunary_to_trigpoly(const LacunarySeries& ls) {
  if (ls.m < 1) throw param_error("lacunary series: dimension must be >= 1");
  TrigPoly out(ls.m);
  const double w = std::ldexp(1.0, -ls.m);  // 1/2^m
  Frequency k(ls.m);
  for (const auto& [nu, lam] : ls.lambda) {
    if (static_cast<int>(nu.size()) != ls.m)
      throw param_error("lacunary series: index dimension mismatch");
    for (int nj : nu) {
      if (nj < 0 || nj > 30) throw param_error("lacunary series: nu_j out of range [0,30]");
    }
    if (lam == 0.0) continue;
    for (int mask = 0; mask < (1 << ls.m); ++mask) {
      for (int j = 0; j < ls.m; ++j) {
        int f = 1 << nu[j];
        k[j] = (mask >> j) & 1 ? -f : f;
      }
      out.add(k, std::complex<double>(lam * w, 0.0));
    }
  }
  return out;
}

TrigPoly mixed_difference(const TrigPoly& f, const std::vector<int>& order,
                          const std::vector<double>& h) {
  if (static_cast<int>(order.size()) != f.m || static_cast<int>(h.size()) != f.m)
    throw param_error("mixed_difference: order/step dimension mismatch");
  for (int kj : order)
    if (kj < 1) throw param_error("mixed_difference: order must be >= 1 in every variable");
  TrigPoly out(f.m);
  const double two_pi = 2.0 * M_PI;
  for (const auto& [k, c] : f.coeffs) {
    std::complex<double> mult(1.0, 0.0);
    for (int j = 0; j < f.m; ++j) {
      const std::complex<double> base =
          std::polar(1.0, two_pi * static_cast<double>(k[j]) * h[j]) - 1.0;
      for (int r = 0; r < order[j]; ++r) mult *= base;
    }
    out.add(k, c * mult);
  }
  return out;
}

double parseval_l2(const TrigPoly& f) {
  double acc = 0.0;
  for (const auto& [k, c] : f.coeffs) acc += std::norm(c);
  return std::sqrt(acc);
}

} // namespace logsmooth
