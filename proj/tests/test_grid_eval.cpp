#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "logsmooth/errors.hpp"
#include "logsmooth/grid_eval.hpp"
#include "logsmooth/trig_poly.hpp"

using namespace logsmooth;

namespace {

TrigPoly random_real_poly(int m, int maxfreq, int nterms, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> fd(-maxfreq, maxfreq);
  std::uniform_real_distribution<double> cd(-1.0, 1.0);
  TrigPoly f(m);
  for (int t = 0; t < nterms; ++t) {
    Frequency k(static_cast<std::size_t>(m));
    for (auto& kj : k) kj = fd(rng);
    std::complex<double> c{cd(rng), cd(rng)};
    f.add(k, c);
    Frequency nk = k;
    for (auto& kj : nk) kj = -kj;
    f.add(nk, std::conj(c));
  }
  return f;
}

std::complex<double> eval_point(const TrigPoly& f, const std::vector<double>& x) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [k, c] : f.coeffs) {
    double ang = 0.0;
    for (int j = 0; j < f.m; ++j) ang += k[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    acc += c * std::polar(1.0, 2.0 * M_PI * ang);
  }
  return acc;
}

} // namespace

TEST_CASE("transform path matches direct evaluation at every grid point") {
  for (int m : {1, 2}) {
    auto f = random_real_poly(m, 10, 12, 100u + static_cast<unsigned>(m));
    const int n = 64;
    auto field = evaluate_complex(f, n, {});
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    std::size_t total = 1;
    for (int j = 0; j < m; ++j) total *= static_cast<std::size_t>(n);
    double dev = 0.0;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<double> x(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) x[static_cast<std::size_t>(j)] = double(digits[static_cast<std::size_t>(j)]) / n;
      dev = std::max(dev, std::abs(field[idx] - eval_point(f, x)));
      for (int j = m - 1; j >= 0; --j) {
        if (++digits[static_cast<std::size_t>(j)] < n) break;
        digits[static_cast<std::size_t>(j)] = 0;
      }
    }
    CHECK(dev <= 1e-11);
  }
}

TEST_CASE("offset grids shift every sample point by the same fraction") {
  auto f = random_real_poly(1, 9, 8, 5);
  const int n = 64;
  GridOptions opt;
  opt.offset = 0.37;
  auto field = evaluate_complex(f, n, opt);
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    dev = std::max(dev, std::abs(field[static_cast<std::size_t>(i)] -
                                 eval_point(f, {(i + 0.37) / n})));
  CHECK(dev <= 1e-11);
}

TEST_CASE("power-of-two and direct-summation paths agree") {
  auto f = random_real_poly(1, 11, 10, 77);
  auto a = evaluate_on_grid(f, 64, {});
  // n = 48 is not a power of two and triggers the summation path; both
  // resolutions integrate |f|^2 exactly, so the norms must coincide.
  auto b = evaluate_on_grid(f, 48, {});
  const double na = lp_norm(a, 2.0), nb = lp_norm(b, 2.0);
  CHECK(na == doctest::Approx(nb).epsilon(1e-11));
  CHECK(na == doctest::Approx(parseval_l2(f)).epsilon(1e-11));
}

TEST_CASE("real-part samples and modulus samples agree for real polynomials") {
  auto f = random_real_poly(2, 6, 9, 31);
  auto re = evaluate_on_grid(f, 32, {});
  auto mo = evaluate_modulus_on_grid(f, 32, {});
  for (std::size_t i = 0; i < re.values.size(); ++i)
    CHECK(std::fabs(std::fabs(re.values[i]) - mo.values[i]) <= 1e-12);
}

TEST_CASE("norms stabilize under grid refinement") {
  auto f = random_real_poly(1, 16, 10, 91);
  const LorentzParams lp{2.0, 1.4};
  const double a = poly_lorentz_norm(f, lp, 4096);
  const double b = poly_lorentz_norm(f, lp, 8192);
  CHECK(std::fabs(a - b) <= 1e-3 * std::max(1.0, b));
}

TEST_CASE("default resolutions obey the frequency precondition") {
  CHECK(default_grid_n(1) == 8192);
  CHECK(default_grid_n(2) == 1024);
  CHECK(default_grid_n(3) == 128);
  TrigPoly f(1);
  f.add({5000}, {1.0, 0.0});
  f.add({-5000}, {1.0, 0.0});
  CHECK(adequate_grid_n(f) >= 20000);
  CHECK((adequate_grid_n(f) & (adequate_grid_n(f) - 1)) == 0);
}

TEST_CASE("coarse grids are rejected unless folding is requested") {
  TrigPoly f(1);
  f.add({100}, {1.0, 0.0});
  f.add({-100}, {1.0, 0.0});
  CHECK_THROWS_AS(evaluate_on_grid(f, 128, {}), resolution_error);
  GridOptions opt;
  opt.allow_subnyquist = true;
  CHECK_NOTHROW(evaluate_on_grid(f, 128, opt));
}

TEST_CASE("zero polynomial has zero norm at any scale") {
  TrigPoly f(2);
  CHECK(poly_lorentz_norm(f, LorentzParams{2.0, 2.0}) == 0.0);
}
