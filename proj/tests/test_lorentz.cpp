#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "logsmooth/errors.hpp"
#include "logsmooth/lorentz.hpp"

using namespace logsmooth;

namespace {

GridSamples cosine_grid(int n) {
  GridSamples g{1, n, std::vector<double>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i)
    g.values[static_cast<std::size_t>(i)] = std::cos(2.0 * M_PI * (i + 0.5) / n);
  return g;
}

std::vector<double> random_values(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = dist(rng);
  return v;
}

} // namespace

TEST_CASE("parameter validation rejects out-of-range exponents") {
  CHECK_THROWS_AS(validate(LorentzParams{1.0, 1.0}), param_error);
  CHECK_THROWS_AS(validate(LorentzParams{0.5, 2.0}), param_error);
  CHECK_THROWS_AS(validate(LorentzParams{2.0, 0.9}), param_error);
  CHECK_THROWS_AS(validate(LorentzParams{std::numeric_limits<double>::infinity(), 2.0}),
                  param_error);
  CHECK_NOTHROW(validate(LorentzParams{1.0001, 1.0}));
}

TEST_CASE("rearrangement sorts the absolute values and keeps the multiset") {
  auto v = random_values(257, 11);
  auto r = rearrange(v);
  CHECK(r.values.size() == v.size());
  CHECK(r.cell_measure == doctest::Approx(1.0 / 257).epsilon(1e-15));
  CHECK(std::is_sorted(r.values.begin(), r.values.end(), std::greater<double>()));
  for (auto& x : v) x = std::fabs(x);
  std::sort(v.begin(), v.end(), std::greater<double>());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(r.values[i] == v[i]);
}

TEST_CASE("rearrangement of a cosine matches cos(pi t / 2)") {
  // |cos(2 pi x)| on [0,1) has distribution function matching the decreasing
  // profile cos(pi t / 2); midpoint sampling keeps the deviation O(1/n).
  const int n = 4096;
  auto r = rearrange(cosine_grid(n));
  double dev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = (k + 0.5) / n;
    dev = std::max(dev, std::fabs(r.values[static_cast<std::size_t>(k)] - std::cos(M_PI * t / 2)));
  }
  CHECK(dev <= 2e-3);
}

TEST_CASE("p equal tau reproduces the plain p-norm exactly") {
  auto v = random_values(300, 23);
  GridSamples g{1, 300, v};
  for (double p : {1.5, 2.0, 3.0, 7.5}) {
    const double a = lorentz_norm(g, LorentzParams{p, p});
    const double b = lp_norm(g, p);
    CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, b));
  }
}

TEST_CASE("two-level step function has closed-form (2,1) norm") {
  // v = 2 on half the domain, 1 on the rest: norm = 1 + 1/sqrt(2).
  std::vector<double> v(64, 1.0);
  std::fill(v.begin(), v.begin() + 32, 2.0);
  const double got = lorentz_norm(rearrange(v), LorentzParams{2.0, 1.0});
  CHECK(got == doctest::Approx(1.7071067811865475).epsilon(1e-13));
}

TEST_CASE("cosine norms match known values") {
  const int n = 4096;
  auto g = cosine_grid(n);
  CHECK(lorentz_norm(g, LorentzParams{2.0, 2.0}) ==
        doctest::Approx(0.7071067811865475).epsilon(1e-6));
  CHECK(lorentz_norm(g, LorentzParams{4.0, 4.0}) ==
        doctest::Approx(0.7825422900366437).epsilon(1e-6));
  // (2,1) norm equals the Fresnel integral int_0^1 cos(pi u^2 / 2) du.
  CHECK(lorentz_norm(g, LorentzParams{2.0, 1.0}) ==
        doctest::Approx(0.7798934003768).epsilon(5e-3));
}

TEST_CASE("norm is permutation invariant and positively homogeneous") {
  auto v = random_values(128, 37);
  std::vector<double> w = v;
  std::mt19937 rng(41);
  std::shuffle(w.begin(), w.end(), rng);
  const LorentzParams lp{2.5, 1.5};
  const double nv = lorentz_norm(rearrange(v), lp);
  CHECK(lorentz_norm(rearrange(w), lp) == doctest::Approx(nv).epsilon(1e-13));
  for (auto& x : w) x *= -4.5;
  CHECK(lorentz_norm(rearrange(w), lp) == doctest::Approx(4.5 * nv).epsilon(1e-13));
}

TEST_CASE("norm decreases as the second index grows") {
  auto v = random_values(200, 53);
  auto r = rearrange(v);
  double prev = std::numeric_limits<double>::infinity();
  for (double tau : {1.0, 1.5, 2.0, 3.0, 6.0}) {
    const double cur = lorentz_norm(r, LorentzParams{2.5, tau});
    CHECK(cur <= prev * (1 + 1e-12));
    prev = cur;
  }
}

TEST_CASE("coefficient estimate reproduces harmonic-number growth") {
  // a_nu = nu^{-1/2} with p = tau = 2 gives exactly H_N^{1/2}.
  std::vector<double> a(64);
  for (int i = 0; i < 64; ++i) a[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(i + 1.0);
  const double got = hl_lorentz_estimate(a, LorentzParams{2.0, 2.0});
  CHECK(got == doctest::Approx(2.178047498037122).epsilon(1e-13));
  CHECK(hl_lorentz_estimate({1.0}, LorentzParams{3.0, 1.5}) == doctest::Approx(1.0));
}

TEST_CASE("coefficient estimate requires a non-increasing sequence") {
  CHECK_THROWS_AS(hl_lorentz_estimate({1.0, 2.0}, LorentzParams{2.0, 2.0}), param_error);
}

TEST_CASE("empty and zero inputs give zero norm") {
  CHECK(lorentz_norm(rearrange(std::vector<double>{0.0, 0.0}), LorentzParams{2.0, 1.0}) == 0.0);
}
