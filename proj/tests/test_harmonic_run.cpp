#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "logsmooth/errors.hpp"
#include "logsmooth/grid_eval.hpp"
#include "logsmooth/harmonic_run.hpp"

using namespace logsmooth;

namespace {

RunPoly small_run() {
  RunPoly rp;
  rp.m = 1;
  CosineRunTerm t;
  t.run_coord = 0;
  t.lo = 1;
  t.hi = 64;
  t.decay = 0.5;
  t.scale = 1.25;
  t.mod = {0};
  rp.terms = {t};
  return rp;
}

} // namespace

TEST_CASE("structured evaluation matches the expanded polynomial") {
  auto rp = small_run();
  auto f = to_trigpoly(rp);
  const int n = 256;
  auto a = evaluate_complex(rp, n, 0.0);
  auto b = evaluate_complex(f, n, {});
  double dev = 0.0;
  for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  CHECK(dev <= 1e-10);
}

TEST_CASE("structured evaluation matches the expansion in two variables") {
  RunPoly rp;
  rp.m = 2;
  CosineRunTerm t0;
  t0.run_coord = 0;
  t0.lo = 2;
  t0.hi = 9;
  t0.decay = 0.75;
  t0.scale = 0.5;
  t0.mod = {0, 3};
  CosineRunTerm t1;
  t1.run_coord = 1;
  t1.lo = 1;
  t1.hi = 6;
  t1.decay = 0.25;
  t1.scale = -1.0;
  t1.mod = {2, 0};
  rp.terms = {t0, t1};
  auto f = to_trigpoly(rp);
  const int n = 64;
  auto a = evaluate_complex(rp, n, 0.0);
  GridOptions opt;
  auto b = evaluate_complex(f, n, opt);
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  CHECK(dev <= 1e-10);
}

TEST_CASE("offset evaluation matches the expansion on shifted points") {
  auto rp = small_run();
  auto f = to_trigpoly(rp);
  const int n = 256;
  const double offset = kEquidistributedOffset;
  auto a = evaluate_complex(rp, n, offset);
  GridOptions opt;
  opt.offset = offset;
  auto b = evaluate_complex(f, n, opt);
  double dev = 0.0;
  for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
  CHECK(dev <= 1e-10);
}

TEST_CASE("fold rotation stays accurate over long runs") {
  // A single high frequency folded far below its scale: the recurrence has to
  // hold phase over ~10^6 steps; compare against the closed form.
  CosineRunTerm t;
  t.run_coord = 0;
  t.lo = (1LL << 20) + 12345;
  t.hi = t.lo + 1;
  t.decay = 0.0;
  t.scale = 1.0;
  t.mod = {0};
  RunPoly rp;
  rp.m = 1;
  rp.terms = {t};
  const int n = 64;
  const double offset = kEquidistributedOffset;
  auto a = evaluate_complex(rp, n, offset);
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = (i + offset) / n;
    dev = std::max(dev, std::abs(a[static_cast<std::size_t>(i)] -
                                 std::complex<double>(std::cos(2.0 * M_PI * std::fmod(static_cast<double>(t.lo) * x, 1.0)), 0.0)));
  }
  CHECK(dev <= 1e-9);
}

TEST_CASE("grid and coefficient views of the energy agree when resolved") {
  auto rp = small_run();
  const double l2 = run_parseval_l2(rp);
  const double grid = run_lorentz_norm(rp, LorentzParams{2.0, 2.0}, 256);
  CHECK(grid == doctest::Approx(l2).epsilon(1e-11));
}

TEST_CASE("tabulated coefficients stay close to exact powers") {
  // Force the table path by a long run, then spot-check sampled coefficients
  // against std::pow through the unfolded transform at a few points.
  CosineRunTerm t;
  t.run_coord = 0;
  t.lo = 1;
  t.hi = 1LL << 22;
  t.decay = 0.9;
  t.scale = 1.0;
  t.mod = {0};
  RunPoly rp;
  rp.m = 1;
  rp.terms = {t};
  const int n = 1 << 10;
  auto w = fold_cosine_run(t.lo, t.hi, t.decay, n, 0.0);
  // residue class 1 collects l = 1, 1+n, 1+2n, ...; sum the exact powers.
  long double exact = 0.0;
  for (long long l = 1; l < t.hi; l += n) exact += std::pow(static_cast<long double>(l), -0.9L);
  CHECK(std::abs(w[1].real() - static_cast<double>(exact)) <= 1e-7 * static_cast<double>(exact));
  CHECK(std::abs(w[1].imag()) <= 1e-12);
}

TEST_CASE("unresolved folding loses deep-scale mass but never invents it") {
  // Critical-decay runs concentrate their norm log-uniformly over the scales
  // 1/hi..1/lo; a lattice with n = 4*lo resolves only the top few octaves, so
  // the sampled quadratic mean sits well below the coefficient truth (the
  // capture fraction depends only on n/lo, measured ~0.27 here) and must
  // never exceed it.
  CosineRunTerm t;
  t.run_coord = 0;
  t.lo = 1LL << 8;
  t.hi = 1LL << 16;
  t.decay = 0.5;
  t.scale = 1.0;
  t.mod = {0};
  RunPoly rp;
  rp.m = 1;
  rp.terms = {t};
  const double truth = run_parseval_l2(rp);
  const double sampled = run_lorentz_norm(rp, LorentzParams{2.0, 2.0}, 1 << 10);
  CHECK(sampled <= truth * 1.02);
  CHECK(sampled / truth >= 0.12);
  CHECK(sampled / truth <= 0.55);
}

TEST_CASE("energy accumulates across terms with separated spectra") {
  RunPoly rp;
  rp.m = 1;
  CosineRunTerm t0;
  t0.run_coord = 0;
  t0.lo = 1;
  t0.hi = 8;
  t0.decay = 0.0;
  t0.scale = 1.0;
  t0.mod = {0};
  CosineRunTerm t1 = t0;
  t1.lo = 8;
  t1.hi = 16;
  t1.scale = 2.0;
  rp.terms = {t0, t1};
  // 7 terms of energy 1/2 plus 8 terms of energy 4/2
  CHECK(run_parseval_l2(rp) == doctest::Approx(std::sqrt(7 * 0.5 + 8 * 2.0)).epsilon(1e-9));
}

TEST_CASE("expansion guards its budget and frequency ranges") {
  CosineRunTerm t;
  t.run_coord = 0;
  t.lo = 1;
  t.hi = 1LL << 24;
  t.decay = 0.5;
  t.scale = 1.0;
  t.mod = {0};
  RunPoly rp;
  rp.m = 1;
  rp.terms = {t};
  CHECK_THROWS_AS(to_trigpoly(rp), size_error);
  CHECK_THROWS_AS(fold_cosine_run(0, 4, 0.5, 64, 0.0), param_error);
  CHECK_THROWS_AS(fold_cosine_run(1, 4, 0.5, 63, 0.0), param_error);
}
