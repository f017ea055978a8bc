#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gausspr/sampling.hpp"
#include "gausspr/space.hpp"

using namespace gausspr;

namespace {

SIFunction make_f(double gamma, int offset, std::initializer_list<Complex> vals) {
  VectorXcd v(static_cast<int>(vals.size()));
  int i = 0;
  for (Complex c : vals) v[i++] = c;
  SIFunction f;
  f.params = SpaceParams(gamma, 1.0);
  f.coeffs = CoeffSeq(offset, v, Role::c);
  return f;
}

}  // namespace

TEST_CASE("lower density estimates") {
  CHECK(lower_density_estimate(arithmetic_sample_set(0.4, -10, 10), 4.0) ==
        doctest::Approx(2.5).epsilon(1e-12));
  CHECK(lower_density_estimate(arithmetic_sample_set(1.0, -10, 10), 4.0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // union of 0.4 Z and 0.4 Z + 0.13
  SampleSet base = arithmetic_sample_set(0.4, -10, 10);
  std::vector<double> pts;
  for (int i = 0; i < base.size(); ++i) {
    pts.push_back(base.points[i]);
    if (base.points[i] + 0.13 <= 10.0) pts.push_back(base.points[i] + 0.13);
  }
  std::sort(pts.begin(), pts.end());
  SampleSet u(Eigen::Map<VectorXd>(pts.data(), pts.size()));
  CHECK(lower_density_estimate(u, 4.0) == doctest::Approx(5.0).epsilon(0.01));

  CHECK_THROWS_AS(lower_density_estimate(base, 100.0), WindowTooSmall);
}

TEST_CASE("phaseless samples hide sign and phase") {
  SampleSet one(VectorXd::Zero(1));
  SIFunction f = make_f(1.0, 0, {1.0});
  SIFunction fneg = make_f(1.0, 0, {-1.0});
  CHECK(take_phaseless_samples(f, one).magnitudes[0] == doctest::Approx(1.0));
  CHECK(take_phaseless_samples(fneg, one).magnitudes[0] == doctest::Approx(1.0));

  VectorXd p(1);
  p[0] = 0.5;
  SIFunction g = make_f(1.0, 0, {1.0, 1.0});
  CHECK(take_phaseless_samples(g, SampleSet(p)).magnitudes[0] ==
        doctest::Approx(2.0 * std::exp(-0.25)).epsilon(1e-14));

  // e^{i theta} f has identical samples
  SampleSet grid = arithmetic_sample_set(0.4, -4, 4);
  SIFunction grot = g;
  grot.coeffs.values *= std::exp(Complex(0.0, 0.77));
  auto a = take_phaseless_samples(g, grid);
  auto b = take_phaseless_samples(grot, grid);
  for (int i = 0; i < a.size(); ++i)
    CHECK(a.magnitudes[i] == doctest::Approx(b.magnitudes[i]).epsilon(1e-14));
}

TEST_CASE("recover_rtilde round trips through the expansion oracle") {
  SpaceParams p(1.0, 1.0);
  SUBCASE("single Gaussian") {
    SIFunction f = make_f(1.0, 0, {1.0});
    auto m = take_phaseless_samples(f, arithmetic_sample_set(0.4, -6, 6));
    auto rec = recover_rtilde(m, p, IntRange{-8, 8});
    CHECK(std::abs(rec.rtilde.at(0) - Complex(1.0, 0.0)) < 1e-9);
    for (int n = -8; n <= 8; ++n)
      if (n != 0) CHECK(std::abs(rec.rtilde.at(n)) < 1e-9);
  }
  SUBCASE("two coefficients") {
    SIFunction f = make_f(1.0, 0, {1.0, 1.0});
    auto m = take_phaseless_samples(f, arithmetic_sample_set(0.4, -6, 8));
    auto rec = recover_rtilde(m, p, IntRange{-8, 10});
    SIFunction sq = squared_magnitude_expansion(f);
    for (int n = -4; n <= 6; ++n)
      CHECK(std::abs(rec.rtilde.at(n) - sq.coeffs.at(n)) < 1e-8);
  }
  SUBCASE("zero samples") {
    PhaselessSamples m;
    m.lambdas = arithmetic_sample_set(0.4, -6, 6).points;
    m.magnitudes = VectorXd::Zero(m.lambdas.size());
    auto rec = recover_rtilde(m, p, IntRange{-8, 8});
    CHECK(rec.rtilde.inf_norm() < 1e-12);
    CHECK(rec.residual < 1e-12);
  }
}

TEST_CASE("recovery consistency for random sources") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  SpaceParams p(1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int support = 1 + static_cast<int>(rng() % 7);
    VectorXcd v(support);
    for (int i = 0; i < support; ++i)
      v[i] = Complex(uni(rng), trial % 2 ? uni(rng) : 0.0);
    SIFunction f;
    f.params = p;
    f.coeffs = CoeffSeq(-(support / 2), v, Role::c);
    auto m = take_phaseless_samples(f, arithmetic_sample_set(0.4, -8, 8));
    auto rec = recover_rtilde(m, p, default_n_window(m));
    SIFunction sq = squared_magnitude_expansion(f);
    // trusted inner half of the window
    for (int n = -6; n <= 6; ++n)
      CHECK(std::abs(rec.rtilde.at(n) - sq.coeffs.at(n)) < 1e-8);
  }
}

TEST_CASE("frame bounds dichotomy and monotonicity") {
  SpaceParams p(1.0, 1.0);
  // density 2.5 with centers well inside the sampled window: positive lower bound
  FrameBounds good = frame_bound_estimate(arithmetic_sample_set(0.4, -10, 10), p,
                                          IntRange{-16, 16});
  CHECK(good.lower > 0.0);
  CHECK(std::sqrt(good.condition) < 1e6);

  // density 1.25 against the same matched window: near-singular
  FrameBounds bad = frame_bound_estimate(arithmetic_sample_set(0.8, -10, 10), p,
                                         IntRange{-16, 16});
  CHECK(std::sqrt(bad.condition) >= 1e8);

  // empty window: degenerate, no throw
  FrameBounds empty = frame_bound_estimate(arithmetic_sample_set(0.4, -10, 10), p,
                                           IntRange{1, 0});
  CHECK(empty.lower == 0.0);
  CHECK(empty.upper == 0.0);

  // adding points never decreases the lower bound
  SampleSet coarse = arithmetic_sample_set(0.5, -10, 10);
  SampleSet fine = arithmetic_sample_set(0.25, -10, 10);
  FrameBounds fb1 = frame_bound_estimate(coarse, p, IntRange{-12, 12});
  FrameBounds fb2 = frame_bound_estimate(fine, p, IntRange{-12, 12});
  CHECK(fb2.lower >= fb1.lower - 1e-12);
}

TEST_CASE("recover_rtilde signals ill-conditioning at low density") {
  SpaceParams p(1.0, 1.0);
  SIFunction f = make_f(1.0, 0, {1.0, -1.0});
  auto m = take_phaseless_samples(f, arithmetic_sample_set(0.8, -10, 10));
  CHECK_THROWS_AS(recover_rtilde(m, p, IntRange{-16, 16}), IllConditioned);
}
