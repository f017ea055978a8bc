#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gausspr/space.hpp"

using namespace gausspr;

namespace {

SIFunction make_f(double gamma, double beta, int offset,
                  std::initializer_list<Complex> vals) {
  VectorXcd v(static_cast<int>(vals.size()));
  int i = 0;
  for (Complex c : vals) v[i++] = c;
  SIFunction f;
  f.params = SpaceParams(gamma, beta);
  f.coeffs = CoeffSeq(offset, v, Role::c);
  return f;
}

// Brute-force |f(x)|^2 for the expansion oracle.
double abs2_direct(const SIFunction& f, double x) {
  const Complex v = evaluate(f, x);
  return std::norm(v);
}

}  // namespace

TEST_CASE("evaluate: single and double Gaussian") {
  SIFunction f = make_f(1.0, 1.0, 0, {1.0});
  CHECK(evaluate(f, 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(evaluate(f, 1.0).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  SIFunction g = make_f(1.0, 1.0, 0, {1.0, 1.0});
  CHECK(evaluate(g, 0.5).real() ==
        doctest::Approx(2.0 * std::exp(-0.25)).epsilon(1e-14));
}

TEST_CASE("rescale_to_unit_step") {
  SIFunction f = make_f(1.0, 2.0, 0, {1.0});
  SIFunction g = rescale_to_unit_step(f);
  CHECK(g.params.gamma == doctest::Approx(4.0));
  CHECK(g.params.beta == 1.0);
  CHECK(std::abs(evaluate(g, 1.0) - evaluate(f, 2.0)) < 1e-14);

  SIFunction h = make_f(0.5, 1.0, 0, {1.0, -2.0});
  SIFunction h1 = rescale_to_unit_step(h);
  CHECK(h1.params.gamma == 0.5);

  SIFunction p = make_f(1.0, 0.5, 0, {1.0, -1.0});
  SIFunction p1 = rescale_to_unit_step(p);
  CHECK(p1.params.gamma == doctest::Approx(0.25));
  for (int i = 0; i <= 10; ++i) {
    const double x = -2.0 + 0.4 * i;
    CHECK(std::abs(evaluate(p1, x) - evaluate(p, 0.5 * x)) < 1e-12);
  }
}

TEST_CASE("decay weights and round trip") {
  CoeffSeq c = CoeffSeq::from_map({{-1, 2.0}, {0, 1.0}, {1, -3.0}}, Role::c);
  CoeffSeq d = decay_weights(c, 1.0);
  CHECK(d.at(-1) == Complex(2.0 * std::exp(-1.0), 0.0));
  CHECK(d.at(0) == Complex(1.0, 0.0));
  CHECK(d.at(1) == Complex(-3.0 * std::exp(-1.0), 0.0));
  CoeffSeq back = undecay_weights(d, 1.0);
  for (int k = -1; k <= 1; ++k)
    CHECK(std::abs(back.at(k) - c.at(k)) < 1e-14);
}

TEST_CASE("undecay overflow guard") {
  CoeffSeq d = CoeffSeq::from_map({{40, 1.0}}, Role::d);
  CHECK_THROWS_AS(undecay_weights(d, 1.0), IndexRangeTooWide);
}

TEST_CASE("autocorrelation examples") {
  CoeffSeq d0 = CoeffSeq::from_map({{0, 1.0}}, Role::d);
  CHECK(autocorrelation(d0).at(0) == Complex(1.0, 0.0));

  CoeffSeq d1 = CoeffSeq::from_map({{0, 1.0}, {1, std::exp(-1.0)}}, Role::d);
  CoeffSeq r = autocorrelation(d1);
  CHECK(r.at(0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.at(1).real() == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(r.at(2).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

  CoeffSeq di = CoeffSeq::from_map({{0, Complex(0.0, 1.0)}}, Role::d);
  CHECK(autocorrelation(di).at(0) == Complex(1.0, 0.0));
}

TEST_CASE("squared magnitude expansion: examples") {
  SIFunction f = make_f(1.0, 1.0, 0, {1.0});
  SIFunction sq = squared_magnitude_expansion(f);
  CHECK(sq.half_step);
  CHECK(sq.params.gamma == 2.0);
  CHECK(sq.coeffs.at(0).real() == doctest::Approx(1.0));
  CHECK(std::abs(evaluate(sq, 0.7).real() - std::exp(-2.0 * 0.49)) < 1e-14);

  SIFunction g = make_f(1.0, 1.0, 0, {1.0, 1.0});
  SIFunction sq2 = squared_magnitude_expansion(g);
  // r from the previous example rescaled by e^{n^2/2}
  CHECK(sq2.coeffs.at(0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sq2.coeffs.at(1).real() ==
        doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(sq2.coeffs.at(2).real() == doctest::Approx(1.0).epsilon(1e-14));

  SIFunction h = make_f(1.0, 1.0, 0, {2.0});
  SIFunction sq3 = squared_magnitude_expansion(h);
  CHECK(sq3.coeffs.at(0).real() == doctest::Approx(4.0));
  CHECK(sq3.coeffs.inf_norm() <= rtilde_bound_constant(1.0) * 4.0 + 1e-12);
}

TEST_CASE("expansion identity on random coefficients") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int support = 1 + static_cast<int>(rng() % 9);
      VectorXcd v(support);
      const bool cplx = trial % 2 == 1;
      for (int i = 0; i < support; ++i)
        v[i] = Complex(uni(rng), cplx ? uni(rng) : 0.0);
      SIFunction f;
      f.params = SpaceParams(gamma, 1.0);
      f.coeffs = CoeffSeq(-(support / 2), v, Role::c);
      SIFunction sq = squared_magnitude_expansion(f);
      const double c2 = f.coeffs.inf_norm() * f.coeffs.inf_norm();
      const double lo = f.coeffs.first_index() - 1.0;
      const double hi = f.coeffs.last_index() + 1.0;
      double worst = 0.0;
      for (int i = 0; i <= 100; ++i) {
        const double x = lo + (hi - lo) * i / 100.0;
        worst = std::max(worst,
                         std::abs(abs2_direct(f, x) - evaluate(sq, x).real()));
      }
      CHECK(worst <= 1e-10 * (1.0 + c2));
      CHECK(sq.coeffs.inf_norm() <= rtilde_bound_constant(gamma) * c2 + 1e-10);
    }
  }
}

TEST_CASE("realness of r for random complex d") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(uni(rng), uni(rng));
    CoeffSeq d(-(n / 2), v, Role::d);
    CoeffSeq r = autocorrelation(d);  // throws if imaginary part survives
    for (int j = 0; j < r.size(); ++j) CHECK(r.values[j].imag() == 0.0);
  }
}
