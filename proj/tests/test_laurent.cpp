#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gausspr/laurent.hpp"
#include "gausspr/space.hpp"

using namespace gausspr;

namespace {

constexpr double kPi = std::numbers::pi;

LaurentSeries series(int offset, std::initializer_list<Complex> vals) {
  VectorXcd v(static_cast<int>(vals.size()));
  int i = 0;
  for (Complex c : vals) v[i++] = c;
  return LaurentSeries(offset, v);
}

}  // namespace

TEST_CASE("from_coeff_seq transcribes coefficients") {
  CoeffSeq d = CoeffSeq::from_map({{0, 1.0}, {1, std::exp(-1.0)}}, Role::d);
  LaurentSeries L = from_coeff_seq(d, 1.0);
  CHECK(L.offset == 0);
  CHECK(L.at(0) == Complex(1.0, 0.0));
  CHECK(L.at(1) == Complex(std::exp(-1.0), 0.0));
  // evaluation on the real line equals the Fourier series
  const double xi = 0.3;
  const Complex expect = 1.0 + std::exp(-1.0) * std::exp(Complex(0, 2 * kPi * xi));
  CHECK(std::abs(eval_at(L, Complex(xi, 0.0)) - expect) < 1e-14);
}

TEST_CASE("eval_at examples") {
  LaurentSeries L = series(0, {1.0, 1.0});  // 1 + q
  CHECK(std::abs(eval_at(L, Complex(0.0, 0.0)) - Complex(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(eval_at(L, Complex(0.5, 0.0))) < 1e-14);

  // (1 + e^{-1} q)^2 has a double root at z = 1/2 - i/(2 pi)
  LaurentSeries R = series(0, {1.0, 2.0 * std::exp(-1.0), std::exp(-2.0)});
  const Complex w(0.5, -1.0 / (2.0 * kPi));
  CHECK(std::abs(eval_at(R, w)) < 1e-12);
  CHECK(std::abs(eval_at(derivative(R), w)) < 1e-10);
}

TEST_CASE("involution identity and self-inverse") {
  LaurentSeries L = series(0, {1.0, Complex(0.0, 1.0)});
  LaurentSeries Ls = involution(L);
  CHECK(Ls.at(1) == Complex(0.0, -1.0));
  LaurentSeries Lss = involution(Ls);
  CHECK(Lss.at(1) == L.at(1));

  LaurentSeries real = series(0, {1.0, -2.0, 0.5});
  LaurentSeries rs = involution(real);
  for (int k = 0; k <= 2; ++k) CHECK(rs.at(k) == real.at(k));

  // pointwise: L*(z) = conj(L(-conj(z)))
  LaurentSeries M = series(0, {1.0, Complex(2.0, 1.0)});
  const Complex z(0.3, 0.2);
  const Complex lhs = eval_at(involution(M), z);
  const Complex rhs = std::conj(eval_at(M, -std::conj(z)));
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("growth bound holds for decayed coefficients") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  VectorXcd c(7);
  for (int i = 0; i < 7; ++i) c[i] = Complex(uni(rng), uni(rng));
  CoeffSeq cs(-3, c, Role::c);
  CoeffSeq d = decay_weights(cs, 1.0);
  LaurentSeries L = from_coeff_seq(d, 1.0);
  auto report = growth_check(L, 1.0, cs.inf_norm(), {0.5, 1.0, 2.0});
  CHECK(report.worst_margin >= 1.0);

  // single-term case: margin at least 1
  CoeffSeq one = CoeffSeq::from_map({{0, 1.0}}, Role::d);
  auto r1 = growth_check(from_coeff_seq(one, 1.0), 1.0, 1.0, {1.0});
  CHECK(r1.worst_margin >= 1.0);
}

TEST_CASE("growth violation for undecayed coefficients") {
  // claim ||c||_inf = 1 while the stored d has no Gaussian decay
  VectorXcd v = VectorXcd::Ones(11);
  LaurentSeries L(-5, v);
  CHECK_THROWS_AS(growth_check(L, 1.0, 1.0, {2.0}), GrowthViolation);
}

TEST_CASE("strip_zeros: the factor q - 1") {
  LaurentSeries L = series(0, {-1.0, 1.0});
  ZeroSet z = strip_zeros(L);
  CHECK(z.m0 == 1);
  CHECK(z.laurent_shift == 0);
  CHECK(z.zeros.empty());
}

TEST_CASE("strip_zeros: double root off the axis line") {
  LaurentSeries R = series(0, {1.0, 2.0 * std::exp(-1.0), std::exp(-2.0)});
  ZeroSet z = strip_zeros(R);
  REQUIRE(z.zeros.size() == 1);
  CHECK(z.zeros[0].multiplicity == 2);
  CHECK(z.zeros[0].region == StripRegion::S_zero);
  CHECK(z.zeros[0].location.real() == doctest::Approx(0.5));
  CHECK(z.zeros[0].location.imag() ==
        doctest::Approx(-1.0 / (2.0 * kPi)).epsilon(1e-9));
  CHECK(z.m0 == 0);
}

TEST_CASE("strip_zeros: conjugate q-pair maps to a J-symmetric pair") {
  const Complex q0(0.5, 0.3);
  // (q - q0)(q - conj(q0))
  VectorXcd v(3);
  v[0] = q0 * std::conj(q0);
  v[1] = -(q0 + std::conj(q0));
  v[2] = 1.0;
  ZeroSet z = strip_zeros(LaurentSeries(0, v));
  REQUIRE(z.zeros.size() == 2);
  const Complex a = z.zeros[0].location;
  const Complex b = z.zeros[1].location;
  CHECK(a.real() == doctest::Approx(-b.real()).epsilon(1e-12));
  CHECK(a.imag() == doctest::Approx(b.imag()).epsilon(1e-12));
  CHECK(z.zeros[0].region == StripRegion::JS_plus);
  CHECK(z.zeros[1].region == StripRegion::S_plus);
}

TEST_CASE("strip_zeros: residual, count, and J-symmetry properties") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    VectorXcd v(n);
    const bool realcase = trial % 2 == 0;
    for (int i = 0; i < n; ++i)
      v[i] = Complex(uni(rng), realcase ? 0.0 : uni(rng));
    if (std::abs(v[0]) < 0.1) v[0] += 0.5;
    if (std::abs(v[n - 1]) < 0.1) v[n - 1] += 0.5;
    LaurentSeries L(-(n / 2), v);
    ZeroSet z = strip_zeros(L);
    CHECK(z.total_multiplicity() == L.degree_span());
    const double scale = L.inf_norm();
    for (const auto& w : z.zeros) {
      CHECK(std::abs(eval_at(L, w.location)) <= 1e-9 * scale * 100);
      if (w.multiplicity >= 2)
        CHECK(std::abs(eval_at(derivative(L), w.location)) <= 1e-7 * scale * 100);
    }
    if (realcase) {
      // zero multiset invariant under w -> -conj(w)
      for (const auto& w : z.zeros) {
        const Complex refl(-w.location.real() <= -0.5 ? -w.location.real() + 1.0
                                                      : -w.location.real(),
                           w.location.imag());
        bool found = false;
        for (const auto& u : z.zeros)
          if (std::abs(u.location - refl) < 1e-6 &&
              u.multiplicity == w.multiplicity)
            found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("strip_zeros rejects the zero series") {
  CHECK_THROWS_AS(strip_zeros(LaurentSeries(0, VectorXcd::Zero(3))), ZeroPolynomial);
}

TEST_CASE("Fourier coefficient round trip") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  VectorXcd v(9);
  for (int i = 0; i < 9; ++i) v[i] = Complex(uni(rng), uni(rng));
  LaurentSeries L(-4, v);
  CoeffSeq back = fourier_coefficients(L, -4, 4);
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(back.at(k) - L.at(k)) <= 1e-10);
}
