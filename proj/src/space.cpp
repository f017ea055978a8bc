#include "gausspr/space.hpp"

#include <cmath>

namespace gausspr {

Complex evaluate(const SIFunction& f, double x, double /*tol*/) {
  const double step = f.step();
  const double gamma = f.params.gamma;
  Complex sum(0.0, 0.0);
  for (int j = 0; j < f.coeffs.size(); ++j) {
    const double center = step * (f.coeffs.offset + j);
    const double u = x - center;
    sum += f.coeffs.values[j] * std::exp(-gamma * u * u);
  }
  return sum;
}

SIFunction rescale_to_unit_step(const SIFunction& f) {
  if (f.half_step) throw Error("rescale_to_unit_step: half-step function");
  SIFunction g = f;
  g.params = SpaceParams(f.params.beta * f.params.beta * f.params.gamma, 1.0);
  return g;
}

CoeffSeq decay_weights(const CoeffSeq& c, double gamma) {
  if (c.role != Role::c) throw Error("decay_weights: expected role c");
  CoeffSeq d = c;
  d.role = Role::d;
  for (int j = 0; j < d.size(); ++j) {
    const double k = d.offset + j;
    d.values[j] *= std::exp(-gamma * k * k);
  }
  return d;
}

CoeffSeq undecay_weights(const CoeffSeq& d, double gamma) {
  // e^{gamma k^2} must stay below ~1e300 for every stored k.
  static constexpr double kLogLimit = 690.0;
  CoeffSeq c = d;
  c.role = Role::c;
  for (int j = 0; j < c.size(); ++j) {
    const double k = c.offset + j;
    const double e = gamma * k * k;
    if (e > kLogLimit)
      throw IndexRangeTooWide("undecay_weights: exp(gamma k^2) overflows at k=" +
                              std::to_string(c.offset + j));
    c.values[j] *= std::exp(e);
  }
  return c;
}

CoeffSeq autocorrelation(const CoeffSeq& d) {
  if (d.role != Role::d) throw Error("autocorrelation: expected role d");
  const int n = d.size();
  VectorXcd r = VectorXcd::Zero(2 * n - 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a + b] += d.values[a] * std::conj(d.values[b]);
  // r_n = sum_k d_k conj(d_{n-k}) is real by symmetry; drop the rounding dust.
  const double scale = d.inf_norm();
  for (int j = 0; j < r.size(); ++j) {
    if (std::abs(r[j].imag()) > 1e-12 * scale * scale + 1e-300)
      throw Error("autocorrelation: entry unexpectedly non-real");
    r[j] = Complex(r[j].real(), 0.0);
  }
  return CoeffSeq(2 * d.offset, r, Role::r);
}

SIFunction squared_magnitude_expansion(const SIFunction& f) {
  if (f.half_step) throw Error("squared_magnitude_expansion: already half-step");
  if (f.params.beta != 1.0)
    throw Error("squared_magnitude_expansion: rescale to beta=1 first");
  const double gamma = f.params.gamma;
  CoeffSeq d = decay_weights(f.coeffs, gamma);
  CoeffSeq r = autocorrelation(d);
  CoeffSeq rt = r;
  rt.role = Role::r_tilde;
  static constexpr double kLogLimit = 690.0;
  for (int j = 0; j < rt.size(); ++j) {
    const double n = rt.offset + j;
    const double e = gamma * n * n / 2.0;
    if (e > kLogLimit)
      throw IndexRangeTooWide("squared_magnitude_expansion: exp(gamma n^2/2) overflows");
    rt.values[j] *= std::exp(e);
  }
  SIFunction sq;
  sq.params = SpaceParams(2.0 * gamma, 1.0);
  sq.coeffs = rt;
  sq.half_step = true;
  return sq;
}

double rtilde_bound_constant(double gamma) {
  double s1 = 0.0, s2 = 0.0;
  for (int k = -200; k <= 200; ++k) {
    s1 += std::exp(-2.0 * gamma * k * k);
    const double u = 1.0 - 2.0 * k;
    s2 += std::exp(-gamma * u * u / 2.0);
  }
  return std::max(s1, s2);
}

}  // namespace gausspr
