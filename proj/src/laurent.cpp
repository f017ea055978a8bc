#include "gausspr/laurent.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace gausspr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

LaurentSeries LaurentSeries::trimmed(double tol) const {
  int lo = 0, hi = size() - 1;
  while (lo <= hi && std::abs(coeffs[lo]) <= tol) ++lo;
  while (hi >= lo && std::abs(coeffs[hi]) <= tol) --hi;
  if (lo > hi) return LaurentSeries(0, VectorXcd::Zero(1), gamma_tag);
  return LaurentSeries(offset + lo, coeffs.segment(lo, hi - lo + 1), gamma_tag);
}

LaurentSeries from_coeff_seq(const CoeffSeq& d, double gamma_tag) {
  if (d.role != Role::d && d.role != Role::r)
    throw Error("from_coeff_seq: expected role d or r");
  return LaurentSeries(d.offset, d.values, gamma_tag);
}

Complex eval_at(const LaurentSeries& L, Complex z) {
  // Horner in q = e^{2 pi i z}, then the offset power.
  const Complex q = std::exp(Complex(0.0, kTwoPi) * z);
  Complex acc(0.0, 0.0);
  for (int j = L.size() - 1; j >= 0; --j) acc = acc * q + L.coeffs[j];
  return acc * std::pow(q, L.offset);
}

LaurentSeries derivative(const LaurentSeries& L) {
  LaurentSeries out = L;
  for (int j = 0; j < out.size(); ++j)
    out.coeffs[j] *= Complex(0.0, kTwoPi) * double(L.offset + j);
  return out;
}

LaurentSeries involution(const LaurentSeries& L) {
  LaurentSeries out = L;
  out.coeffs = out.coeffs.conjugate();
  return out;
}

LaurentSeries multiply(const LaurentSeries& A, const LaurentSeries& B) {
  VectorXcd c = VectorXcd::Zero(A.size() + B.size() - 1);
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < B.size(); ++j) c[i + j] += A.coeffs[i] * B.coeffs[j];
  return LaurentSeries(A.offset + B.offset, c,
                       A.gamma_tag > 0.0 ? A.gamma_tag : B.gamma_tag);
}

LaurentSeries scale(const LaurentSeries& L, Complex factor) {
  LaurentSeries out = L;
  out.coeffs *= factor;
  return out;
}

LaurentSeries shifted(const LaurentSeries& L, int k) {
  LaurentSeries out = L;
  out.offset += k;
  return out;
}

CoeffSeq fourier_coefficients(const LaurentSeries& L, int lo, int hi,
                              int oversample) {
  if (hi < lo) throw Error("fourier_coefficients: empty index range");
  const int span = std::max(L.top_index(), hi) - std::min(L.offset, lo) + 1;
  const int N = std::max(4, oversample * span);
  VectorXcd vals(N);
  for (int j = 0; j < N; ++j)
    vals[j] = eval_at(L, Complex(double(j) / N, 0.0));
  VectorXcd out = VectorXcd::Zero(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < N; ++j)
      acc += vals[j] * std::exp(Complex(0.0, -kTwoPi * k * j / N));
    out[k - lo] = acc / double(N);
  }
  return CoeffSeq(lo, out, Role::d);
}

GrowthReport growth_check(const LaurentSeries& L, double gamma, double c_inf,
                          const std::vector<double>& ys, int grid) {
  if (gamma <= 0.0) throw Error("growth_check: gamma must be positive");
  GrowthReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (double y : ys) {
    GrowthSample s;
    s.y = y;
    for (int j = 0; j < grid; ++j) {
      const double xi = double(j) / grid;
      s.max_abs = std::max(s.max_abs, std::abs(eval_at(L, Complex(xi, y))));
    }
    const double center = std::numbers::pi * std::abs(y) / gamma;
    double theta = 0.0;
    const int k0 = static_cast<int>(std::floor(center));
    for (int k = k0 - 60; k <= k0 + 60; ++k) {
      const double u = k - center;
      theta += std::exp(-gamma * u * u);
    }
    s.bound = c_inf * theta *
              std::exp(std::numbers::pi * std::numbers::pi * y * y / gamma);
    report.samples.push_back(s);
    if (s.max_abs > 0.0)
      report.worst_margin = std::min(report.worst_margin, s.bound / s.max_abs);
    if (s.max_abs > s.bound * (1.0 + 1e-9))
      throw GrowthViolation("growth_check: bound violated at y=" +
                            std::to_string(y) + " (|L|=" +
                            std::to_string(s.max_abs) + " > " +
                            std::to_string(s.bound) + ")");
  }
  return report;
}

Complex strip_coordinate(Complex q) {
  double x = std::arg(q) / kTwoPi;       // in (-1/2, 1/2]
  const double y = -std::log(std::abs(q)) / kTwoPi;
  if (x <= -0.5) x = 0.5;                // arg(q) = -pi edge
  return Complex(x, y);
}

namespace {

std::vector<Complex> polynomial_roots(const VectorXcd& a) {
  // a[0] + a[1] q + ... + a[n] q^n, a[n] != 0, n >= 1
  const int n = static_cast<int>(a.size()) - 1;
  MatrixXcd companion = MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -a[i] / a[n];
  Eigen::ComplexEigenSolver<MatrixXcd> es(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

}  // namespace

ZeroSet strip_zeros(const LaurentSeries& L, double cluster_tol) {
  LaurentSeries P = L.trimmed(0.0);
  if (P.is_zero()) throw ZeroPolynomial("strip_zeros: zero series");
  ZeroSet out;
  out.laurent_shift = L.offset;
  if (P.degree_span() == 0) return out;

  std::vector<Complex> roots = polynomial_roots(P.coeffs);

  // Single-linkage clustering with tolerance scaled by root magnitude.
  const int n = static_cast<int>(roots.size());
  std::vector<int> cluster(n, -1);
  std::vector<std::vector<int>> clusters;
  auto tol_at = [&](Complex q) { return cluster_tol * std::max(1.0, std::abs(q)); };
  for (int i = 0; i < n; ++i) {
    if (cluster[i] >= 0) continue;
    std::vector<int> members{i};
    cluster[i] = static_cast<int>(clusters.size());
    for (size_t m = 0; m < members.size(); ++m) {
      for (int j = 0; j < n; ++j) {
        if (cluster[j] >= 0) continue;
        const double d = std::abs(roots[members[m]] - roots[j]);
        if (d <= tol_at(roots[members[m]])) {
          cluster[j] = cluster[i];
          members.push_back(j);
        }
      }
    }
    clusters.push_back(std::move(members));
  }

  // Two clusters almost within tolerance of each other cannot be resolved.
  for (size_t a = 0; a < clusters.size(); ++a)
    for (size_t b = a + 1; b < clusters.size(); ++b)
      for (int i : clusters[a])
        for (int j : clusters[b]) {
          const double d = std::abs(roots[i] - roots[j]);
          const double t = tol_at(roots[i]);
          if (d > t && d < 3.0 * t)
            throw ClusterAmbiguous(
                "strip_zeros: cluster separation in the ambiguous band; "
                "adjust cluster_tol");
        }

  for (const auto& members : clusters) {
    Complex center(0.0, 0.0);
    for (int i : members) center += roots[i];
    center /= double(members.size());
    if (std::abs(center - Complex(1.0, 0.0)) <= cluster_tol) {
      out.m0 += static_cast<int>(members.size());
      continue;
    }
    Complex z = strip_coordinate(center);
    double x = z.real();
    if (std::abs(x) <= cluster_tol) x = 0.0;
    if (std::abs(x - 0.5) <= cluster_tol) x = 0.5;
    if (std::abs(x + 0.5) <= cluster_tol) x = 0.5;  // -1/2 == 1/2 mod 1
    StripZero sz;
    sz.location = Complex(x, z.imag());
    sz.multiplicity = static_cast<int>(members.size());
    if (x == 0.0 || x == 0.5)
      sz.region = StripRegion::S_zero;
    else if (x > 0.0)
      sz.region = StripRegion::S_plus;
    else
      sz.region = StripRegion::JS_plus;
    out.zeros.push_back(sz);
  }
  std::sort(out.zeros.begin(), out.zeros.end(), [](const StripZero& a, const StripZero& b) {
    if (a.location.real() != b.location.real())
      return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

}  // namespace gausspr
