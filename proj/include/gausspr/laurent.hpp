#pragma once

#include <vector>

#include "gausspr/types.hpp"

namespace gausspr {

/// Periodic entire function sum_k a_k e^{2 pi i k z}, stored as coefficients
/// of q^k with q = e^{2 pi i z}, k = offset .. offset + coeffs.size() - 1.
struct LaurentSeries {
  int offset = 0;
  VectorXcd coeffs;
  double gamma_tag = 0.0;  // decay parameter of the originating sequence

  LaurentSeries() : coeffs(VectorXcd::Zero(1)) {}
  LaurentSeries(int off, VectorXcd c, double tag = 0.0)
      : offset(off), coeffs(std::move(c)), gamma_tag(tag) {}

  int size() const { return static_cast<int>(coeffs.size()); }
  int degree_span() const { return size() - 1; }
  int top_index() const { return offset + degree_span(); }

  Complex at(int k) const {
    int j = k - offset;
    if (j < 0 || j >= size()) return Complex(0.0, 0.0);
    return coeffs[j];
  }

  double inf_norm() const {
    return coeffs.size() ? coeffs.cwiseAbs().maxCoeff() : 0.0;
  }

  bool is_zero(double tol = 0.0) const { return inf_norm() <= tol; }

  LaurentSeries trimmed(double tol = 0.0) const;
};

enum class StripRegion { S_plus, S_zero, JS_plus };

struct StripZero {
  Complex location;  // in the strip -1/2 < Re <= 1/2
  int multiplicity = 1;
  StripRegion region = StripRegion::S_plus;
};

struct ZeroSet {
  std::vector<StripZero> zeros;  // excludes the origin cluster
  int m0 = 0;                    // multiplicity at z = 0
  int laurent_shift = 0;         // lowest Laurent exponent of the source series

  int total_multiplicity() const {
    int t = m0;
    for (const auto& z : zeros) t += z.multiplicity;
    return t;
  }
};

LaurentSeries from_coeff_seq(const CoeffSeq& d, double gamma_tag = 0.0);

Complex eval_at(const LaurentSeries& L, Complex z);

/// Termwise derivative d/dz.
LaurentSeries derivative(const LaurentSeries& L);

/// L*(z) = conj(L(-conj(z))): conjugate every coefficient in place.
LaurentSeries involution(const LaurentSeries& L);

/// Exact Laurent-polynomial product; offsets add.
LaurentSeries multiply(const LaurentSeries& A, const LaurentSeries& B);

LaurentSeries scale(const LaurentSeries& L, Complex factor);

/// Multiply by q^k.
LaurentSeries shifted(const LaurentSeries& L, int k);

/// Fourier coefficients of L on the real line over indices [lo, hi], by the
/// periodic trapezoid rule (exact for trigonometric polynomials when the grid
/// oversamples the span).
CoeffSeq fourier_coefficients(const LaurentSeries& L, int lo, int hi,
                              int oversample = 4);

struct GrowthSample {
  double y = 0.0;
  double max_abs = 0.0;  // max over a grid of xi in [0,1)
  double bound = 0.0;    // c_inf * sum_k exp(-gamma (k - pi|y|/gamma)^2) * exp(pi^2 y^2 / gamma)
};

struct GrowthReport {
  std::vector<GrowthSample> samples;
  double worst_margin = 0.0;  // min over ys of bound / max_abs
};

/// Check |L(xi + iy)| against the explicit order-2 growth bound for
/// coefficients with Gaussian decay parameter gamma and claimed ||c||_inf.
/// Throws GrowthViolation if any y fails.
GrowthReport growth_check(const LaurentSeries& L, double gamma, double c_inf,
                          const std::vector<double>& ys, int grid = 512);

/// All zeros of L in the strip -1/2 < Re z <= 1/2, via companion-matrix roots
/// of the underlying Laurent polynomial in q.  Roots within cluster_tol
/// (scaled by magnitude) are merged into one zero with multiplicity.
ZeroSet strip_zeros(const LaurentSeries& L, double cluster_tol = 1e-6);

/// Strip coordinate of a q-plane root: z = log(q) / (2 pi i) with
/// Re z in (-1/2, 1/2].
Complex strip_coordinate(Complex q);

}  // namespace gausspr
