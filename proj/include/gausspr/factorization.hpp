#pragma once

#include <utility>
#include <vector>

#include "gausspr/laurent.hpp"

namespace gausspr {

/// One choice of factor D_V: the zero selection V (index into the distinct
/// S_plus zeros of Z, with chosen copies), the origin multiplicity m, the
/// exponential shift r, and the calibration constant.
struct FactorSpec {
  std::vector<std::pair<int, int>> selection;  // (zero index in s_plus list, copies)
  int m = 0;
  int r_shift = 0;
  Complex constant_C{1.0, 0.0};
  ZeroSet zeros_W;      // W = V + J((Z \ V) cap S_plus) + Z_0
  LaurentSeries series;  // calibrated D_V
};

/// The finite product (e^{2 pi i z} - 1)^m e^{2 pi i r z}
///   prod_{w: Im w >= 0} (e^{-2 pi i z} - e^{-2 pi i w}) / (1 - e^{-2 pi i w})
///   prod_{w: Im w < 0}  (e^{ 2 pi i z} - e^{ 2 pi i w}) / (1 - e^{ 2 pi i w}),
/// as an exact Laurent polynomial in q.
LaurentSeries pi_product(const ZeroSet& W, int m, int r_shift);

/// J-reflection w -> -conj(w), renormalized into the strip; preserves
/// multiplicities and is an involution.
ZeroSet reflect(const ZeroSet& Z);

/// Max coefficient deviation between pi_product(W,m,r)* and pi_product(JW,m,r).
double involution_deviation(const ZeroSet& W, int m, int r_shift);

/// Max coefficient deviation between the Laurent product of the two factors
/// and the merged product.
double product_merge_deviation(const ZeroSet& W1, int m1, int r1,
                               const ZeroSet& W2, int m2, int r2);

struct SolutionFamily {
  std::vector<FactorSpec> members;  // up to max_count, lexicographic in selection
  long long total_count = 0;        // prod (mu_j + 1) over distinct S_plus zeros
  std::vector<StripZero> s_plus;    // the distinct S_plus zeros being selected from
};

/// All solutions D of D D* = R (up to a unimodular constant), enumerated by
/// the choice of zeros V in S_plus.
SolutionFamily solution_family(const LaurentSeries& R, int max_count,
                               double cluster_tol = 1e-6);

/// The real-coefficient D with D^2 = R, unique up to sign.  Requires every
/// zero of R to have even multiplicity.
LaurentSeries real_square_root(const LaurentSeries& R, double cluster_tol = 1e-6);

/// Fourier coefficients d_k of the pointwise nonnegative square root of
/// r_hat on [0,1); valid for even real-valued sources where r_hat >= 0.
CoeffSeq even_real_square_root(const LaurentSeries& r_hat, double gamma,
                               double tol = 1e-9);

}  // namespace gausspr
