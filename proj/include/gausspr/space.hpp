#pragma once

#include "gausspr/types.hpp"

namespace gausspr {

/// Sum of all stored Gaussian terms at x; exact up to floating rounding.
Complex evaluate(const SIFunction& f, double x, double tol = 1e-15);

/// Substitute x -> beta x: returns g with beta' = 1, gamma' = beta^2 gamma and
/// the same coefficients, so g(x) = f(beta x).
SIFunction rescale_to_unit_step(const SIFunction& f);

/// d_k = c_k exp(-gamma k^2).
CoeffSeq decay_weights(const CoeffSeq& c, double gamma);

/// c_k = d_k exp(gamma k^2).  Throws IndexRangeTooWide when the factor leaves
/// the double range for some stored k.
CoeffSeq undecay_weights(const CoeffSeq& d, double gamma);

/// r = d * conj(d(-.)), i.e. r_n = sum_k d_k conj(d_{n-k}).  Entries are real
/// up to rounding; the imaginary part is checked and dropped.
CoeffSeq autocorrelation(const CoeffSeq& d);

/// |f|^2 as an element of V_{1/2}(phi_{2 gamma}): coefficients
/// r_tilde_n = r_n exp(gamma n^2 / 2) on the half-integer grid.
SIFunction squared_magnitude_expansion(const SIFunction& f);

/// The constant C = max(sum exp(-2 gamma k^2), sum exp(-gamma (1-2k)^2 / 2))
/// bounding ||r_tilde||_inf <= C ||c||_inf^2.
double rtilde_bound_constant(double gamma);

}  // namespace gausspr
