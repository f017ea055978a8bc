#pragma once

#include <optional>

#include "gausspr/types.hpp"

namespace gausspr {

/// Strictly increasing finite set of sample locations.
struct SampleSet {
  VectorXd points;
  double separation = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;

  SampleSet() = default;
  explicit SampleSet(VectorXd pts);

  int size() const { return static_cast<int>(points.size()); }
};

/// Arithmetic progression step*Z intersected with [lo, hi].
SampleSet arithmetic_sample_set(double step, double lo, double hi);

struct PhaselessSamples {
  VectorXd lambdas;
  VectorXd magnitudes;

  int size() const { return static_cast<int>(lambdas.size()); }
};

struct FrameBounds {
  double lower = 0.0;      // A: smallest squared singular value
  double upper = 0.0;      // B: largest squared singular value
  double condition = 0.0;  // B/A, or inf when A = 0
};

/// Inclusive integer interval of coefficient indices.
struct IntRange {
  int lo = 0;
  int hi = -1;

  int size() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// Finite-window estimate of the lower Beurling density: min over grid
/// centers x of #(points in [x-r, x+r]) / (2r).
double lower_density_estimate(const SampleSet& s, double radius);

/// Pairs (lambda, |f(lambda)|); optional Gaussian magnitude noise for
/// conditioning experiments (default off).
PhaselessSamples take_phaseless_samples(const SIFunction& f, const SampleSet& s,
                                        double noise_sigma = 0.0,
                                        unsigned seed = 0);

/// Collocation matrix M[i, j] = exp(-2 gamma (lambda_i - n_j / 2)^2) for the
/// half-step space V_{1/2}(phi_{2 gamma}); n_j runs over n_window.
MatrixXd collocation_matrix(const VectorXd& lambdas, double gamma,
                            const IntRange& n_window);

struct RecoveryResult {
  CoeffSeq rtilde;       // role r_tilde, real entries
  FrameBounds bounds;    // from the guarded (inner) columns
  double residual = 0.0; // max |fit - measured squared magnitude|
};

struct RecoveryOptions {
  int guard_halfsteps = 4;     // columns trusted only this far inside the hull
  double cond_limit = 1e12;    // IllConditioned beyond this (inner columns)
  double svd_rcond = 1e-12;    // relative truncation for the full solve
};

/// Least-squares fit of |f(lambda)|^2 = sum_n rtilde_n exp(-2 gamma
/// (lambda - n/2)^2) over the given coefficient window.
RecoveryResult recover_rtilde(const PhaselessSamples& m, const SpaceParams& p,
                              const IntRange& n_window,
                              const RecoveryOptions& opts = {});

/// Squared extreme singular values of the collocation matrix: a finite-section
/// proxy for the sampling frame bounds (A, B).
FrameBounds frame_bound_estimate(const SampleSet& s, const SpaceParams& p,
                                 const IntRange& n_window);

/// Default recovery window for samples covering [lo, hi]: all n with
/// n/2 in the hull expanded by guard half-steps.
IntRange default_n_window(const PhaselessSamples& m, int guard_halfsteps = 4);

}  // namespace gausspr
