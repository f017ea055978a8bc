#pragma once

#include <optional>
#include <vector>

#include "gausspr/factorization.hpp"
#include "gausspr/sampling.hpp"

namespace gausspr {

enum class RetrievalMode { real, complex_all, even_real };

struct RetrievalReport {
  std::vector<SIFunction> recovered;
  std::vector<double> residuals;   // per solution: max sample deviation
  FrameBounds conditioning;
  long long family_size = 0;       // total solution count (up to phase)
  RetrievalMode mode = RetrievalMode::real;
  double fit_residual = 0.0;       // least-squares residual of the r_tilde fit
};

struct PipelineOptions {
  int max_solutions = 8;
  double cluster_tol = 1e-5;
  std::optional<IntRange> n_window;  // default: sample hull + 4 half-steps
  RecoveryOptions recovery;
  double trim_rel = 1e-12;           // relative floor for r coefficients
};

/// Steps 1-3 of the real case: recover r_tilde, take the real square root of
/// R, undo the Gaussian weights.  Returns one representative; -f is the other
/// solution (family_size = 2).
RetrievalReport reconstruct_real(const PhaselessSamples& m, const SpaceParams& p,
                                 const PipelineOptions& opts = {});

/// Full complex enumeration via the zero-flipping family.
RetrievalReport reconstruct_all(const PhaselessSamples& m, const SpaceParams& p,
                                const PipelineOptions& opts = {});

/// Shortcut for even real-valued sources with nonnegative r_hat.
RetrievalReport reconstruct_even_real(const PhaselessSamples& m,
                                      const SpaceParams& p,
                                      const PipelineOptions& opts = {});

/// max over samples of | |f(lambda)| - magnitude |.
double verify_solution(const SIFunction& f, const PhaselessSamples& m);

/// The unimodular alpha with ||coeffs(f) - alpha coeffs(g)||_inf <= tol, if
/// one exists.
std::optional<Complex> phase_equivalent(const SIFunction& f, const SIFunction& g,
                                        double tol);

}  // namespace gausspr
