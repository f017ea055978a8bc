#pragma once

#include <utility>

#include "gausspr/sampling.hpp"

namespace gausspr {

/// Even- and odd-indexed subsequences; each carries about half the density.
std::pair<SampleSet, SampleSet> split_even_odd(const SampleSet& s);

struct CounterexampleOptions {
  double window_lo = -10.0;
  double window_hi = 10.0;
  double guard = 4.0;          // in units of beta, trimmed off both ends
  double null_tol = 1e-8;      // smallest/largest singular value gate
};

/// A real unit-sup-norm coefficient vector whose function vanishes on the
/// guarded points of s.  Throws NoNullSpace when the collocation system has
/// full column rank (density too high).
SIFunction vanishing_function(const SampleSet& s, const SpaceParams& p,
                              const CounterexampleOptions& opts = {});

struct CounterexamplePair {
  SIFunction plus;    // f + g
  SIFunction minus;   // f - g
  SIFunction f;       // vanishes on the even-indexed guarded points
  SIFunction g;       // vanishes on the odd-indexed guarded points
  double magnitude_agreement = 0.0;  // max | |F| - |G| | on guarded points
  double gram_det = 0.0;             // after unit normalization
};

/// The sharpness pair (f+g, f-g): equal phaseless samples on the guarded
/// points, yet linearly independent.  Requires density below 2/beta.
CounterexamplePair build_counterexample(const SampleSet& s, const SpaceParams& p,
                                        const CounterexampleOptions& opts = {});

}  // namespace gausspr
