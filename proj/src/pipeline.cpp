#include "gausspr/pipeline.hpp"

#include <cmath>

#include "gausspr/space.hpp"

namespace gausspr {

namespace {

struct Front {
  SpaceParams unit;            // rescaled params, beta = 1
  PhaselessSamples samples;    // rescaled locations
  LaurentSeries R;             // series of r_n, trimmed
  FrameBounds bounds;
  double fit_residual = 0.0;
  bool zero = false;
};

/// Rescale to beta = 1, recover r_tilde, convert to the r series of R(z).
Front front_end(const PhaselessSamples& m, const SpaceParams& p,
                const PipelineOptions& opts) {
  Front fr;
  fr.unit = SpaceParams(p.beta * p.beta * p.gamma, 1.0);
  fr.samples = m;
  if (p.beta != 1.0) fr.samples.lambdas /= p.beta;

  const IntRange win =
      opts.n_window ? *opts.n_window
                    : default_n_window(fr.samples, opts.recovery.guard_halfsteps);
  RecoveryResult rec = recover_rtilde(fr.samples, fr.unit, win, opts.recovery);
  fr.bounds = rec.bounds;
  fr.fit_residual = rec.residual;

  const double g = fr.unit.gamma;
  VectorXcd r(rec.rtilde.size());
  for (int j = 0; j < rec.rtilde.size(); ++j) {
    const double n = rec.rtilde.offset + j;
    r[j] = Complex(rec.rtilde.values[j].real() * std::exp(-g * n * n / 2.0), 0.0);
  }
  LaurentSeries R(rec.rtilde.offset, r, g / 2.0);
  const double floor = opts.trim_rel * R.inf_norm();
  R = R.trimmed(floor);
  if (R.is_zero(floor)) {
    fr.zero = true;
    return fr;
  }
  // The product structure of R forces even support bounds; a boundary entry
  // surviving at an odd index is truncation dust.
  while (R.size() > 1 && R.offset % 2 != 0)
    R = LaurentSeries(R.offset + 1, R.coeffs.tail(R.size() - 1), R.gamma_tag);
  while (R.size() > 1 && R.top_index() % 2 != 0)
    R = LaurentSeries(R.offset, R.coeffs.head(R.size() - 1), R.gamma_tag);
  fr.R = R;
  return fr;
}

SIFunction assemble(const CoeffSeq& d, const SpaceParams& unit,
                    const SpaceParams& original) {
  CoeffSeq c = undecay_weights(d, unit.gamma);
  // Coefficients are invariant under the unit-step substitution, so the
  // function in the original space uses them unchanged.
  SIFunction f;
  f.params = original;
  f.coeffs = c;
  return f;
}

int largest_index(const CoeffSeq& c) {
  int best = 0;
  double mag = -1.0;
  for (int j = 0; j < c.size(); ++j)
    if (std::abs(c.values[j]) > mag) {
      mag = std::abs(c.values[j]);
      best = j;
    }
  return best;
}

/// Rotate so the largest-magnitude coefficient is positive real.
void canonical_phase(SIFunction& f) {
  if (f.coeffs.is_zero()) return;
  const Complex top = f.coeffs.values[largest_index(f.coeffs)];
  f.coeffs.values *= std::conj(top) / std::abs(top);
}

/// Double roots of a recovered R split by roughly the square root of the
/// coefficient error, which can exceed the clustering tolerance; the pair is
/// then either flagged as ambiguous or miscounted as two simple zeros.
/// Escalate the tolerance until the pair merges (or the escalation runs out,
/// in which case the data genuinely is not a square).
template <typename Fn>
auto with_cluster_retry(double tol, Fn&& fn) {
  for (int attempt = 0;; ++attempt) {
    try {
      return fn(tol);
    } catch (const ClusterAmbiguous&) {
      if (attempt >= 7) throw;
    } catch (const OddMultiplicity&) {
      if (attempt >= 7) throw;
    }
    tol *= 3.0;
  }
}

SIFunction zero_function(const SpaceParams& p) {
  SIFunction f;
  f.params = p;
  f.coeffs = CoeffSeq(0, VectorXcd::Zero(1), Role::c);
  return f;
}

}  // namespace

RetrievalReport reconstruct_real(const PhaselessSamples& m, const SpaceParams& p,
                                 const PipelineOptions& opts) {
  Front fr = front_end(m, p, opts);
  RetrievalReport rep;
  rep.mode = RetrievalMode::real;
  rep.conditioning = fr.bounds;
  rep.fit_residual = fr.fit_residual;
  if (fr.zero) {
    rep.recovered.push_back(zero_function(p));
    rep.residuals.push_back(verify_solution(rep.recovered[0], m));
    rep.family_size = 1;
    return rep;
  }
  LaurentSeries D = with_cluster_retry(
      opts.cluster_tol, [&](double t) { return real_square_root(fr.R, t); });
  CoeffSeq d(D.offset, D.coeffs, Role::d);
  SIFunction f = assemble(d, fr.unit, p);
  canonical_phase(f);
  rep.recovered.push_back(f);
  rep.residuals.push_back(verify_solution(f, m));
  rep.family_size = 2;  // f and -f
  return rep;
}

RetrievalReport reconstruct_all(const PhaselessSamples& m, const SpaceParams& p,
                                const PipelineOptions& opts) {
  Front fr = front_end(m, p, opts);
  RetrievalReport rep;
  rep.mode = RetrievalMode::complex_all;
  rep.conditioning = fr.bounds;
  rep.fit_residual = fr.fit_residual;
  if (fr.zero) {
    rep.recovered.push_back(zero_function(p));
    rep.residuals.push_back(verify_solution(rep.recovered[0], m));
    rep.family_size = 1;
    return rep;
  }
  SolutionFamily fam = with_cluster_retry(opts.cluster_tol, [&](double t) {
    return solution_family(fr.R, opts.max_solutions, t);
  });
  rep.family_size = fam.total_count;
  for (const auto& spec : fam.members) {
    CoeffSeq d(spec.series.offset, spec.series.coeffs, Role::d);
    SIFunction f = assemble(d, fr.unit, p);
    canonical_phase(f);
    rep.recovered.push_back(f);
    rep.residuals.push_back(verify_solution(f, m));
  }
  return rep;
}

RetrievalReport reconstruct_even_real(const PhaselessSamples& m,
                                      const SpaceParams& p,
                                      const PipelineOptions& opts) {
  Front fr = front_end(m, p, opts);
  RetrievalReport rep;
  rep.mode = RetrievalMode::even_real;
  rep.conditioning = fr.bounds;
  rep.fit_residual = fr.fit_residual;
  if (fr.zero) {
    rep.recovered.push_back(zero_function(p));
    rep.residuals.push_back(verify_solution(rep.recovered[0], m));
    rep.family_size = 1;
    return rep;
  }
  CoeffSeq d = even_real_square_root(fr.R, fr.unit.gamma);
  SIFunction f = assemble(d, fr.unit, p);
  canonical_phase(f);
  rep.recovered.push_back(f);
  rep.residuals.push_back(verify_solution(f, m));
  rep.family_size = 2;
  return rep;
}

double verify_solution(const SIFunction& f, const PhaselessSamples& m) {
  double worst = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    const double mag = std::abs(evaluate(f, m.lambdas[i]));
    worst = std::max(worst, std::abs(mag - m.magnitudes[i]));
  }
  return worst;
}

std::optional<Complex> phase_equivalent(const SIFunction& f, const SIFunction& g,
                                        double tol) {
  const CoeffSeq& a = f.coeffs;
  const CoeffSeq& b = g.coeffs;
  if (a.is_zero() && b.is_zero()) return Complex(1.0, 0.0);
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const int j = largest_index(a);
  const int k = a.offset + j;
  const Complex denom = b.at(k);
  if (std::abs(denom) == 0.0) return std::nullopt;
  Complex alpha = a.values[j] / denom;
  if (std::abs(alpha) == 0.0) return std::nullopt;
  alpha /= std::abs(alpha);
  const int lo = std::min(a.first_index(), b.first_index());
  const int hi = std::max(a.last_index(), b.last_index());
  double dev = 0.0;
  for (int i = lo; i <= hi; ++i)
    dev = std::max(dev, std::abs(a.at(i) - alpha * b.at(i)));
  if (dev > tol) return std::nullopt;
  return alpha;
}

}  // namespace gausspr
