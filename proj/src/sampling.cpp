#include "gausspr/sampling.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gausspr/log.hpp"
#include "gausspr/space.hpp"

namespace gausspr {

SampleSet::SampleSet(VectorXd pts) : points(std::move(pts)) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw Error("SampleSet: empty point list");
  separation = std::numeric_limits<double>::infinity();
  for (int i = 1; i < n; ++i) {
    const double gap = points[i] - points[i - 1];
    if (gap <= 0.0) throw Error("SampleSet: points must be strictly increasing");
    separation = std::min(separation, gap);
  }
  window_lo = points[0];
  window_hi = points[n - 1];
}

SampleSet arithmetic_sample_set(double step, double lo, double hi) {
  if (step <= 0.0 || hi < lo) throw Error("arithmetic_sample_set: bad spec");
  const int kmin = static_cast<int>(std::ceil(lo / step - 1e-12));
  const int kmax = static_cast<int>(std::floor(hi / step + 1e-12));
  if (kmax < kmin) throw Error("arithmetic_sample_set: empty window");
  VectorXd pts(kmax - kmin + 1);
  for (int k = kmin; k <= kmax; ++k) pts[k - kmin] = step * k;
  return SampleSet(pts);
}

double lower_density_estimate(const SampleSet& s, double radius) {
  if (radius <= 0.0) throw Error("lower_density_estimate: radius must be positive");
  const double len = s.window_hi - s.window_lo;
  if (2.0 * radius > len)
    throw WindowTooSmall("lower_density_estimate: 2 radius exceeds window length");
  const double lo = s.window_lo + radius;
  const double hi = s.window_hi - radius;
  const double grid = std::isfinite(s.separation) && s.separation > 0.0
                          ? s.separation / 4.0
                          : (hi - lo) / 256.0;
  double best = std::numeric_limits<double>::infinity();
  const int steps = grid > 0.0 ? std::max(1, static_cast<int>(std::floor((hi - lo) / grid))) : 1;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + (hi - lo) * (steps ? double(i) / steps : 0.5);
    const double* begin = s.points.data();
    const double* end = begin + s.points.size();
    const auto a = std::lower_bound(begin, end, x - radius - 1e-12);
    const auto b = std::upper_bound(begin, end, x + radius + 1e-12);
    best = std::min(best, double(b - a) / (2.0 * radius));
  }
  return best;
}

PhaselessSamples take_phaseless_samples(const SIFunction& f, const SampleSet& s,
                                        double noise_sigma, unsigned seed) {
  PhaselessSamples out;
  out.lambdas = s.points;
  out.magnitudes.resize(s.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_sigma);
  for (int i = 0; i < s.size(); ++i) {
    double m = std::abs(evaluate(f, s.points[i]));
    if (noise_sigma > 0.0) m = std::max(0.0, m + noise(rng));
    out.magnitudes[i] = m;
  }
  return out;
}

MatrixXd collocation_matrix(const VectorXd& lambdas, double gamma,
                            const IntRange& n_window) {
  const int rows = static_cast<int>(lambdas.size());
  const int cols = n_window.size();
  MatrixXd M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double u = lambdas[i] - 0.5 * (n_window.lo + j);
      M(i, j) = std::exp(-2.0 * gamma * u * u);
    }
  return M;
}

IntRange default_n_window(const PhaselessSamples& m, int guard_halfsteps) {
  if (m.size() == 0) throw Error("default_n_window: no samples");
  const double a = m.lambdas.minCoeff();
  const double b = m.lambdas.maxCoeff();
  return IntRange{static_cast<int>(std::floor(2.0 * a)) - guard_halfsteps,
                  static_cast<int>(std::ceil(2.0 * b)) + guard_halfsteps};
}

static FrameBounds bounds_from_singular_values(const VectorXd& sv, int rows,
                                               int cols) {
  FrameBounds fb;
  if (sv.size() == 0) {
    fb.condition = std::numeric_limits<double>::infinity();
    return fb;
  }
  const double smax = sv.maxCoeff();
  // With more columns than rows the map has a genuine null space: A = 0.
  const double smin = cols > rows ? 0.0 : sv.minCoeff();
  fb.upper = smax * smax;
  fb.lower = smin * smin;
  fb.condition = fb.lower > 0.0 ? fb.upper / fb.lower
                                : std::numeric_limits<double>::infinity();
  return fb;
}

RecoveryResult recover_rtilde(const PhaselessSamples& m, const SpaceParams& p,
                              const IntRange& n_window,
                              const RecoveryOptions& opts) {
  if (n_window.size() == 0) throw Error("recover_rtilde: empty window");
  if (m.size() < n_window.size() / 2)
    log_warn("recover_rtilde: very few samples for the requested window");
  if (m.size() >= 2) {
    SampleSet s(m.lambdas);
    const double len = s.window_hi - s.window_lo;
    if (len > 4.0) {
      const double dens = lower_density_estimate(s, len / 4.0);
      if (dens <= 2.0 / p.beta)
        log_warn("recover_rtilde: sample density " + std::to_string(dens) +
                 " at or below threshold 2/beta");
    }
  }

  const double gamma = p.gamma;
  MatrixXd M = collocation_matrix(m.lambdas, gamma, n_window);
  // Conditioning is judged on the columns a guard margin inside the hull;
  // edge columns are kept in the solve but handled by SVD truncation.
  const double a = m.lambdas.minCoeff();
  const double b = m.lambdas.maxCoeff();
  const int inner_lo =
      std::max(n_window.lo, static_cast<int>(std::ceil(2.0 * a)) + opts.guard_halfsteps);
  const int inner_hi =
      std::min(n_window.hi, static_cast<int>(std::floor(2.0 * b)) - opts.guard_halfsteps);
  FrameBounds fb;
  if (inner_hi >= inner_lo) {
    MatrixXd Mi = M.middleCols(inner_lo - n_window.lo, inner_hi - inner_lo + 1);
    Eigen::JacobiSVD<MatrixXd> svd_i(Mi);
    fb = bounds_from_singular_values(svd_i.singularValues(),
                                     static_cast<int>(Mi.rows()),
                                     static_cast<int>(Mi.cols()));
  } else {
    fb.condition = std::numeric_limits<double>::infinity();
  }
  const double cond = std::sqrt(fb.condition);
  if (!(cond <= opts.cond_limit))
    throw IllConditioned("recover_rtilde: collocation condition " +
                         std::to_string(cond) +
                         " (density too low or window mismatch)");

  VectorXd rhs = m.magnitudes.cwiseProduct(m.magnitudes);
  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const VectorXd& sv = svd.singularValues();
  const double cutoff = sv.size() ? opts.svd_rcond * sv[0] : 0.0;
  VectorXd y = svd.matrixU().transpose() * rhs;
  for (int i = 0; i < sv.size(); ++i) y[i] = sv[i] > cutoff ? y[i] / sv[i] : 0.0;
  VectorXd x = svd.matrixV() * y;

  RecoveryResult out;
  out.bounds = fb;
  out.residual = (M * x - rhs).cwiseAbs().maxCoeff();
  VectorXcd xc = x.cast<Complex>();
  out.rtilde = CoeffSeq(n_window.lo, xc, Role::r_tilde);
  return out;
}

FrameBounds frame_bound_estimate(const SampleSet& s, const SpaceParams& p,
                                 const IntRange& n_window) {
  if (n_window.size() == 0) {
    FrameBounds fb;  // degenerate, error-free
    fb.condition = std::numeric_limits<double>::infinity();
    return fb;
  }
  MatrixXd M = collocation_matrix(s.points, p.gamma, n_window);
  Eigen::JacobiSVD<MatrixXd> svd(M);
  return bounds_from_singular_values(svd.singularValues(),
                                     static_cast<int>(M.rows()),
                                     static_cast<int>(M.cols()));
}

}  // namespace gausspr
