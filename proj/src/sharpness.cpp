#include "gausspr/sharpness.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "gausspr/space.hpp"

namespace gausspr {

std::pair<SampleSet, SampleSet> split_even_odd(const SampleSet& s) {
  const int n = s.size();
  VectorXd even((n + 1) / 2), odd(n / 2);
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0)
      even[i / 2] = s.points[i];
    else
      odd[i / 2] = s.points[i];
  }
  if (odd.size() == 0) odd = even;  // degenerate tiny sets
  return {SampleSet(even), SampleSet(odd)};
}

namespace {

struct Guarded {
  VectorXd lambdas;       // rescaled guarded sample locations
  int k_lo = 0, k_hi = 0; // integer coefficient window (guarded)
  double gamma = 1.0;     // rescaled gamma
};

Guarded guarded_system(const SampleSet& s, const SpaceParams& p,
                       const CounterexampleOptions& opts) {
  Guarded g;
  g.gamma = p.beta * p.beta * p.gamma;
  const double lo = opts.window_lo / p.beta + opts.guard;
  const double hi = opts.window_hi / p.beta - opts.guard;
  if (hi < lo) throw WindowTooSmall("counterexample: guard swallows the window");
  std::vector<double> pts;
  for (int i = 0; i < s.size(); ++i) {
    const double x = s.points[i] / p.beta;
    if (x >= lo - 1e-12 && x <= hi + 1e-12) pts.push_back(x);
  }
  g.lambdas = Eigen::Map<VectorXd>(pts.data(), pts.size());
  g.k_lo = static_cast<int>(std::ceil(lo - 1e-12));
  g.k_hi = static_cast<int>(std::floor(hi + 1e-12));
  return g;
}

}  // namespace

SIFunction vanishing_function(const SampleSet& s, const SpaceParams& p,
                              const CounterexampleOptions& opts) {
  Guarded g = guarded_system(s, p, opts);
  const int cols = g.k_hi - g.k_lo + 1;
  if (cols < 1) throw WindowTooSmall("vanishing_function: no coefficient indices");
  SIFunction f;
  f.params = p;
  if (g.lambdas.size() == 0) {
    // No constraints: a single centered Gaussian qualifies.
    f.coeffs = CoeffSeq((g.k_lo + g.k_hi) / 2, VectorXcd::Ones(1), Role::c);
    return f;
  }
  const int rows = static_cast<int>(g.lambdas.size());
  MatrixXd A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double u = g.lambdas[i] - (g.k_lo + j);
      A(i, j) = std::exp(-g.gamma * u * u);
    }
  Eigen::JacobiSVD<MatrixXd> svd(A, Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  const double smax = sv.size() ? sv.maxCoeff() : 0.0;
  const double smin = cols > rows ? 0.0 : sv.minCoeff();
  if (smax > 0.0 && smin / smax > opts.null_tol)
    throw NoNullSpace("vanishing_function: collocation has full column rank "
                      "(density too high for a null vector)");
  VectorXd c = svd.matrixV().col(cols - 1);
  // Deterministic normalization: sup norm 1, largest entry positive.
  int best = 0;
  for (int j = 1; j < cols; ++j)
    if (std::abs(c[j]) > std::abs(c[best])) best = j;
  c /= c[best];
  f.coeffs = CoeffSeq(g.k_lo, c.cast<Complex>(), Role::c);
  return f;
}

CounterexamplePair build_counterexample(const SampleSet& s, const SpaceParams& p,
                                        const CounterexampleOptions& opts) {
  auto [even, odd] = split_even_odd(s);
  CounterexamplePair out;
  out.f = vanishing_function(even, p, opts);
  out.g = vanishing_function(odd, p, opts);

  const int lo = std::min(out.f.coeffs.first_index(), out.g.coeffs.first_index());
  const int hi = std::max(out.f.coeffs.last_index(), out.g.coeffs.last_index());
  VectorXcd cp = VectorXcd::Zero(hi - lo + 1), cm = VectorXcd::Zero(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    cp[k - lo] = out.f.coeffs.at(k) + out.g.coeffs.at(k);
    cm[k - lo] = out.f.coeffs.at(k) - out.g.coeffs.at(k);
  }
  out.plus = SIFunction{p, CoeffSeq(lo, cp, Role::c), false};
  out.minus = SIFunction{p, CoeffSeq(lo, cm, Role::c), false};

  const double glo = opts.window_lo + opts.guard * p.beta;
  const double ghi = opts.window_hi - opts.guard * p.beta;
  for (int i = 0; i < s.size(); ++i) {
    const double lam = s.points[i];
    if (lam < glo - 1e-12 || lam > ghi + 1e-12) continue;
    const double a = std::abs(evaluate(out.plus, lam));
    const double b = std::abs(evaluate(out.minus, lam));
    out.magnitude_agreement = std::max(out.magnitude_agreement, std::abs(a - b));
  }

  VectorXcd u = cp / cp.norm(), v = cm / cm.norm();
  const Complex inner = (u.adjoint() * v)(0, 0);
  out.gram_det = 1.0 - std::norm(inner);
  return out;
}

}  // namespace gausspr
