#include "gausspr/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gausspr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

LaurentSeries constant_one() { return LaurentSeries(0, VectorXcd::Ones(1)); }

/// Single normalized zero factor of the product, value 1 at z = 0.
LaurentSeries zero_factor(Complex w) {
  if (w == Complex(0.0, 0.0))
    throw ZeroAtOrigin("pi_product: zero at the origin belongs in m");
  VectorXcd c(2);
  if (w.imag() >= 0.0) {
    const Complex a = std::exp(Complex(0.0, -kTwoPi) * w);
    const Complex denom = Complex(1.0, 0.0) - a;
    if (std::abs(denom) < 1e-12)
      throw NormalizationSingular("pi_product: 1 - e^{-2 pi i w} vanishes");
    c[0] = Complex(1.0, 0.0) / denom;   // q^{-1}
    c[1] = -a / denom;                  // q^0
    return LaurentSeries(-1, c);
  }
  const Complex b = std::exp(Complex(0.0, kTwoPi) * w);
  const Complex denom = Complex(1.0, 0.0) - b;
  if (std::abs(denom) < 1e-12)
    throw NormalizationSingular("pi_product: 1 - e^{2 pi i w} vanishes");
  c[0] = -b / denom;                    // q^0
  c[1] = Complex(1.0, 0.0) / denom;     // q^1
  return LaurentSeries(0, c);
}

double coeff_deviation(const LaurentSeries& A, const LaurentSeries& B) {
  const int lo = std::min(A.offset, B.offset);
  const int hi = std::max(A.top_index(), B.top_index());
  double dev = 0.0;
  for (int k = lo; k <= hi; ++k) dev = std::max(dev, std::abs(A.at(k) - B.at(k)));
  return dev;
}

Complex renormalize_strip(Complex w) {
  double x = w.real();
  if (x <= -0.5) x += 1.0;  // -1/2 maps to +1/2
  if (x > 0.5) x -= 1.0;
  return Complex(x, w.imag());
}

StripRegion classify(double x) {
  if (x == 0.0 || x == 0.5 || x == -0.5) return StripRegion::S_zero;
  return x > 0.0 ? StripRegion::S_plus : StripRegion::JS_plus;
}

}  // namespace

LaurentSeries pi_product(const ZeroSet& W, int m, int r_shift) {
  if (m < 0) throw Error("pi_product: m must be nonnegative");
  LaurentSeries P = constant_one();
  for (const auto& z : W.zeros) {
    const LaurentSeries f = zero_factor(z.location);
    for (int c = 0; c < z.multiplicity; ++c) P = multiply(P, f);
  }
  if (m > 0) {
    VectorXcd lin(2);
    lin[0] = Complex(-1.0, 0.0);
    lin[1] = Complex(1.0, 0.0);
    const LaurentSeries qm1(0, lin);  // q - 1
    for (int c = 0; c < m; ++c) P = multiply(P, qm1);
  }
  return shifted(P, r_shift);
}

ZeroSet reflect(const ZeroSet& Z) {
  ZeroSet out = Z;
  for (auto& z : out.zeros) {
    const Complex w = renormalize_strip(
        Complex(-z.location.real(), z.location.imag()));
    z.location = w;
    z.region = classify(w.real());
  }
  std::sort(out.zeros.begin(), out.zeros.end(), [](const StripZero& a, const StripZero& b) {
    if (a.location.real() != b.location.real())
      return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

double involution_deviation(const ZeroSet& W, int m, int r_shift) {
  const LaurentSeries lhs = involution(pi_product(W, m, r_shift));
  const LaurentSeries rhs = pi_product(reflect(W), m, r_shift);
  return coeff_deviation(lhs, rhs);
}

double product_merge_deviation(const ZeroSet& W1, int m1, int r1,
                               const ZeroSet& W2, int m2, int r2) {
  const LaurentSeries prod = multiply(pi_product(W1, m1, r1), pi_product(W2, m2, r2));
  ZeroSet merged;
  merged.zeros = W1.zeros;
  merged.zeros.insert(merged.zeros.end(), W2.zeros.begin(), W2.zeros.end());
  const LaurentSeries direct = pi_product(merged, m1 + m2, r1 + r2);
  return coeff_deviation(prod, direct);
}

namespace {

void require_self_adjoint(const LaurentSeries& R) {
  const double scale = R.inf_norm();
  double dev = 0.0;
  for (int j = 0; j < R.size(); ++j)
    dev = std::max(dev, std::abs(R.coeffs[j].imag()));
  if (dev > 1e-10 * scale + 1e-300)
    throw NotSelfAdjoint("R* != R: coefficients are not real");
}

struct FactorBase {
  ZeroSet Z;
  std::vector<StripZero> z0_half;   // S_0 zeros at half multiplicity
  std::vector<StripZero> s_plus;    // distinct S_plus zeros
  int m = 0;
  int target_offset = 0;            // offset of any valid D_V
  double lead = 0.0;                // lowest coefficient of R (real, > 0)
};

FactorBase analyze(const LaurentSeries& R, double cluster_tol) {
  require_self_adjoint(R);
  FactorBase fb;
  fb.Z = strip_zeros(R, cluster_tol);
  if (fb.Z.m0 % 2 != 0)
    throw OddShiftOrOrigin("origin zero of R has odd multiplicity");
  fb.m = fb.Z.m0 / 2;
  if (fb.Z.laurent_shift % 2 != 0)
    throw OddShiftOrOrigin("Laurent shift of R is odd");
  fb.target_offset = fb.Z.laurent_shift / 2;
  for (const auto& z : fb.Z.zeros) {
    if (z.region == StripRegion::S_zero) {
      if (z.multiplicity % 2 != 0)
        throw OddMultiplicity("zero on the axis lines with odd multiplicity");
      StripZero h = z;
      h.multiplicity /= 2;
      fb.z0_half.push_back(h);
    } else if (z.region == StripRegion::S_plus) {
      fb.s_plus.push_back(z);
    }
  }
  const Complex lead = R.trimmed(0.0).coeffs[0];
  if (!(lead.real() > 0.0) || std::abs(lead.imag()) > 1e-10 * std::abs(lead))
    throw NotSelfAdjoint("lowest coefficient of R is not positive");
  fb.lead = lead.real();
  return fb;
}

FactorSpec build_factor(const FactorBase& fb,
                        const std::vector<int>& copies) {
  FactorSpec spec;
  spec.m = fb.m;
  ZeroSet W;
  for (size_t j = 0; j < fb.s_plus.size(); ++j) {
    const int take = copies[j];
    if (take > 0) {
      StripZero z = fb.s_plus[j];
      z.multiplicity = take;
      W.zeros.push_back(z);
      spec.selection.emplace_back(static_cast<int>(j), take);
    }
    const int rest = fb.s_plus[j].multiplicity - take;
    if (rest > 0) {
      StripZero z = fb.s_plus[j];
      z.multiplicity = rest;
      z.location = renormalize_strip(
          Complex(-z.location.real(), z.location.imag()));
      z.region = StripRegion::JS_plus;
      W.zeros.push_back(z);
    }
  }
  W.zeros.insert(W.zeros.end(), fb.z0_half.begin(), fb.z0_half.end());
  LaurentSeries P = pi_product(W, fb.m, 0);
  spec.r_shift = fb.target_offset - P.offset;
  const Complex p_lead = P.coeffs[0];
  const double cmag = std::sqrt(fb.lead) / std::abs(p_lead);
  spec.constant_C = Complex(cmag, 0.0);
  spec.series = scale(shifted(P, spec.r_shift), spec.constant_C);
  spec.zeros_W = W;
  return spec;
}

}  // namespace

SolutionFamily solution_family(const LaurentSeries& R, int max_count,
                               double cluster_tol) {
  const FactorBase fb = analyze(R, cluster_tol);
  SolutionFamily fam;
  fam.s_plus = fb.s_plus;
  fam.total_count = 1;
  for (const auto& z : fb.s_plus) fam.total_count *= (z.multiplicity + 1);

  std::vector<int> copies(fb.s_plus.size(), 0);
  long long produced = 0;
  while (produced < fam.total_count &&
         static_cast<int>(fam.members.size()) < max_count) {
    fam.members.push_back(build_factor(fb, copies));
    ++produced;
    // next selection, lexicographic
    for (size_t j = 0; j < copies.size(); ++j) {
      if (copies[j] < fb.s_plus[j].multiplicity) {
        ++copies[j];
        break;
      }
      copies[j] = 0;
    }
    if (copies.empty()) break;
  }
  return fam;
}

LaurentSeries real_square_root(const LaurentSeries& R, double cluster_tol) {
  require_self_adjoint(R);
  const ZeroSet Z = strip_zeros(R, cluster_tol);
  if (Z.m0 % 2 != 0) throw OddMultiplicity("origin zero has odd multiplicity");
  if (Z.laurent_shift % 2 != 0)
    throw OddMultiplicity("Laurent shift of R is odd; R is not a square");
  ZeroSet W;
  for (const auto& z : Z.zeros) {
    if (z.multiplicity % 2 != 0)
      throw OddMultiplicity("zero of odd multiplicity; R is not a square");
    StripZero h = z;
    h.multiplicity /= 2;
    W.zeros.push_back(h);
  }
  const int m = Z.m0 / 2;
  const int target_offset = Z.laurent_shift / 2;
  LaurentSeries P = pi_product(W, m, 0);
  P = shifted(P, target_offset - P.offset);
  const Complex lead = R.trimmed(0.0).coeffs[0];
  const Complex C = std::sqrt(lead / (P.coeffs[0] * P.coeffs[0]));
  LaurentSeries D = scale(P, C);
  // A genuine square of a real-coefficient series yields real coefficients.
  const double scale_norm = D.inf_norm();
  for (int j = 0; j < D.size(); ++j) {
    if (std::abs(D.coeffs[j].imag()) > 1e-6 * scale_norm)
      throw OddMultiplicity("square root is not real; R is not a real square");
    D.coeffs[j] = Complex(D.coeffs[j].real(), 0.0);
  }
  D.gamma_tag = R.gamma_tag > 0.0 ? 2.0 * R.gamma_tag : 0.0;
  return D;
}

CoeffSeq even_real_square_root(const LaurentSeries& r_hat, double gamma,
                               double tol) {
  const LaurentSeries R = r_hat.trimmed(0.0);
  if (R.offset % 2 != 0 || R.top_index() % 2 != 0)
    throw Error("even_real_square_root: odd support bounds");
  const int k_lo = R.offset / 2;
  const int k_hi = R.top_index() / 2;
  const int span = std::max(1, R.degree_span());
  const int N = 8 * (span + 1);
  const double scale_norm = R.inf_norm();

  VectorXd vals(N);
  double min_val = 0.0;
  for (int j = 0; j < N; ++j) {
    const Complex v = eval_at(R, Complex(double(j) / N, 0.0));
    if (std::abs(v.imag()) > tol * scale_norm + 1e-300)
      throw NotSelfAdjoint("even_real_square_root: r_hat not real on [0,1)");
    vals[j] = v.real();
    min_val = std::min(min_val, vals[j]);
  }
  if (min_val < -tol * scale_norm)
    throw NegativeSpectrum("even_real_square_root: r_hat dips below zero (min " +
                           std::to_string(min_val) + ")");
  VectorXcd d = VectorXcd::Zero(k_hi - k_lo + 1);
  for (int k = k_lo; k <= k_hi; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < N; ++j)
      acc += std::sqrt(std::max(0.0, vals[j])) *
             std::exp(Complex(0.0, -kTwoPi * k * j / N));
    d[k - k_lo] = acc / double(N);
  }
  (void)gamma;
  return CoeffSeq(k_lo, d, Role::d);
}

}  // namespace gausspr
