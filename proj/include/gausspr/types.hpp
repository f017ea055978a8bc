#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "gausspr/errors.hpp"

namespace gausspr {

using Complex = std::complex<double>;
using VectorXcd = Eigen::VectorXcd;
using VectorXd = Eigen::VectorXd;
using MatrixXd = Eigen::MatrixXd;
using MatrixXcd = Eigen::MatrixXcd;

/// The pair (gamma, beta) defining V^inf_beta(phi_gamma).
struct SpaceParams {
  double gamma = 1.0;
  double beta = 1.0;

  SpaceParams() = default;
  SpaceParams(double g, double b) : gamma(g), beta(b) {
    if (gamma <= 0.0) throw Error("SpaceParams: gamma must be positive");
    if (beta <= 0.0) throw Error("SpaceParams: beta must be positive");
  }
};

/// Which sequence in the chain c -> d -> r -> r_tilde this is.
enum class Role { c, d, r, r_tilde };

/// Finitely supported complex sequence, stored entries values[j] at index
/// offset + j.
struct CoeffSeq {
  int offset = 0;
  VectorXcd values;
  Role role = Role::c;

  CoeffSeq() = default;
  CoeffSeq(int off, VectorXcd vals, Role r)
      : offset(off), values(std::move(vals)), role(r) {}

  static CoeffSeq from_map(const std::map<int, Complex>& entries, Role r) {
    if (entries.empty()) return CoeffSeq(0, VectorXcd::Zero(1), r);
    int lo = entries.begin()->first;
    int hi = entries.rbegin()->first;
    VectorXcd v = VectorXcd::Zero(hi - lo + 1);
    for (const auto& [k, val] : entries) v[k - lo] = val;
    return CoeffSeq(lo, v, r);
  }

  int size() const { return static_cast<int>(values.size()); }
  int first_index() const { return offset; }
  int last_index() const { return offset + size() - 1; }

  Complex at(int k) const {
    int j = k - offset;
    if (j < 0 || j >= size()) return Complex(0.0, 0.0);
    return values[j];
  }

  double inf_norm() const {
    return values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  }

  bool is_zero(double tol = 0.0) const { return inf_norm() <= tol; }

  /// Drop leading/trailing entries with magnitude <= tol (absolute).
  CoeffSeq trimmed(double tol = 0.0) const {
    int lo = 0, hi = size() - 1;
    while (lo <= hi && std::abs(values[lo]) <= tol) ++lo;
    while (hi >= lo && std::abs(values[hi]) <= tol) --hi;
    if (lo > hi) return CoeffSeq(0, VectorXcd::Zero(1), role);
    return CoeffSeq(offset + lo, values.segment(lo, hi - lo + 1), role);
  }
};

/// f(x) = sum_k c_k exp(-gamma (x - step k)^2), step = beta (or beta/2 when
/// half_step, as for |f|^2).
struct SIFunction {
  SpaceParams params;
  CoeffSeq coeffs;
  bool half_step = false;

  double step() const { return half_step ? params.beta / 2.0 : params.beta; }
};

}  // namespace gausspr
