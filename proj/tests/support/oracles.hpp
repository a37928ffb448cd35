#pragma once

// Test-only oracles: the invariant cubics as explicit polynomials in flat
// coordinates, built from the gamma matrices, and finite differences.

#include <cmath>
#include <random>

#include "polynomial.hpp"
#include "vinberg/cubics.hpp"
#include "vinberg/sampling.hpp"

namespace oracle {

using LPoly = Poly<long double>;

/// q as a polynomial, Euclidean metrics. Rank 2: a x2^3 + b x2 (x1 x2 - |w|^2).
/// Rank 3: a d + b x3 (x2 x3 - |v|^2) + c x3^3 with the cross term spelled out
/// entry by entry from the gamma matrices.
inline LPoly cubic_poly(const vinberg::InvariantCubic& q) {
  const auto& alg = q.cone().algebra();
  const int n = alg.herm_dim();
  auto var = [n](int i) { return LPoly::var(n, i); };
  const auto& c = q.coeffs();
  if (q.rank() == 2) {
    const int k = alg.block_dim(1, 2);
    LPoly w2(n);
    for (int i = 0; i < k; ++i) w2 += var(2 + i) * var(2 + i);
    const LPoly x1 = var(0), x2 = var(1);
    return static_cast<long double>(c[0]) * (x2 * x2 * x2) +
           static_cast<long double>(c[1]) * (x2 * (x1 * x2 - w2));
  }
  const auto& mod = *alg.clifford();
  const int k = mod.dim_s0();
  const int dv = mod.dim_v();
  const int o0 = 3, o1 = 3 + k, ov = 3 + 2 * k;
  const LPoly x1 = var(0), x2 = var(1), x3 = var(2);
  LPoly n0(n), n1(n), nv(n), cross(n);
  for (int i = 0; i < k; ++i) {
    n0 += var(o0 + i) * var(o0 + i);
    n1 += var(o1 + i) * var(o1 + i);
  }
  for (int a = 0; a < dv; ++a) nv += var(ov + a) * var(ov + a);
  for (int a = 0; a < dv; ++a) {
    const auto& g = mod.gammas()[static_cast<std::size_t>(a)];
    for (int r = 0; r < k; ++r) {
      for (int col = 0; col < k; ++col) {
        if (g(r, col) == 0) continue;
        cross += static_cast<long double>(g(r, col)) * (var(ov + a) * var(o1 + r) * var(o0 + col));
      }
    }
  }
  const LPoly d = x1 * x2 * x3 - x3 * n0 - x2 * n1 - x1 * nv + 2.0L * cross;
  return static_cast<long double>(c[0]) * d + static_cast<long double>(c[1]) * (x3 * (x2 * x3 - nv)) +
         static_cast<long double>(c[2]) * (x3 * x3 * x3);
}

/// -Hess log q from symbolic first and second derivatives.
inline vinberg::Mat symbolic_hessian_log(const LPoly& q, const vinberg::Vec& x) {
  const int n = q.nvars();
  const long double value = q.eval(x);
  std::vector<LPoly> grad;
  std::vector<long double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grad.push_back(q.derivative(i));
    g[static_cast<std::size_t>(i)] = grad.back().eval(x);
  }
  vinberg::Mat h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long double hij = grad[static_cast<std::size_t>(i)].derivative(j).eval(x);
      h(i, j) = static_cast<double>((g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] - value * hij) /
                                    (value * value));
    }
  }
  return h;
}

/// Central differences, step h, of the gradient of -log q, with the gradient
/// taken from the polynomial's own derivatives and evaluated in long double.
inline vinberg::Mat fd_hessian_log(const LPoly& q, const vinberg::Vec& x, double h) {
  using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const int n = q.nvars();
  std::vector<LPoly> grad;
  for (int i = 0; i < n; ++i) grad.push_back(q.derivative(i));
  auto grad_neg_log = [&](const LVec& p) {
    const long double value = q.eval(p);
    LVec g(n);
    for (int i = 0; i < n; ++i) g(i) = -grad[static_cast<std::size_t>(i)].eval(p) / value;
    return g;
  };
  const LVec base = x.cast<long double>();
  const long double hh = h;
  vinberg::Mat out(n, n);
  for (int j = 0; j < n; ++j) {
    LVec plus = base, minus = base;
    plus(j) += hh;
    minus(j) -= hh;
    const LVec col = (grad_neg_log(plus) - grad_neg_log(minus)) / (2.0L * hh);
    for (int i = 0; i < n; ++i) out(i, j) = static_cast<double>(col(i));
  }
  return 0.5 * (out + out.transpose());
}

/// max |a - b| / max(|a|, floor_ratio * max|a|), componentwise.
inline double componentwise_rel(const vinberg::Mat& exact, const vinberg::Mat& approx, double floor_ratio = 1e-3) {
  const double floor = floor_ratio * exact.cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (long i = 0; i < exact.rows(); ++i) {
    for (long j = 0; j < exact.cols(); ++j) {
      worst = std::max(worst, std::abs(exact(i, j) - approx(i, j)) / std::max(std::abs(exact(i, j)), floor));
    }
  }
  return worst;
}

/// Floor for comparing against closed forms: entries that vanish exactly are
/// computed with rounding noise of order 1e-16 max|H|.
inline constexpr double kClosedFormFloor = 1e-4;

/// Closed-form -Hess log q at diag(x1, x2) for q = x2 p1 + eps x2^3, dim_w = k.
inline vinberg::Mat rank2_closed_form(double x1, double x2, double eps, int k) {
  const int n = 2 + k;
  const double u = x1 + eps * x2;
  const double r = x1 / x2;
  vinberg::Mat h = vinberg::Mat::Zero(n, n);
  h(0, 0) = 1.0 / (u * u);
  h(0, 1) = h(1, 0) = eps / (u * u);
  h(1, 1) = (2.0 * r * r + 4.0 * eps * r + 3.0 * eps * eps) / (u * u);
  for (int i = 2; i < n; ++i) h(i, i) = 2.0 / (x1 * x2 + eps * x2 * x2);
  return h;
}

/// Closed-form -Hess log q at diag(x1, x2, x3) for q = d + e1 p2 p3 + e2 p3^3,
/// block sizes k = dim S0 = dim S1 and dv = dim V, in the order
/// (x1, x2, x3, s0, s1, v).
inline vinberg::Mat rank3_closed_form(double x1, double x2, double x3, double e1, double e2, int k, int dv) {
  const int n = 3 + 2 * k + dv;
  const double q = x3 * (x1 * x2 + e1 * x2 * x3 + e2 * x3 * x3);
  const double a = x2 * x3 * x3 * (e1 * x2 + 2.0 * e2 * x3);
  const double b = x3 * x3 * (x1 + e1 * x3) * (x1 + e1 * x3);
  const double c = e2 * x3 * x3 * x3 * (2.0 * x1 + e1 * x3);
  const double dd = x2 * x2 * (x1 + e1 * x3) * (x1 + e1 * x3) + x3 * x3 * (e1 * x2 + e2 * x3) * (e1 * x2 + e2 * x3) +
                    2.0 * e2 * x3 * x3 * x3 * (e1 * x2 + e2 * x3);
  vinberg::Mat h = vinberg::Mat::Zero(n, n);
  h(0, 0) = x2 * x2 * x3 * x3;
  h(0, 1) = h(1, 0) = -e2 * x3 * x3 * x3 * x3;
  h(0, 2) = h(2, 0) = a;
  h(1, 1) = b;
  h(1, 2) = h(2, 1) = c;
  h(2, 2) = dd;
  // Lower blocks by coordinate role: S0 <- 2q x3, S1 <- 2q x2, V <- 2q (x1 + e1 x3).
  for (int i = 0; i < k; ++i) h(3 + i, 3 + i) = 2.0 * q * x3;
  for (int i = 0; i < k; ++i) h(3 + k + i, 3 + k + i) = 2.0 * q * x2;
  for (int i = 0; i < dv; ++i) h(3 + 2 * k + i, 3 + 2 * k + i) = 2.0 * q * (x1 + e1 * x3);
  return h / (q * q);
}

}  // namespace oracle
