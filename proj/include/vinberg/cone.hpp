#pragma once

#include <string>
#include <vector>

#include "vinberg/nilalgebra.hpp"

namespace vinberg {

/// Exact rational number with positive denominator, reduced.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d = 1);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A rank-2 or rank-3 Vinberg cone over a Nil-algebra, together with its dual
/// algebra and the exponents n_i = 1 + 1/2 sum_{s != i} dim N_is.
class ConeDescriptor {
 public:
  explicit ConeDescriptor(AlgebraRef algebra);

  const NilAlgebra& algebra() const { return *algebra_; }
  const AlgebraRef& algebra_ref() const { return algebra_; }
  const AlgebraRef& dual_ref() const { return dual_; }
  int rank() const { return algebra_->rank(); }
  int dim_herm() const { return algebra_->herm_dim(); }
  bool is_euclidean() const { return algebra_->is_euclidean(); }
  /// Rank 3 built from a Clifford module with (s0, v) -> mu_v(s0).
  bool is_special_rank3() const { return algebra_->product_kind() == ProductKind::spinor_vector; }

  const std::vector<Rational>& exponents() const { return exponents_; }
  /// n_i - n_{i-1} - ... - n_1, the power of p_i in the characteristic function.
  const std::vector<Rational>& chi_exponents() const { return chi_exponents_; }
  /// Homogeneity degree of the characteristic function: sum_i 2^{m-i} chi_exponent_i.
  Rational chi_degree() const;

 private:
  AlgebraRef algebra_;
  AlgebraRef dual_;
  std::vector<Rational> exponents_;
  std::vector<Rational> chi_exponents_;
};

/// (p_1, ..., p_m); p_i has degree 2^{m-i}.
std::vector<double> p_polynomials(const ConeDescriptor& cone, const HermMatrix& x);

/// d(X) = x1 x2 x3 - x3|s0|^2 - x2|s1|^2 - x1|v|^2 + 2<mu_v(s0), s1> on a
/// special rank-3 cone, with s0 = x12, s1 = x13, v = x23.
double d_cubic(const ConeDescriptor& cone, const HermMatrix& x);

/// Squared G-determinant of any rank-3 algebra in these coordinates:
/// x1x2x3 - x1|x23|^2 - x2|x13|^2 - x3|x12|^2 + 2<x12.x23, x13>
///   + (|x23|^2 |x13|^2 - |x13.x23^flat|^2) / x3.
/// The last term vanishes identically for special algebras.
double rank3_squared_determinant(const NilAlgebra& algebra, const HermMatrix& x);

/// pi^2: p_1 for rank 2, the squared determinant above for rank 3.
double g_determinant_sq(const ConeDescriptor& cone, const HermMatrix& x);

/// All p_i(X) > 0. Throws UnsupportedError on indefinite algebras.
bool membership(const ConeDescriptor& cone, const HermMatrix& x);

struct GroupCoordinates {
  TriangularMatrix element;
  /// |x_i - x'_i| per diagonal entry, then max-norm of x_ij - x'_ij per block,
  /// where X' = element . element*.
  std::vector<double> residuals;
  /// max(residuals) / max |coordinate of X|.
  double max_relative_residual = 0.0;
};

/// Smallest radicand accepted by group_coordinates.
inline constexpr double kMinRadicand = 1e-14;

/// The unique A in G with A . A* = X, solved back to front. Throws DomainError
/// when a radicand drops below kMinRadicand.
GroupCoordinates group_coordinates(const ConeDescriptor& cone, const HermMatrix& x);

/// log of prod_i p_i^{n_i - n_{i-1} - ... - n_1}. Throws DomainError outside the cone.
double log_characteristic_function(const ConeDescriptor& cone, const HermMatrix& x);
double characteristic_function(const ConeDescriptor& cone, const HermMatrix& x);

/// d'(X) = d(X) + (|s0|^2 |s1|^2 - |s1 . s0^flat|^2) / x1 with
/// s1 . s0^flat = clifford_bilinear(s1, s0). Special rank 3 only; x1 != 0.
double d_prime(const ConeDescriptor& cone, const HermMatrix& x);

/// The same quantity via the dual algebra: squared determinant of t'(X).
double d_prime_via_dual(const ConeDescriptor& cone, const HermMatrix& x);

/// X lies in the dual cone {A* . A}: t'(X) in the cone of the dual algebra.
bool dual_membership(const ConeDescriptor& cone, const HermMatrix& x);

}  // namespace vinberg
