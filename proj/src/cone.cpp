#include "vinberg/cone.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace vinberg {

Rational::Rational(long n, long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ConeDescriptor::ConeDescriptor(AlgebraRef algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw DimensionError("cone needs an algebra");
  dual_ = dual_algebra(*algebra_);
  const int m = algebra_->rank();
  for (int i = 1; i <= m; ++i) {
    long twice = 2;
    for (int s = 1; s <= m; ++s) {
      if (s == i) continue;
      twice += s > i ? algebra_->block_dim(i, s) : algebra_->block_dim(s, i);
    }
    exponents_.emplace_back(twice, 2);
  }
  Rational running;
  for (int i = 0; i < m; ++i) {
    chi_exponents_.push_back(exponents_[static_cast<std::size_t>(i)] - running);
    running = running + exponents_[static_cast<std::size_t>(i)];
  }
}

Rational ConeDescriptor::chi_degree() const {
  Rational total;
  const int m = rank();
  for (int i = 1; i <= m; ++i) {
    total = total + Rational(1L << (m - i)) * chi_exponents_[static_cast<std::size_t>(i - 1)];
  }
  return total;
}

namespace {

void require_algebra(const ConeDescriptor& cone, const HermMatrix& x) {
  if (!cone.algebra().same_structure(x.algebra())) throw DimensionError("matrix is not over the cone's algebra");
}

void require_special(const ConeDescriptor& cone, const char* op) {
  if (!cone.is_special_rank3()) throw DimensionError(std::string(op) + " is defined on special rank-3 cones only");
}

void require_euclidean(const NilAlgebra& algebra, const char* op) {
  if (!algebra.is_euclidean()) throw UnsupportedError(std::string(op) + " needs a Euclidean algebra");
}

// p_1 of a rank-3 algebra, without the division in the squared determinant.
double rank3_p1(const NilAlgebra& alg, const HermMatrix& x) {
  const double x1 = x.diag(1);
  const double x2 = x.diag(2);
  const double x3 = x.diag(3);
  const Vec& x12 = x.block(1, 2);
  const Vec& x13 = x.block(1, 3);
  const Vec& x23 = x.block(2, 3);
  const double n12 = alg.space(1, 2).norm_sq(x12);
  const double n13 = alg.space(1, 3).norm_sq(x13);
  const double n23 = alg.space(2, 3).norm_sq(x23);
  const double cross = alg.space(1, 3).inner(alg.product(x12, x23), x13);
  const double poly = x1 * x2 * x3 - x1 * n23 - x2 * n13 - x3 * n12 + 2.0 * cross;
  const double correction = n23 * n13 - alg.space(1, 2).norm_sq(alg.left_adjoint(x13, x23));
  return x3 * poly + correction;
}

bool positive_p(const std::vector<double>& p) {
  for (double v : p) {
    if (!(v > 0.0)) return false;
  }
  return true;
}

std::vector<double> p_of(const NilAlgebra& alg, const HermMatrix& x) {
  if (alg.rank() == 2) {
    const double p2 = x.diag(2);
    const double p1 = x.diag(1) * x.diag(2) - alg.space(1, 2).norm_sq(x.block(1, 2));
    return {p1, p2};
  }
  const double p3 = x.diag(3);
  const double p2 = x.diag(3) * x.diag(2) - alg.space(2, 3).norm_sq(x.block(2, 3));
  return {rank3_p1(alg, x), p2, p3};
}

}  // namespace

std::vector<double> p_polynomials(const ConeDescriptor& cone, const HermMatrix& x) {
  require_algebra(cone, x);
  if (cone.is_special_rank3()) {
    return {x.diag(3) * d_cubic(cone, x), x.diag(3) * x.diag(2) - cone.algebra().space(2, 3).norm_sq(x.block(2, 3)),
            x.diag(3)};
  }
  return p_of(cone.algebra(), x);
}

double d_cubic(const ConeDescriptor& cone, const HermMatrix& x) {
  require_special(cone, "d_cubic");
  require_algebra(cone, x);
  const NilAlgebra& alg = cone.algebra();
  const CliffordModule& mod = *alg.clifford();
  const double x1 = x.diag(1);
  const double x2 = x.diag(2);
  const double x3 = x.diag(3);
  const Vec& s0 = x.block(1, 2);
  const Vec& s1 = x.block(1, 3);
  const Vec& v = x.block(2, 3);
  return x1 * x2 * x3 - x3 * mod.s0_space().norm_sq(s0) - x2 * mod.s1_space().norm_sq(s1) -
         x1 * mod.v_space().norm_sq(v) + 2.0 * mod.s1_space().inner(mod.mult(v, s0), s1);
}

double rank3_squared_determinant(const NilAlgebra& algebra, const HermMatrix& x) {
  if (algebra.rank() != 3) throw DimensionError("rank3_squared_determinant needs rank 3");
  if (!algebra.same_structure(x.algebra())) throw DimensionError("matrix is not over the given algebra");
  if (x.diag(3) == 0.0) throw DomainError("squared determinant has a pole at x3 = 0");
  return rank3_p1(algebra, x) / x.diag(3);
}

double g_determinant_sq(const ConeDescriptor& cone, const HermMatrix& x) {
  require_algebra(cone, x);
  if (cone.rank() == 2) return p_of(cone.algebra(), x)[0];
  if (cone.is_special_rank3()) return d_cubic(cone, x);
  return rank3_squared_determinant(cone.algebra(), x);
}

bool membership(const ConeDescriptor& cone, const HermMatrix& x) {
  require_euclidean(cone.algebra(), "membership");
  return positive_p(p_polynomials(cone, x));
}

GroupCoordinates group_coordinates(const ConeDescriptor& cone, const HermMatrix& x) {
  require_algebra(cone, x);
  const NilAlgebra& alg = cone.algebra();
  auto checked_sqrt = [](double radicand, const char* which) {
    if (!(radicand >= kMinRadicand)) {
      throw DomainError(std::string("point is outside the cone: radicand for ") + which + " is " +
                        std::to_string(radicand));
    }
    return std::sqrt(radicand);
  };

  TriangularMatrix a = TriangularMatrix::identity(cone.algebra_ref());
  if (alg.rank() == 2) {
    a.diag(2) = checked_sqrt(x.diag(2), "a22");
    a.block(1, 2) = x.block(1, 2) / a.diag(2);
    a.diag(1) = checked_sqrt(x.diag(1) - alg.space(1, 2).norm_sq(a.block(1, 2)), "a11");
  } else {
    a.diag(3) = checked_sqrt(x.diag(3), "a33");
    a.block(2, 3) = x.block(2, 3) / a.diag(3);
    a.block(1, 3) = x.block(1, 3) / a.diag(3);
    a.diag(2) = checked_sqrt(x.diag(2) - alg.space(2, 3).norm_sq(a.block(2, 3)), "a22");
    a.block(1, 2) = (x.block(1, 2) - alg.left_adjoint(a.block(1, 3), a.block(2, 3))) / a.diag(2);
    a.diag(1) = checked_sqrt(
        x.diag(1) - alg.space(1, 2).norm_sq(a.block(1, 2)) - alg.space(1, 3).norm_sq(a.block(1, 3)), "a11");
  }

  GroupCoordinates out{a, {}, 0.0};
  const HermMatrix back = herm_from_triangular(a);
  for (int i = 1; i <= alg.rank(); ++i) out.residuals.push_back(std::abs(back.diag(i) - x.diag(i)));
  for (int s = 0; s < alg.block_count(); ++s) {
    const Vec diff = back.blocks()[static_cast<std::size_t>(s)] - x.blocks()[static_cast<std::size_t>(s)];
    out.residuals.push_back(diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0);
  }
  const double scale = x.max_abs();
  double worst = 0.0;
  for (double r : out.residuals) worst = std::max(worst, r);
  out.max_relative_residual = scale > 0.0 ? worst / scale : worst;
  return out;
}

double log_characteristic_function(const ConeDescriptor& cone, const HermMatrix& x) {
  require_euclidean(cone.algebra(), "characteristic_function");
  const std::vector<double> p = p_polynomials(cone, x);
  if (!positive_p(p)) throw DomainError("characteristic function is defined inside the cone only");
  double log_chi = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) log_chi += cone.chi_exponents()[i].value() * std::log(p[i]);
  return log_chi;
}

double characteristic_function(const ConeDescriptor& cone, const HermMatrix& x) {
  return std::exp(log_characteristic_function(cone, x));
}

double d_prime(const ConeDescriptor& cone, const HermMatrix& x) {
  require_special(cone, "d_prime");
  require_algebra(cone, x);
  if (x.diag(1) == 0.0) throw DomainError("d' has a pole at x1 = 0");
  const CliffordModule& mod = *cone.algebra().clifford();
  const Vec& s0 = x.block(1, 2);
  const Vec& s1 = x.block(1, 3);
  const double correction = mod.s0_space().norm_sq(s0) * mod.s1_space().norm_sq(s1) -
                            mod.v_space().norm_sq(mod.bilinear(s1, s0));
  return d_cubic(cone, x) + correction / x.diag(1);
}

double d_prime_via_dual(const ConeDescriptor& cone, const HermMatrix& x) {
  require_special(cone, "d_prime_via_dual");
  require_algebra(cone, x);
  const HermMatrix y = anti_transpose(x, cone.dual_ref());
  return rank3_squared_determinant(*cone.dual_ref(), y);
}

bool dual_membership(const ConeDescriptor& cone, const HermMatrix& x) {
  require_euclidean(cone.algebra(), "dual_membership");
  require_algebra(cone, x);
  const HermMatrix y = anti_transpose(x, cone.dual_ref());
  return positive_p(p_of(*cone.dual_ref(), y));
}

}  // namespace vinberg
