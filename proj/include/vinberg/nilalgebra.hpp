#pragma once

#include <memory>
#include <vector>

#include "vinberg/clifford.hpp"

namespace vinberg {

/// How the single rank-3 product N12 x N23 -> N13 is realized.
enum class ProductKind {
  none,           ///< rank 2, no composable pairs
  spinor_vector,  ///< N12 = S0, N23 = V: x12 . x23 = mu_{x23}(x12)
  vector_spinor,  ///< N12 = V, N23 = S0: x12 . x23 = mu_{x12}(x23)  (the dual algebra)
};

/// Nil-algebra of rank 2 or 3: metric blocks N_ij (i < j) and the isometric
/// products between composable blocks. Blocks are addressed 1-based, (i, j).
class NilAlgebra {
 public:
  /// `spaces` lists N_ij in lexicographic (i, j) order: (1,2) for rank 2,
  /// (1,2), (1,3), (2,3) for rank 3.
  NilAlgebra(int rank, std::vector<MetricSpace> spaces, ProductKind kind,
             std::shared_ptr<const CliffordModule> clifford);

  int rank() const { return rank_; }
  int block_count() const { return static_cast<int>(spaces_.size()); }
  /// Position of block (i, j) in lexicographic order.
  static int slot(int i, int j, int rank);

  const MetricSpace& space(int i, int j) const { return spaces_[static_cast<std::size_t>(slot(i, j, rank_))]; }
  const MetricSpace& space_at(int slot_index) const { return spaces_.at(static_cast<std::size_t>(slot_index)); }
  int block_dim(int i, int j) const { return space(i, j).dim(); }
  /// m + sum of block dimensions.
  int herm_dim() const;
  bool is_euclidean() const;

  ProductKind product_kind() const { return kind_; }
  /// Backing module of a rank-3 algebra, null for rank 2.
  const std::shared_ptr<const CliffordModule>& clifford() const { return clifford_; }

  /// x12 . x23 in N13.
  Vec product(const Vec& x12, const Vec& x23) const;
  /// x13 . x23^flat in N12: <x13 . x23^flat, p> = <x13, p . x23> for all p in N12.
  Vec left_adjoint(const Vec& x13, const Vec& x23) const;
  /// x12^flat . x13 in N23: <x12^flat . x13, q> = <x13, x12 . q> for all q in N23.
  Vec right_adjoint(const Vec& x12, const Vec& x13) const;

  /// Same rank, product kind, block metrics and module.
  bool same_structure(const NilAlgebra& other) const;

 private:
  void require_rank3(const char* op) const;

  int rank_;
  std::vector<MetricSpace> spaces_;
  ProductKind kind_;
  std::shared_ptr<const CliffordModule> clifford_;
};

using AlgebraRef = std::shared_ptr<const NilAlgebra>;

/// N12 = W.
AlgebraRef rank2_algebra(MetricSpace w_space);
/// N12 = S0, N13 = S1, N23 = V with product (s0, v) -> mu_v(s0).
AlgebraRef rank3_special(CliffordModule module);
/// Anti-transposed algebra: N'_ij = N_{m+1-j, m+1-i}, products in reversed order.
AlgebraRef dual_algebra(const NilAlgebra& algebra);

/// Diagonal plus upper blocks over an algebra. Shared storage for the
/// Hermitian and triangular views; not used directly.
class BlockMatrix {
 public:
  const NilAlgebra& algebra() const { return *algebra_; }
  const AlgebraRef& algebra_ref() const { return algebra_; }
  int rank() const { return algebra_->rank(); }

  /// 1-based diagonal entry.
  double diag(int i) const { return diag_(i - 1); }
  double& diag(int i) { return diag_(i - 1); }
  const Vec& diagonal() const { return diag_; }
  const Vec& block(int i, int j) const { return blocks_[static_cast<std::size_t>(NilAlgebra::slot(i, j, rank()))]; }
  Vec& block(int i, int j) { return blocks_[static_cast<std::size_t>(NilAlgebra::slot(i, j, rank()))]; }
  const std::vector<Vec>& blocks() const { return blocks_; }

  /// Diagonal entries followed by the blocks in slot order.
  Vec flatten() const;
  int flat_size() const { return algebra_->herm_dim(); }
  /// Largest absolute coordinate.
  double max_abs() const;

 protected:
  BlockMatrix(AlgebraRef algebra, Vec diag, std::vector<Vec> blocks);
  BlockMatrix(AlgebraRef algebra, const Vec& flat);

  AlgebraRef algebra_;
  Vec diag_;
  std::vector<Vec> blocks_;
};

/// A point of Herm(N). Only the upper blocks are stored; the lower entries
/// are their flats.
class HermMatrix : public BlockMatrix {
 public:
  HermMatrix(AlgebraRef algebra, Vec diag, std::vector<Vec> blocks)
      : BlockMatrix(std::move(algebra), std::move(diag), std::move(blocks)) {}
  static HermMatrix from_flat(AlgebraRef algebra, const Vec& flat) { return HermMatrix(std::move(algebra), flat); }
  static HermMatrix identity(AlgebraRef algebra);
  static HermMatrix zero(AlgebraRef algebra);
  /// diag(x_1, ..., x_m).
  static HermMatrix diagonal_matrix(AlgebraRef algebra, const Vec& diag);

  HermMatrix scaled(double factor) const;

 private:
  HermMatrix(AlgebraRef algebra, const Vec& flat) : BlockMatrix(std::move(algebra), flat) {}
};

/// An element of T(N), upper triangular. Elements of the Vinberg group G are
/// those with strictly positive diagonal; products of group elements are
/// formed without that check.
class TriangularMatrix : public BlockMatrix {
 public:
  TriangularMatrix(AlgebraRef algebra, Vec diag, std::vector<Vec> blocks)
      : BlockMatrix(std::move(algebra), std::move(diag), std::move(blocks)) {}
  static TriangularMatrix from_flat(AlgebraRef algebra, const Vec& flat) {
    return TriangularMatrix(std::move(algebra), flat);
  }
  static TriangularMatrix identity(AlgebraRef algebra);

  bool is_group_element() const { return (diag_.array() > 0.0).all(); }

 private:
  TriangularMatrix(AlgebraRef algebra, const Vec& flat) : BlockMatrix(std::move(algebra), flat) {}
};

/// A . B in T(N).
TriangularMatrix triangular_product(const TriangularMatrix& a, const TriangularMatrix& b);
/// X = A . A*, a point of the cone. Throws DomainError unless A is in G.
HermMatrix herm_from_triangular(const TriangularMatrix& a);
/// X = A* . A, a point of the dual cone. Throws DomainError unless A is in G.
HermMatrix dual_herm_from_triangular(const TriangularMatrix& a);

/// Reflection across the anti-diagonal into Herm(dual). `dual` must have the
/// block layout of dual_algebra(X.algebra()).
HermMatrix anti_transpose(const HermMatrix& x, const AlgebraRef& dual);
TriangularMatrix anti_transpose(const TriangularMatrix& a, const AlgebraRef& dual);

/// sum_i x_i y_i + 2 sum_{i<j} <x_ij, y_ij>.
double herm_inner(const HermMatrix& x, const HermMatrix& y);

}  // namespace vinberg
