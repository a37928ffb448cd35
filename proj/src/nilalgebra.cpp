#include "vinberg/nilalgebra.hpp"

#include <string>

namespace vinberg {

NilAlgebra::NilAlgebra(int rank, std::vector<MetricSpace> spaces, ProductKind kind,
                       std::shared_ptr<const CliffordModule> clifford)
    : rank_(rank), spaces_(std::move(spaces)), kind_(kind), clifford_(std::move(clifford)) {
  if (rank_ != 2 && rank_ != 3) throw UnsupportedError("only rank 2 and rank 3 algebras are supported");
  if (static_cast<int>(spaces_.size()) != rank_ * (rank_ - 1) / 2) {
    throw DimensionError("wrong number of blocks for rank " + std::to_string(rank_));
  }
  if (rank_ == 2) {
    if (kind_ != ProductKind::none) throw DimensionError("rank-2 algebras have no products");
    return;
  }
  if (kind_ == ProductKind::none || !clifford_) throw DimensionError("rank-3 algebra needs a Clifford product");
  const CliffordModule& m = *clifford_;
  const MetricSpace& n12 = spaces_[0];
  const MetricSpace& n13 = spaces_[1];
  const MetricSpace& n23 = spaces_[2];
  const bool spinor_first = kind_ == ProductKind::spinor_vector;
  const MetricSpace& expect12 = spinor_first ? m.s0_space() : m.v_space();
  const MetricSpace& expect23 = spinor_first ? m.v_space() : m.s0_space();
  if (!(n12 == expect12) || !(n23 == expect23) || !(n13 == m.s1_space())) {
    throw DimensionError("block spaces do not match the Clifford module");
  }
}

int NilAlgebra::slot(int i, int j, int rank) {
  if (i < 1 || j <= i || j > rank) throw DimensionError("block index must satisfy 1 <= i < j <= rank");
  // (1,2) -> 0, (1,3) -> 1, (2,3) -> 2
  int index = 0;
  for (int r = 1; r < i; ++r) index += rank - r;
  return index + (j - i - 1);
}

int NilAlgebra::herm_dim() const {
  int dim = rank_;
  for (const MetricSpace& s : spaces_) dim += s.dim();
  return dim;
}

bool NilAlgebra::is_euclidean() const {
  for (const MetricSpace& s : spaces_) {
    if (!s.is_euclidean()) return false;
  }
  return true;
}

void NilAlgebra::require_rank3(const char* op) const {
  if (rank_ != 3) throw DimensionError(std::string(op) + " needs a rank-3 algebra");
}

Vec NilAlgebra::product(const Vec& x12, const Vec& x23) const {
  require_rank3("product");
  if (kind_ == ProductKind::spinor_vector) return clifford_->mult(x23, x12);
  return clifford_->mult(x12, x23);
}

Vec NilAlgebra::left_adjoint(const Vec& x13, const Vec& x23) const {
  require_rank3("left_adjoint");
  if (kind_ == ProductKind::spinor_vector) return clifford_->adjoint(x23, x13);
  return clifford_->bilinear(x13, x23);
}

Vec NilAlgebra::right_adjoint(const Vec& x12, const Vec& x13) const {
  require_rank3("right_adjoint");
  if (kind_ == ProductKind::spinor_vector) return clifford_->bilinear(x13, x12);
  return clifford_->adjoint(x12, x13);
}

bool NilAlgebra::same_structure(const NilAlgebra& other) const {
  if (this == &other) return true;
  if (rank_ != other.rank_ || kind_ != other.kind_ || spaces_.size() != other.spaces_.size()) return false;
  for (std::size_t s = 0; s < spaces_.size(); ++s) {
    if (!(spaces_[s] == other.spaces_[s])) return false;
  }
  if (clifford_ == other.clifford_) return true;
  return clifford_ && other.clifford_ && *clifford_ == *other.clifford_;
}

AlgebraRef rank2_algebra(MetricSpace w_space) {
  std::vector<MetricSpace> spaces{std::move(w_space)};
  return std::make_shared<const NilAlgebra>(2, std::move(spaces), ProductKind::none, nullptr);
}

AlgebraRef rank3_special(CliffordModule module) {
  if (module.dim_s0() != module.dim_s1()) throw DimensionError("special rank-3 algebras need dim S0 = dim S1");
  auto m = std::make_shared<const CliffordModule>(std::move(module));
  std::vector<MetricSpace> spaces{m->s0_space(), m->s1_space(), m->v_space()};
  return std::make_shared<const NilAlgebra>(3, std::move(spaces), ProductKind::spinor_vector, m);
}

AlgebraRef dual_algebra(const NilAlgebra& algebra) {
  if (algebra.rank() == 2) {
    return std::make_shared<const NilAlgebra>(2, std::vector<MetricSpace>{algebra.space(1, 2)}, ProductKind::none,
                                              nullptr);
  }
  std::vector<MetricSpace> spaces{algebra.space(2, 3), algebra.space(1, 3), algebra.space(1, 2)};
  const ProductKind kind =
      algebra.product_kind() == ProductKind::spinor_vector ? ProductKind::vector_spinor : ProductKind::spinor_vector;
  return std::make_shared<const NilAlgebra>(3, std::move(spaces), kind, algebra.clifford());
}

// ---------------------------------------------------------------------------

BlockMatrix::BlockMatrix(AlgebraRef algebra, Vec diag, std::vector<Vec> blocks)
    : algebra_(std::move(algebra)), diag_(std::move(diag)), blocks_(std::move(blocks)) {
  if (!algebra_) throw DimensionError("matrix needs an algebra");
  if (diag_.size() != algebra_->rank()) throw DimensionError("diagonal length must equal the rank");
  if (static_cast<int>(blocks_.size()) != algebra_->block_count()) throw DimensionError("wrong number of blocks");
  for (int s = 0; s < algebra_->block_count(); ++s) {
    if (blocks_[static_cast<std::size_t>(s)].size() != algebra_->space_at(s).dim()) {
      throw DimensionError("block vector has the wrong dimension");
    }
  }
}

BlockMatrix::BlockMatrix(AlgebraRef algebra, const Vec& flat) : algebra_(std::move(algebra)) {
  if (!algebra_) throw DimensionError("matrix needs an algebra");
  if (flat.size() != algebra_->herm_dim()) throw DimensionError("flat coordinate vector has the wrong length");
  const int m = algebra_->rank();
  diag_ = flat.head(m);
  Eigen::Index offset = m;
  for (int s = 0; s < algebra_->block_count(); ++s) {
    const int d = algebra_->space_at(s).dim();
    blocks_.push_back(flat.segment(offset, d));
    offset += d;
  }
}

Vec BlockMatrix::flatten() const {
  Vec flat(algebra_->herm_dim());
  flat.head(diag_.size()) = diag_;
  Eigen::Index offset = diag_.size();
  for (const Vec& b : blocks_) {
    flat.segment(offset, b.size()) = b;
    offset += b.size();
  }
  return flat;
}

double BlockMatrix::max_abs() const {
  double m = diag_.cwiseAbs().maxCoeff();
  for (const Vec& b : blocks_) {
    if (b.size() > 0) m = std::max(m, b.cwiseAbs().maxCoeff());
  }
  return m;
}

namespace {

std::vector<Vec> zero_blocks(const NilAlgebra& algebra) {
  std::vector<Vec> blocks;
  for (int s = 0; s < algebra.block_count(); ++s) blocks.push_back(Vec::Zero(algebra.space_at(s).dim()));
  return blocks;
}

void require_same_algebra(const BlockMatrix& a, const BlockMatrix& b) {
  if (!a.algebra().same_structure(b.algebra())) throw DimensionError("matrices belong to different algebras");
}

void require_group_element(const TriangularMatrix& a) {
  if (!a.is_group_element()) throw DomainError("triangular matrix is not in the Vinberg group (diagonal not positive)");
}

std::pair<int, int> reflect(int i, int j, int m) { return {m + 1 - j, m + 1 - i}; }

void require_dual_layout(const NilAlgebra& algebra, const NilAlgebra& dual) {
  const int m = algebra.rank();
  if (dual.rank() != m) throw DimensionError("anti_transpose: dual algebra rank differs");
  if (m == 3 && dual.product_kind() == algebra.product_kind()) {
    throw DimensionError("anti_transpose: target has the same product order, not the dual one");
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const auto [ri, rj] = reflect(i, j, m);
      if (!(dual.space(ri, rj) == algebra.space(i, j))) {
        throw DimensionError("anti_transpose: target is not the dual algebra");
      }
    }
  }
}

}  // namespace

HermMatrix HermMatrix::identity(AlgebraRef algebra) {
  const int m = algebra->rank();
  auto blocks = zero_blocks(*algebra);
  return HermMatrix(std::move(algebra), Vec::Ones(m), std::move(blocks));
}

HermMatrix HermMatrix::zero(AlgebraRef algebra) {
  const int m = algebra->rank();
  auto blocks = zero_blocks(*algebra);
  return HermMatrix(std::move(algebra), Vec::Zero(m), std::move(blocks));
}

HermMatrix HermMatrix::diagonal_matrix(AlgebraRef algebra, const Vec& diag) {
  auto blocks = zero_blocks(*algebra);
  return HermMatrix(std::move(algebra), diag, std::move(blocks));
}

HermMatrix HermMatrix::scaled(double factor) const {
  std::vector<Vec> blocks;
  for (const Vec& b : blocks_) blocks.push_back(factor * b);
  return HermMatrix(algebra_, factor * diag_, std::move(blocks));
}

TriangularMatrix TriangularMatrix::identity(AlgebraRef algebra) {
  const int m = algebra->rank();
  auto blocks = zero_blocks(*algebra);
  return TriangularMatrix(std::move(algebra), Vec::Ones(m), std::move(blocks));
}

TriangularMatrix triangular_product(const TriangularMatrix& a, const TriangularMatrix& b) {
  require_same_algebra(a, b);
  const NilAlgebra& alg = a.algebra();
  TriangularMatrix out = TriangularMatrix::identity(a.algebra_ref());
  for (int i = 1; i <= alg.rank(); ++i) out.diag(i) = a.diag(i) * b.diag(i);
  for (int i = 1; i <= alg.rank(); ++i) {
    for (int j = i + 1; j <= alg.rank(); ++j) {
      Vec entry = a.diag(i) * b.block(i, j) + b.diag(j) * a.block(i, j);
      for (int k = i + 1; k < j; ++k) entry += alg.product(a.block(i, k), b.block(k, j));
      out.block(i, j) = std::move(entry);
    }
  }
  return out;
}

HermMatrix herm_from_triangular(const TriangularMatrix& a) {
  require_group_element(a);
  const NilAlgebra& alg = a.algebra();
  HermMatrix x = HermMatrix::zero(a.algebra_ref());
  if (alg.rank() == 2) {
    const Vec& a12 = a.block(1, 2);
    x.diag(2) = a.diag(2) * a.diag(2);
    x.block(1, 2) = a.diag(2) * a12;
    x.diag(1) = a.diag(1) * a.diag(1) + alg.space(1, 2).norm_sq(a12);
    return x;
  }
  const Vec& a12 = a.block(1, 2);
  const Vec& a13 = a.block(1, 3);
  const Vec& a23 = a.block(2, 3);
  x.diag(3) = a.diag(3) * a.diag(3);
  x.block(2, 3) = a.diag(3) * a23;
  x.block(1, 3) = a.diag(3) * a13;
  x.diag(2) = a.diag(2) * a.diag(2) + alg.space(2, 3).norm_sq(a23);
  x.block(1, 2) = a.diag(2) * a12 + alg.left_adjoint(a13, a23);
  x.diag(1) = a.diag(1) * a.diag(1) + alg.space(1, 2).norm_sq(a12) + alg.space(1, 3).norm_sq(a13);
  return x;
}

HermMatrix dual_herm_from_triangular(const TriangularMatrix& a) {
  require_group_element(a);
  const NilAlgebra& alg = a.algebra();
  HermMatrix y = HermMatrix::zero(a.algebra_ref());
  if (alg.rank() == 2) {
    const Vec& a12 = a.block(1, 2);
    y.diag(1) = a.diag(1) * a.diag(1);
    y.block(1, 2) = a.diag(1) * a12;
    y.diag(2) = alg.space(1, 2).norm_sq(a12) + a.diag(2) * a.diag(2);
    return y;
  }
  const Vec& a12 = a.block(1, 2);
  const Vec& a13 = a.block(1, 3);
  const Vec& a23 = a.block(2, 3);
  y.diag(1) = a.diag(1) * a.diag(1);
  y.block(1, 2) = a.diag(1) * a12;
  y.block(1, 3) = a.diag(1) * a13;
  y.diag(2) = alg.space(1, 2).norm_sq(a12) + a.diag(2) * a.diag(2);
  y.block(2, 3) = alg.right_adjoint(a12, a13) + a.diag(2) * a23;
  y.diag(3) = alg.space(1, 3).norm_sq(a13) + alg.space(2, 3).norm_sq(a23) + a.diag(3) * a.diag(3);
  return y;
}

HermMatrix anti_transpose(const HermMatrix& x, const AlgebraRef& dual) {
  require_dual_layout(x.algebra(), *dual);
  const int m = x.rank();
  HermMatrix out = HermMatrix::zero(dual);
  for (int i = 1; i <= m; ++i) out.diag(m + 1 - i) = x.diag(i);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const auto [ri, rj] = reflect(i, j, m);
      out.block(ri, rj) = x.block(i, j);
    }
  }
  return out;
}

TriangularMatrix anti_transpose(const TriangularMatrix& a, const AlgebraRef& dual) {
  require_dual_layout(a.algebra(), *dual);
  const int m = a.rank();
  TriangularMatrix out = TriangularMatrix::identity(dual);
  for (int i = 1; i <= m; ++i) out.diag(m + 1 - i) = a.diag(i);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const auto [ri, rj] = reflect(i, j, m);
      out.block(ri, rj) = a.block(i, j);
    }
  }
  return out;
}

double herm_inner(const HermMatrix& x, const HermMatrix& y) {
  require_same_algebra(x, y);
  double total = x.diagonal().dot(y.diagonal());
  for (int s = 0; s < x.algebra().block_count(); ++s) {
    total += 2.0 * x.algebra().space_at(s).inner(x.blocks()[static_cast<std::size_t>(s)],
                                                 y.blocks()[static_cast<std::size_t>(s)]);
  }
  return total;
}

}  // namespace vinberg
