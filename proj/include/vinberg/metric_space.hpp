#pragma once

#include "vinberg/types.hpp"

namespace vinberg {

/// Counts of positive and negative directions of an inner product.
struct Signature {
  int positive = 0;
  int negative = 0;

  static Signature euclidean(int dim) { return {dim, 0}; }
  int dim() const { return positive + negative; }
  bool is_euclidean() const { return negative == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A finite-dimensional real vector space with a non-degenerate inner product,
/// in a fixed canonical basis. Vectors are coordinate arrays in that basis.
class MetricSpace {
 public:
  /// Validates symmetry, non-degeneracy and that the eigenvalue signs of
  /// `gram` match `declared`. Throws DimensionError otherwise.
  MetricSpace(Mat gram, Signature declared);

  /// Identity Gram matrix.
  static MetricSpace euclidean(int dim);
  /// diag(+1 x p, -1 x q).
  static MetricSpace pseudo_euclidean(Signature signature);

  int dim() const { return static_cast<int>(gram_.rows()); }
  Signature signature() const { return signature_; }
  bool is_euclidean() const { return signature_.is_euclidean(); }
  const Mat& gram() const { return gram_; }

  double inner(const Vec& a, const Vec& b) const;
  double norm_sq(const Vec& a) const { return inner(a, a); }
  /// G a, the covector of `a`.
  Vec lower(const Vec& a) const;
  /// G^{-1} a.
  Vec raise(const Vec& a) const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.signature_ == b.signature_ && a.gram_ == b.gram_;
  }

 private:
  Mat gram_;
  Mat gram_inverse_;
  Signature signature_;
  bool diagonal_ = false;
};

}  // namespace vinberg
