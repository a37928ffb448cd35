#include "vinberg/metric_space.hpp"

#include <cmath>
#include <string>

namespace vinberg {

namespace {
constexpr double kSymmetryTol = 1e-12;
constexpr double kEigenTol = 1e-12;
}  // namespace

MetricSpace::MetricSpace(Mat gram, Signature declared) : gram_(std::move(gram)), signature_(declared) {
  if (gram_.rows() != gram_.cols() || gram_.rows() < 1) {
    throw DimensionError("gram matrix must be square and non-empty");
  }
  if (declared.positive < 0 || declared.negative < 0 || declared.dim() != gram_.rows()) {
    throw DimensionError("declared signature does not add up to the dimension");
  }
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw DimensionError("gram matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram_, Eigen::EigenvaluesOnly);
  int pos = 0;
  int neg = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lambda = eig.eigenvalues()(i);
    if (lambda > kEigenTol) {
      ++pos;
    } else if (lambda < -kEigenTol) {
      ++neg;
    } else {
      throw DimensionError("gram matrix is degenerate");
    }
  }
  if (pos != declared.positive || neg != declared.negative) {
    throw DimensionError("gram signature (" + std::to_string(pos) + "," + std::to_string(neg) +
                         ") differs from the declared one");
  }
  diagonal_ = gram_.isDiagonal(0.0);
  gram_inverse_ = diagonal_ ? Mat(gram_.diagonal().cwiseInverse().asDiagonal()) : Mat(gram_.inverse());
}

MetricSpace MetricSpace::euclidean(int dim) {
  if (dim < 1) throw DimensionError("metric space dimension must be positive");
  return MetricSpace(Mat::Identity(dim, dim), Signature::euclidean(dim));
}

MetricSpace MetricSpace::pseudo_euclidean(Signature signature) {
  if (signature.dim() < 1) throw DimensionError("metric space dimension must be positive");
  Vec diag(signature.dim());
  diag.head(signature.positive).setOnes();
  diag.tail(signature.negative).setConstant(-1.0);
  return MetricSpace(Mat(diag.asDiagonal()), signature);
}

double MetricSpace::inner(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionError("vector size does not match metric space");
  if (diagonal_) return (a.array() * gram_.diagonal().array() * b.array()).sum();
  return a.dot(gram_ * b);
}

Vec MetricSpace::lower(const Vec& a) const {
  if (a.size() != dim()) throw DimensionError("vector size does not match metric space");
  if (diagonal_) return gram_.diagonal().cwiseProduct(a);
  return gram_ * a;
}

Vec MetricSpace::raise(const Vec& a) const {
  if (a.size() != dim()) throw DimensionError("vector size does not match metric space");
  if (diagonal_) return gram_inverse_.diagonal().cwiseProduct(a);
  return gram_inverse_ * a;
}

}  // namespace vinberg
