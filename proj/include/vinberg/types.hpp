#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vinberg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Input shapes do not match the algebra or module they are used with.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point lies outside the domain of an operation (outside the cone, on a pole, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The configuration is valid but outside what an operation supports,
/// e.g. positivity questions asked of an indefinite algebra.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vinberg
