#pragma once

#include <cstdint>
#include <vector>

#include "vinberg/metric_space.hpp"

namespace vinberg {

using IntMat = Eigen::MatrixXi;

/// A Z2-graded module S = S0 + S1 over Cl(V, g_V), reduced to the odd action
/// mu: V x S0 -> S1. One gamma map S0 -> S1 per canonical basis vector of V;
/// mu_v(s) = sum_a v^a Gamma_a s.
///
/// Gamma entries are integers. The constructor only checks shapes, so that a
/// deliberately broken module can still be built and measured by
/// verify_isometry().
class CliffordModule {
 public:
  CliffordModule(MetricSpace v_space, MetricSpace s0_space, MetricSpace s1_space, std::vector<IntMat> gammas,
                 int multiplicity);

  const MetricSpace& v_space() const { return v_space_; }
  const MetricSpace& s0_space() const { return s0_space_; }
  const MetricSpace& s1_space() const { return s1_space_; }
  int dim_v() const { return v_space_.dim(); }
  int dim_s0() const { return s0_space_.dim(); }
  int dim_s1() const { return s1_space_.dim(); }
  int multiplicity() const { return multiplicity_; }
  Signature signature() const { return v_space_.signature(); }
  /// V, S0 and S1 all positive definite.
  bool is_euclidean() const;

  const std::vector<IntMat>& gammas() const { return gammas_; }
  const Mat& gamma(int a) const { return gammas_real_.at(static_cast<std::size_t>(a)); }

  /// Matrix of mu_v : S0 -> S1.
  Mat action(const Vec& v) const;
  /// mu_v(s0).
  Vec mult(const Vec& v, const Vec& s0) const;
  /// The unique b in V with <b, u>_V = <s1, mu_u(s0)>_{S1} for all u in V.
  Vec bilinear(const Vec& s1, const Vec& s0) const;
  /// The unique r in S0 with <r, u>_{S0} = <s1, mu_w(u)>_{S1} for all u in S0
  /// (the metric adjoint mu_w^* applied to s1).
  Vec adjoint(const Vec& w, const Vec& s1) const;

  friend bool operator==(const CliffordModule& a, const CliffordModule& b) {
    return a.v_space_ == b.v_space_ && a.s0_space_ == b.s0_space_ && a.s1_space_ == b.s1_space_ &&
           a.gammas_ == b.gammas_ && a.multiplicity_ == b.multiplicity_;
  }

 private:
  MetricSpace v_space_;
  MetricSpace s0_space_;
  MetricSpace s1_space_;
  std::vector<IntMat> gammas_;
  std::vector<Mat> gammas_real_;
  int multiplicity_;
};

/// Largest dim_v supported by build_clifford_module.
inline constexpr int kMaxCliffordDim = 16;

/// Dimension of the smallest real space R^k carrying dim_v orthogonal
/// multiplications, i.e. the least k with Hurwitz-Radon number rho(k) >= dim_v.
int irreducible_spinor_dim(int dim_v);

/// Builds the canonical module: Gamma_1 = Id and Gamma_{a+1} = J_a for
/// dim_v - 1 anticommuting skew complex structures, each a tensor product of
/// 2x2 matrices from {I, sigma_x, sigma_z, [[0,1],[-1,0]]}. Reducible modules
/// are `multiplicity` block copies. Indefinite signatures double the Euclidean
/// module of the same dimension and give S0, S1 split metrics.
CliffordModule build_clifford_module(int dim_v, Signature signature, int multiplicity);

struct IsometryReport {
  double max_deviation = 0.0;
  int samples = 0;
};

/// Worst |<mu_v s, mu_v s> - <v,v><s,s>| over n_samples pairs drawn uniformly
/// from [-1,1] coordinates with a seeded generator.
IsometryReport verify_isometry(const CliffordModule& module, int n_samples, std::uint64_t seed);

/// Max entry of |mu_a^* mu_b + mu_b^* mu_a - 2 g_V(e_a, e_b) Id| over all basis pairs.
double clifford_relation_residual(const CliffordModule& module);

/// Max |<bilinear(s1,s0), e_a>_V - <s1, Gamma_a s0>_{S1}| over sampled inputs and all a.
double adjunction_residual(const CliffordModule& module, int n_samples, std::uint64_t seed);

/// Copy of `module` with one gamma entry shifted by `delta`; negative control.
CliffordModule corrupt_gamma(const CliffordModule& module, int a, int row, int col, int delta = 1);

}  // namespace vinberg
