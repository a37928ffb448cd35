#include "vinberg/clifford.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

namespace vinberg {

namespace {

// Real 2x2 building blocks. kEps is the rotation by 90 degrees, a skew
// complex structure; the other three are symmetric.
enum Factor : int { kId = 0, kSigmaX = 1, kSigmaZ = 2, kEps = 3 };

IntMat factor_matrix(int f) {
  IntMat m(2, 2);
  switch (f) {
    case kId: m << 1, 0, 0, 1; break;
    case kSigmaX: m << 0, 1, 1, 0; break;
    case kSigmaZ: m << 1, 0, 0, -1; break;
    default: m << 0, 1, -1, 0; break;
  }
  return m;
}

IntMat kron(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

using TensorString = std::vector<int>;

TensorString decode(int code, int qubits) {
  TensorString s(static_cast<std::size_t>(qubits));
  for (int i = 0; i < qubits; ++i) {
    s[static_cast<std::size_t>(i)] = code % 4;
    code /= 4;
  }
  return s;
}

bool is_skew(const TensorString& s) { return std::count(s.begin(), s.end(), kEps) % 2 == 1; }

// Two factors from {sx, sz, eps} anticommute pairwise; the identity commutes with all.
bool anticommute(const TensorString& a, const TensorString& b) {
  int flips = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != kId && b[i] != kId && a[i] != b[i]) ++flips;
  }
  return flips % 2 == 1;
}

bool search_structures(const std::vector<TensorString>& candidates, std::size_t start, int needed,
                       std::vector<std::size_t>& chosen) {
  if (static_cast<int>(chosen.size()) == needed) return true;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                [&](std::size_t c) { return anticommute(candidates[i], candidates[c]); });
    if (!ok) continue;
    chosen.push_back(i);
    if (search_structures(candidates, i + 1, needed, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

IntMat string_matrix(const TensorString& s) {
  IntMat m = IntMat::Identity(1, 1);
  for (auto it = s.rbegin(); it != s.rend(); ++it) m = kron(m, factor_matrix(*it));
  return m;
}

// dim_v gamma maps on R^k, k = irreducible_spinor_dim(dim_v), Euclidean metrics.
std::vector<IntMat> euclidean_gammas(int dim_v) {
  const int k = irreducible_spinor_dim(dim_v);
  int qubits = 0;
  while ((1 << qubits) < k) ++qubits;

  std::vector<TensorString> skew;
  for (int code = 0; code < (1 << (2 * qubits)); ++code) {
    TensorString s = decode(code, qubits);
    if (is_skew(s)) skew.push_back(std::move(s));
  }
  std::vector<std::size_t> chosen;
  if (!search_structures(skew, 0, dim_v - 1, chosen)) {
    throw UnsupportedError("no tensor-product complex structures found for dim_v = " + std::to_string(dim_v));
  }
  std::vector<IntMat> gammas;
  gammas.push_back(IntMat::Identity(k, k));
  for (std::size_t c : chosen) gammas.push_back(string_matrix(skew[c]));
  return gammas;
}

IntMat block_copies(const IntMat& m, int copies) {
  IntMat out = IntMat::Zero(m.rows() * copies, m.cols() * copies);
  for (int c = 0; c < copies; ++c) out.block(c * m.rows(), c * m.cols(), m.rows(), m.cols()) = m;
  return out;
}

}  // namespace

CliffordModule::CliffordModule(MetricSpace v_space, MetricSpace s0_space, MetricSpace s1_space,
                               std::vector<IntMat> gammas, int multiplicity)
    : v_space_(std::move(v_space)),
      s0_space_(std::move(s0_space)),
      s1_space_(std::move(s1_space)),
      gammas_(std::move(gammas)),
      multiplicity_(multiplicity) {
  if (multiplicity_ < 1) throw DimensionError("multiplicity must be positive");
  if (static_cast<int>(gammas_.size()) != v_space_.dim()) {
    throw DimensionError("need one gamma map per basis vector of V");
  }
  for (const IntMat& g : gammas_) {
    if (g.rows() != s1_space_.dim() || g.cols() != s0_space_.dim()) {
      throw DimensionError("gamma map shape must be dim S1 x dim S0");
    }
    gammas_real_.push_back(g.cast<double>());
  }
}

bool CliffordModule::is_euclidean() const {
  return v_space_.is_euclidean() && s0_space_.is_euclidean() && s1_space_.is_euclidean();
}

Mat CliffordModule::action(const Vec& v) const {
  if (v.size() != dim_v()) throw DimensionError("vector in V has wrong size");
  Mat m = Mat::Zero(dim_s1(), dim_s0());
  for (int a = 0; a < dim_v(); ++a) {
    if (v(a) != 0.0) m += v(a) * gammas_real_[static_cast<std::size_t>(a)];
  }
  return m;
}

Vec CliffordModule::mult(const Vec& v, const Vec& s0) const {
  if (v.size() != dim_v() || s0.size() != dim_s0()) throw DimensionError("clifford_mult: dimension mismatch");
  Vec out = Vec::Zero(dim_s1());
  for (int a = 0; a < dim_v(); ++a) {
    if (v(a) != 0.0) out.noalias() += v(a) * (gammas_real_[static_cast<std::size_t>(a)] * s0);
  }
  return out;
}

Vec CliffordModule::bilinear(const Vec& s1, const Vec& s0) const {
  if (s1.size() != dim_s1() || s0.size() != dim_s0()) {
    throw DimensionError("clifford_bilinear: dimension mismatch");
  }
  const Vec s1_low = s1_space_.lower(s1);
  Vec covector(dim_v());
  for (int a = 0; a < dim_v(); ++a) covector(a) = s1_low.dot(gammas_real_[static_cast<std::size_t>(a)] * s0);
  return v_space_.raise(covector);
}

Vec CliffordModule::adjoint(const Vec& w, const Vec& s1) const {
  if (w.size() != dim_v() || s1.size() != dim_s1()) throw DimensionError("clifford adjoint: dimension mismatch");
  return s0_space_.raise(action(w).transpose() * s1_space_.lower(s1));
}

int irreducible_spinor_dim(int dim_v) {
  if (dim_v < 1) throw DimensionError("dim_v must be positive");
  // rho(2^(4c+d) * odd) = 8c + 2^d; minimal k is a power of two.
  for (int b = 0;; ++b) {
    const int rho = 8 * (b / 4) + (1 << (b % 4));
    if (rho >= dim_v) return 1 << b;
  }
}

CliffordModule build_clifford_module(int dim_v, Signature signature, int multiplicity) {
  if (dim_v < 1) throw DimensionError("dim_v must be positive");
  if (multiplicity < 1) throw DimensionError("multiplicity must be positive");
  if (signature.positive < 0 || signature.negative < 0 || signature.dim() != dim_v) {
    throw DimensionError("signature must satisfy p + q = dim_v");
  }
  if (dim_v > kMaxCliffordDim) {
    throw UnsupportedError("dim_v > " + std::to_string(kMaxCliffordDim) + " is not supported");
  }

  const std::vector<IntMat> base = euclidean_gammas(dim_v);
  const int k = static_cast<int>(base.front().rows());
  std::vector<IntMat> gammas;
  Signature spinor_signature;

  if (signature.is_euclidean()) {
    for (const IntMat& g : base) gammas.push_back(block_copies(g, multiplicity));
    spinor_signature = Signature::euclidean(k * multiplicity);
  } else {
    // S_i = R^k + R^k with metric diag(I, -I).
    for (int a = 0; a < dim_v; ++a) {
      const IntMat& g = base[static_cast<std::size_t>(a)];
      IntMat doubled = IntMat::Zero(2 * k, 2 * k);
      if (a < signature.positive) {
        doubled.topLeftCorner(k, k) = g;
        doubled.bottomRightCorner(k, k) = g;
      } else {
        doubled.topRightCorner(k, k) = g;
        doubled.bottomLeftCorner(k, k) = -g;
      }
      gammas.push_back(block_copies(doubled, multiplicity));
    }
    spinor_signature = {k * multiplicity, k * multiplicity};
  }

  auto spinor_space = [&] {
    if (spinor_signature.is_euclidean()) return MetricSpace::euclidean(spinor_signature.dim());
    Vec diag(spinor_signature.dim());
    for (int c = 0; c < multiplicity; ++c) {
      diag.segment(2 * k * c, k).setOnes();
      diag.segment(2 * k * c + k, k).setConstant(-1.0);
    }
    return MetricSpace(Mat(diag.asDiagonal()), spinor_signature);
  };

  return CliffordModule(MetricSpace::pseudo_euclidean(signature), spinor_space(), spinor_space(),
                        std::move(gammas), multiplicity);
}

IsometryReport verify_isometry(const CliffordModule& module, int n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  IsometryReport report;
  for (int n = 0; n < n_samples; ++n) {
    Vec v(module.dim_v());
    Vec s(module.dim_s0());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = coord(rng);
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = coord(rng);
    const double lhs = module.s1_space().norm_sq(module.mult(v, s));
    const double rhs = module.v_space().norm_sq(v) * module.s0_space().norm_sq(s);
    report.max_deviation = std::max(report.max_deviation, std::abs(lhs - rhs));
    ++report.samples;
  }
  return report;
}

double clifford_relation_residual(const CliffordModule& module) {
  const Mat g0_inv = module.s0_space().gram().inverse();
  const Mat& g1 = module.s1_space().gram();
  const Mat& gv = module.v_space().gram();
  const Mat id = Mat::Identity(module.dim_s0(), module.dim_s0());
  double worst = 0.0;
  for (int a = 0; a < module.dim_v(); ++a) {
    const Mat adj_a = g0_inv * module.gamma(a).transpose() * g1;
    for (int b = a; b < module.dim_v(); ++b) {
      const Mat adj_b = g0_inv * module.gamma(b).transpose() * g1;
      const Mat r = adj_a * module.gamma(b) + adj_b * module.gamma(a) - 2.0 * gv(a, b) * id;
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double adjunction_residual(const CliffordModule& module, int n_samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < n_samples; ++n) {
    Vec s0(module.dim_s0());
    Vec s1(module.dim_s1());
    for (Eigen::Index i = 0; i < s0.size(); ++i) s0(i) = coord(rng);
    for (Eigen::Index i = 0; i < s1.size(); ++i) s1(i) = coord(rng);
    const Vec b = module.bilinear(s1, s0);
    for (int a = 0; a < module.dim_v(); ++a) {
      const Vec e = Vec::Unit(module.dim_v(), a);
      const double lhs = module.v_space().inner(b, e);
      const double rhs = module.s1_space().inner(s1, module.gamma(a) * s0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

CliffordModule corrupt_gamma(const CliffordModule& module, int a, int row, int col, int delta) {
  std::vector<IntMat> gammas = module.gammas();
  IntMat& g = gammas.at(static_cast<std::size_t>(a));
  if (row < 0 || row >= g.rows() || col < 0 || col >= g.cols()) throw DimensionError("corrupt_gamma: bad entry");
  g(row, col) += delta;
  return CliffordModule(module.v_space(), module.s0_space(), module.s1_space(), std::move(gammas),
                        module.multiplicity());
}

}  // namespace vinberg
