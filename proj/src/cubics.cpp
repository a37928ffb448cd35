#include "vinberg/cubics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "vinberg/kernels.hpp"

namespace vinberg {

InvariantCubic::InvariantCubic(ConeDescriptor cone, std::vector<double> coeffs)
    : cone_(std::move(cone)), coeffs_(std::move(coeffs)) {}

InvariantCubic InvariantCubic::rank2(ConeDescriptor cone, double a, double b) {
  if (cone.rank() != 2) throw DimensionError("rank-2 cubic needs a rank-2 cone");
  return InvariantCubic(std::move(cone), {a, b});
}

InvariantCubic InvariantCubic::normalized(ConeDescriptor cone, double eps) { return rank2(std::move(cone), eps, 1.0); }

InvariantCubic InvariantCubic::rank3(ConeDescriptor cone, double a, double b, double c) {
  if (!cone.is_special_rank3()) throw DimensionError("rank-3 cubic needs a special rank-3 cone");
  return InvariantCubic(std::move(cone), {a, b, c});
}

InvariantCubic InvariantCubic::normalized(ConeDescriptor cone, double eps1, double eps2) {
  return rank3(std::move(cone), 1.0, eps1, eps2);
}

bool InvariantCubic::is_normalizable() const { return rank() == 2 ? coeffs_[1] != 0.0 : coeffs_[0] != 0.0; }

bool InvariantCubic::is_normalized() const { return rank() == 2 ? coeffs_[1] == 1.0 : coeffs_[0] == 1.0; }

namespace {

void require_same(const InvariantCubic& q, const HermMatrix& x) {
  if (!q.cone().algebra().same_structure(x.algebra())) throw DimensionError("matrix is not over the cubic's algebra");
}

// Value, gradient and Hessian of q in flat coordinates.
struct Jet {
  double value = 0.0;
  Vec grad;
  Mat hess;
};

Jet rank2_jet(const InvariantCubic& q, const HermMatrix& x, bool second) {
  const double a = q.coeffs()[0];
  const double b = q.coeffs()[1];
  const Mat& g = x.algebra().space(1, 2).gram();
  const double x1 = x.diag(1);
  const double x2 = x.diag(2);
  const Vec& w = x.block(1, 2);
  const Vec gw = g * w;
  const double ww = w.dot(gw);
  const int n = x.flat_size();
  const int k = static_cast<int>(w.size());

  Jet j;
  j.value = a * x2 * x2 * x2 + b * (x1 * x2 * x2 - x2 * ww);
  j.grad = Vec::Zero(n);
  j.grad(0) = b * x2 * x2;
  j.grad(1) = 3.0 * a * x2 * x2 + b * (2.0 * x1 * x2 - ww);
  j.grad.segment(2, k) = -2.0 * b * x2 * gw;
  if (!second) return j;

  j.hess = Mat::Zero(n, n);
  j.hess(0, 1) = j.hess(1, 0) = 2.0 * b * x2;
  j.hess(1, 1) = 6.0 * a * x2 + 2.0 * b * x1;
  j.hess.block(1, 2, 1, k) = (-2.0 * b * gw).transpose();
  j.hess.block(2, 1, k, 1) = -2.0 * b * gw;
  j.hess.block(2, 2, k, k) = -2.0 * b * x2 * g;
  return j;
}

Jet rank3_jet(const InvariantCubic& q, const HermMatrix& x, bool second) {
  const double ca = q.coeffs()[0];
  const double cb = q.coeffs()[1];
  const double cc = q.coeffs()[2];
  const CliffordModule& mod = *x.algebra().clifford();
  const Mat& g0 = mod.s0_space().gram();
  const Mat& g1 = mod.s1_space().gram();
  const Mat& gv = mod.v_space().gram();
  const double x1 = x.diag(1);
  const double x2 = x.diag(2);
  const double x3 = x.diag(3);
  const Vec& s0 = x.block(1, 2);
  const Vec& s1 = x.block(1, 3);
  const Vec& v = x.block(2, 3);
  const int k = mod.dim_s0();
  const int dv = mod.dim_v();
  const int n = x.flat_size();
  const int o0 = 3;
  const int o1 = 3 + k;
  const int ov = 3 + 2 * k;

  const Vec g0s0 = g0 * s0;
  const Vec g1s1 = g1 * s1;
  const Vec gvv = gv * v;
  const double n0 = s0.dot(g0s0);
  const double n1 = s1.dot(g1s1);
  const double nv = v.dot(gvv);
  const Mat mv = mod.action(v);
  const Vec mvs0 = mv * s0;
  // c_a = <s1, Gamma_a s0>
  Vec c(dv);
  for (int a = 0; a < dv; ++a) c(a) = g1s1.dot(mod.gamma(a) * s0);

  const double d = x1 * x2 * x3 - x3 * n0 - x2 * n1 - x1 * nv + 2.0 * g1s1.dot(mvs0);
  const double p23 = x2 * x3 * x3 - x3 * nv;
  const double p333 = x3 * x3 * x3;

  Jet j;
  j.value = ca * d + cb * p23 + cc * p333;
  j.grad = Vec::Zero(n);
  j.grad(0) = ca * (x2 * x3 - nv);
  j.grad(1) = ca * (x1 * x3 - n1) + cb * x3 * x3;
  j.grad(2) = ca * (x1 * x2 - n0) + cb * (2.0 * x2 * x3 - nv) + 3.0 * cc * x3 * x3;
  j.grad.segment(o0, k) = ca * (-2.0 * x3 * g0s0 + 2.0 * mv.transpose() * g1s1);
  j.grad.segment(o1, k) = ca * (-2.0 * x2 * g1s1 + 2.0 * g1 * mvs0);
  j.grad.segment(ov, dv) = ca * (-2.0 * x1 * gvv + 2.0 * c) - cb * 2.0 * x3 * gvv;
  if (!second) return j;

  Mat h = Mat::Zero(n, n);
  auto sym = [&h](int r, int col, double val) { h(r, col) = h(col, r) = val; };
  sym(0, 1, ca * x3);
  sym(0, 2, ca * x2);
  sym(1, 2, ca * x1 + 2.0 * cb * x3);
  h(2, 2) = 2.0 * cb * x2 + 6.0 * cc * x3;
  auto sym_block = [&h](int r, int col, const Mat& blk) {
    h.block(r, col, blk.rows(), blk.cols()) = blk;
    h.block(col, r, blk.cols(), blk.rows()) = blk.transpose();
  };
  sym_block(0, ov, (-2.0 * ca * gvv).transpose());
  sym_block(1, o1, (-2.0 * ca * g1s1).transpose());
  sym_block(2, o0, (-2.0 * ca * g0s0).transpose());
  sym_block(2, ov, (-2.0 * cb * gvv).transpose());
  h.block(o0, o0, k, k) = -2.0 * ca * x3 * g0;
  h.block(o1, o1, k, k) = -2.0 * ca * x2 * g1;
  h.block(ov, ov, dv, dv) = -2.0 * (ca * x1 + cb * x3) * gv;
  sym_block(o0, o1, 2.0 * ca * mv.transpose() * g1);
  Mat s0v(k, dv);
  Mat s1v(k, dv);
  for (int a = 0; a < dv; ++a) {
    s0v.col(a) = 2.0 * ca * mod.gamma(a).transpose() * g1s1;
    s1v.col(a) = 2.0 * ca * g1 * (mod.gamma(a) * s0);
  }
  sym_block(o0, ov, s0v);
  sym_block(o1, ov, s1v);
  j.hess = std::move(h);
  return j;
}

Jet jet(const InvariantCubic& q, const HermMatrix& x, bool second) {
  require_same(q, x);
  return q.rank() == 2 ? rank2_jet(q, x, second) : rank3_jet(q, x, second);
}

}  // namespace

double eval_cubic(const InvariantCubic& q, const HermMatrix& x) { return jet(q, x, false).value; }

Vec gradient(const InvariantCubic& q, const HermMatrix& x) { return jet(q, x, false).grad; }

Mat hessian(const InvariantCubic& q, const HermMatrix& x) { return jet(q, x, true).hess; }

Mat hessian_log(const InvariantCubic& q, const HermMatrix& x) {
  const Jet j = jet(q, x, true);
  if (j.value == 0.0) throw DomainError("log q is singular where q = 0");
  return (j.grad * j.grad.transpose() - j.value * j.hess) / (j.value * j.value);
}

HermMatrix project_to_level_set(const InvariantCubic& q, const HermMatrix& x) {
  const double value = eval_cubic(q, x);
  if (!(value > 0.0)) throw DomainError("projection onto {q = 1} needs q(X) > 0");
  return x.scaled(1.0 / std::cbrt(value));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::positive_definite:
      return "positive-definite";
    case Verdict::indefinite:
      return "indefinite";
    case Verdict::degenerate:
      return "degenerate";
  }
  return "degenerate";
}

FormAnalysis classify_form(const Mat& form) {
  const int n = static_cast<int>(form.rows());
  FormAnalysis out;
  if (n == 0) {
    out.verdict = Verdict::positive_definite;
    return out;
  }
  const Mat r = 0.5 * (form + form.transpose());
  const double raw_scale = r.cwiseAbs().maxCoeff();
  if (raw_scale == 0.0) {
    out.verdict = Verdict::degenerate;
    out.leading_minors.assign(static_cast<std::size_t>(n), 0.0);
    out.pivots.assign(static_cast<std::size_t>(n), 0.0);
    return out;
  }

  // Jacobi scaling when the diagonal allows it; otherwise plain normalization.
  const Vec diag = r.diagonal();
  const bool scalable = (diag.array() > kDegenerateTol * raw_scale).all();
  Vec inv_sqrt = Vec::Constant(n, 1.0 / std::sqrt(raw_scale));
  if (scalable) inv_sqrt = diag.array().rsqrt();
  const Mat s = inv_sqrt.asDiagonal() * r * inv_sqrt.asDiagonal();
  const double scale = s.cwiseAbs().maxCoeff();

  // LDL^T without pivoting: pivot_k = minor_k / minor_{k-1}.
  Mat work = s;
  double minor = 1.0;
  bool pd = scalable;
  out.margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double pivot = work(k, k);
    out.pivots.push_back(pivot);
    out.margin = std::min(out.margin, pivot);
    minor *= pivot / (inv_sqrt(k) * inv_sqrt(k));
    out.leading_minors.push_back(minor);
    if (!(pivot > kDegenerateTol * scale)) {
      pd = false;
      for (int rest = k + 1; rest < n; ++rest) {
        out.pivots.push_back(0.0);
        out.leading_minors.push_back(0.0);
      }
      break;
    }
    const int rest = n - k - 1;
    work.bottomRightCorner(rest, rest) -= work.col(k).tail(rest) * work.row(k).tail(rest) / pivot;
  }

  Eigen::SelfAdjointEigenSolver<Mat> eig(s, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues()(0);
  if (pd) {
    out.verdict = Verdict::positive_definite;
  } else {
    out.verdict = out.min_eigenvalue < -kDegenerateTol * scale ? Verdict::indefinite : Verdict::degenerate;
    out.margin = std::min(out.margin, out.min_eigenvalue);
  }
  return out;
}

Mat complement_basis(const Vec& normal) {
  const long n = normal.size();
  Eigen::HouseholderQR<Mat> qr(normal);
  const Mat full_q = qr.householderQ() * Mat::Identity(n, n);
  return full_q.rightCols(n - 1);
}

Vec transport_scale(const HermMatrix& x) {
  const Vec diag = x.diagonal();
  Vec s = Vec::Ones(x.flat_size());
  if (!(diag.array() > 0.0).all()) return s;
  const int m = x.rank();
  s.head(m) = diag;
  long offset = m;
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      const long len = x.block(i, k).size();
      s.segment(offset, len).setConstant(std::sqrt(x.diag(i) * x.diag(k)));
      offset += len;
    }
  }
  return s;
}

HessianReport tangent_restriction(const InvariantCubic& q, const HermMatrix& x) {
  if (!q.cone().is_euclidean()) throw UnsupportedError("admissibility needs a Euclidean algebra");
  const Jet j = jet(q, x, true);
  if (!(std::abs(j.value - 1.0) <= kLevelSetTol)) {
    throw DomainError("tangent_restriction needs a point with q(X) = 1; got q = " + std::to_string(j.value));
  }
  const int n = x.flat_size();
  HessianReport rep{x, j.grad, (j.grad * j.grad.transpose() - j.value * j.hess) / (j.value * j.value), {}, {}, {}, {},
                    0.0};
  const double gnorm = j.grad.norm();
  if (gnorm == 0.0) {
    rep.tangent_basis = Mat::Identity(n, n);
    rep.restricted = rep.hessian;
    rep.transported = rep.hessian;
    rep.analysis.verdict = Verdict::degenerate;
    return rep;
  }
  rep.tangent_basis = complement_basis(j.grad);
  rep.restricted = rep.tangent_basis.transpose() * rep.hessian * rep.tangent_basis;
  rep.restricted = 0.5 * (rep.restricted + rep.restricted.transpose());
  rep.tangent_residual = n > 1 ? (j.grad.transpose() * rep.tangent_basis).cwiseAbs().maxCoeff() / gnorm : 0.0;

  // Decide in coordinates moved by the diagonal group element diag(sqrt x_i):
  // the same form on the same subspace, but without the x-dependent scaling.
  const Vec scale = transport_scale(x);
  const Mat moved_basis = complement_basis(scale.asDiagonal() * j.grad);
  rep.transported = moved_basis.transpose() * scale.asDiagonal() * rep.hessian * scale.asDiagonal() * moved_basis;
  rep.transported = 0.5 * (rep.transported + rep.transported.transpose());
  rep.analysis = classify_form(rep.transported);
  return rep;
}

namespace {

std::vector<double> log_space(double lo, double hi, int points) {
  std::vector<double> out;
  if (points <= 0 || !(lo > 0.0) || !(hi >= lo)) return out;
  if (points == 1) return {lo};
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) out.push_back(i + 1 == points ? hi : lo * std::exp(step * i));
  return out;
}

Vec diag3(double x1, double x2, double x3) { return (Vec(3) << x1, x2, x3).finished(); }

// Positive root of c x3^3 + b x2 x3^2 - 1 (c > 0), where the solved x1 of the
// normalized cubic reaches 0 at fixed x2. Unique since the cubic is -1 at 0.
double slice_edge(double b, double cc, double x2) {
  auto f = [&](double t) { return cc * t * t * t + b * x2 * t * t - 1.0; };
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) <= 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return lo;
}

}  // namespace

namespace {

std::vector<Vec> raw_slice(const InvariantCubic& q, const DiagonalGrid& grid) {
  std::vector<Vec> out;
  const auto& c = q.coeffs();
  if (q.rank() == 2) {
    const double a = c[0];
    const double b = c[1];
    if (b == 0.0) {
      // q = a x2^3: x2 fixed, x1 free.
      if (!(a > 0.0)) return out;
      const double x2 = std::cbrt(1.0 / a);
      for (double x1 : log_space(grid.lo, grid.hi, grid.points)) out.push_back((Vec(2) << x1, x2).finished());
      return out;
    }
    // x2^2 (b x1 + a x2) = 1, so x1 = (1 - a x2^3) / (b x2^2) > 0 needs (1 - a x2^3) / b > 0.
    double lo = grid.lo;
    double hi = grid.hi;
    if (a > 0.0) {
      const double edge = std::cbrt(1.0 / a);
      if (b > 0.0) hi = std::min(hi, edge * (1.0 - 1e-3));
      else lo = std::max(lo, edge * (1.0 + 1e-3));
    } else if (b < 0.0) {
      return out;
    }
    for (double x2 : log_space(lo, hi, grid.points)) {
      const double x1 = (1.0 - a * x2 * x2 * x2) / (b * x2 * x2);
      if (x1 > 0.0) out.push_back((Vec(2) << x1, x2).finished());
    }
    return out;
  }

  const double a = c[0];
  const double b = c[1];
  const double cc = c[2];
  std::vector<double> x3_axis = log_space(grid.lo, grid.hi, grid.points);
  if (q.is_normalized() && cc > 0.0 && grid.probes > 0 && grid.probe_max > grid.hi) {
    const std::vector<double> probes = log_space(grid.hi, grid.probe_max, grid.probes + 1);
    x3_axis.insert(x3_axis.end(), probes.begin() + 1, probes.end());
  }
  const std::vector<double> free_axis = log_space(grid.lo, grid.hi, grid.points);
  // q(diag) = x3 (a x1 x2 + b x2 x3 + c x3^2).
  const bool edge_probes = q.is_normalized() && cc > 0.0 && grid.probes > 0;
  for (double free : free_axis) {
    std::vector<double> axis = x3_axis;
    if (edge_probes) {
      // The slice ends where x1 reaches 0; approach that edge geometrically.
      const double edge = slice_edge(b, cc, free);
      for (int k = 1; k <= grid.probes; ++k) {
        const double x3 = edge * (1.0 - std::pow(10.0, -0.5 * k));
        if (x3 >= grid.lo && x3 <= grid.probe_max) axis.push_back(x3);
      }
    }
    for (double x3 : axis) {
      if (a != 0.0) {
        const double x2 = free;
        const double x1 = (1.0 / x3 - b * x2 * x3 - cc * x3 * x3) / (a * x2);
        if (x1 > 0.0) out.push_back(diag3(x1, x2, x3));
      } else if (b != 0.0) {
        const double x1 = free;
        const double x2 = (1.0 / x3 - cc * x3 * x3) / (b * x3);
        if (x2 > 0.0) out.push_back(diag3(x1, x2, x3));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> diagonal_slice(const InvariantCubic& q, const DiagonalGrid& grid, int* discarded) {
  // The solved coordinate can lose digits to cancellation; rescale onto
  // q = 1 and drop points whose level cannot be certified.
  std::vector<Vec> out;
  int dropped = 0;
  for (Vec diag : raw_slice(q, grid)) {
    const double value = eval_cubic(q, HermMatrix::diagonal_matrix(q.cone().algebra_ref(), diag));
    if (value > 0.0) {
      diag /= std::cbrt(value);
      const double again = eval_cubic(q, HermMatrix::diagonal_matrix(q.cone().algebra_ref(), diag));
      if (std::abs(again - 1.0) <= kLevelSetTol) {
        out.push_back(std::move(diag));
        continue;
      }
    }
    ++dropped;
  }
  if (discarded) *discarded = dropped;
  return out;
}

DiagonalReport admissibility_on_diagonal(const InvariantCubic& q, const DiagonalGrid& grid) {
  if (!q.cone().is_euclidean()) throw UnsupportedError("admissibility needs a Euclidean algebra");
  int discarded = 0;
  const std::vector<Vec> points = diagonal_slice(q, grid, &discarded);
  if (points.empty()) throw DomainError("no grid point lies on the diagonal slice of {q = 1}");
  const std::vector<PointResult> results = parallel_classify_diagonal(q, points);

  DiagonalReport rep;
  rep.discarded = discarded;
  rep.checked = static_cast<int>(points.size());
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointResult& r = results[i];
    rep.min_margin = std::min(rep.min_margin, r.margin);
    if (r.verdict == Verdict::positive_definite) {
      ++rep.pd_count;
      continue;
    }
    DiagonalSample w{points[i], r.verdict, r.margin, false};
    if (q.rank() == 3 && q.is_normalized()) {
      const double x3 = points[i](2);
      w.violates_constraint = 1.0 - q.coeffs()[2] * x3 * x3 * x3 <= 0.0;
    }
    rep.witnesses.push_back(std::move(w));
  }
  rep.all_pd = rep.pd_count == rep.checked;
  return rep;
}

std::optional<DiagonalSample> find_locally_admissible_point(const InvariantCubic& q, const WitnessSearch& search) {
  if (q.rank() != 3) throw DimensionError("find_locally_admissible_point needs a rank-3 cubic");
  DiagonalGrid grid{search.lo, search.hi, search.points, 0, 0.0};
  for (const Vec& diag : diagonal_slice(q, grid)) {
    const HessianReport rep = tangent_restriction(q, HermMatrix::diagonal_matrix(q.cone().algebra_ref(), diag));
    if (rep.verdict() == Verdict::positive_definite && rep.analysis.margin > kWitnessMargin) {
      return DiagonalSample{diag, rep.verdict(), rep.analysis.margin, false};
    }
  }
  return std::nullopt;
}

std::vector<double> ParamRange::values() const {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("range needs step > 0 and hi >= lo");
  const long count = std::lround((hi - lo) / step) + 1;
  std::vector<double> out;
  for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::admissible_on_sample:
      return "admissible-on-sample";
    case Classification::locally_admissible:
      return "locally-admissible";
    case Classification::not_admissible:
      return "not-admissible";
  }
  return "not-admissible";
}

ScanRow classify_cell(const ConeDescriptor& cone, double eps1, double eps2, const DiagonalGrid& grid,
                      const WitnessSearch& search, Execution exec) {
  const InvariantCubic q = InvariantCubic::normalized(cone, eps1, eps2);
  if (!cone.is_euclidean()) throw UnsupportedError("scan needs a Euclidean cone");
  const std::vector<Vec> points = diagonal_slice(q, grid);
  ScanRow row{eps1, eps2, Classification::not_admissible, std::nullopt, std::nullopt, 0.0};
  if (points.empty()) return row;
  const std::vector<PointResult> results =
      exec == Execution::parallel ? parallel_classify_diagonal(q, points) : serial_classify_diagonal(q, points);

  double min_margin = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> first_bad;
  for (std::size_t i = 0; i < results.size(); ++i) {
    min_margin = std::min(min_margin, results[i].margin);
    if (!first_bad && results[i].verdict != Verdict::positive_definite) first_bad = i;
  }
  if (!first_bad) {
    row.classification = Classification::admissible_on_sample;
    row.min_minor = min_margin;
    return row;
  }
  if (eps2 < 0.0) {
    if (auto w = find_locally_admissible_point(q, search)) {
      row.classification = Classification::locally_admissible;
      row.witness_x2 = w->diag(1);
      row.witness_x3 = w->diag(2);
      row.min_minor = w->margin;
      return row;
    }
  }
  row.witness_x2 = points[*first_bad](1);
  row.witness_x3 = points[*first_bad](2);
  row.min_minor = results[*first_bad].margin;
  return row;
}

std::vector<ScanRow> scan_parameter_plane(const ConeDescriptor& cone, const ParamRange& eps1, const ParamRange& eps2,
                                          const DiagonalGrid& grid, const WitnessSearch& search, Execution exec) {
  if (!cone.is_special_rank3()) throw DimensionError("scan needs a special rank-3 cone");
  if (!cone.is_euclidean()) throw UnsupportedError("scan needs a Euclidean cone");
  const std::vector<double> e1 = eps1.values();
  const std::vector<double> e2 = eps2.values();
  return exec == Execution::parallel ? parallel_scan(cone, e1, e2, grid, search) : serial_scan(cone, e1, e2, grid, search);
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "eps1,eps2,classification,witness_x2,witness_x3,min_minor\n";
  for (const ScanRow& r : rows) {
    os << fmt17(r.eps1) << ',' << fmt17(r.eps2) << ',' << to_string(r.classification) << ','
       << (r.witness_x2 ? fmt17(*r.witness_x2) : "") << ',' << (r.witness_x3 ? fmt17(*r.witness_x3) : "") << ','
       << fmt17(r.min_minor) << '\n';
  }
  return os.str();
}

NoG0Report no_g0_cubic_check(const ConeDescriptor& cone) {
  // pi^2 = prod_i a_ii^2 and a_ii^2 = p_i / prod_{s>i} p_s with deg p_i = 2^{m-i}.
  const int m = cone.rank();
  int degree = 0;
  for (int i = 1; i <= m; ++i) {
    int deg = 1 << (m - i);
    for (int s = i + 1; s <= m; ++s) deg -= 1 << (m - s);
    degree += deg;
  }
  NoG0Report rep;
  rep.pi_degree = degree;
  rep.exists = 3 % degree == 0;
  if (!rep.exists) {
    rep.summary = "none exists, deg " + std::to_string(degree) + " does not divide 3";
  } else {
    rep.summary = degree == 3 ? "unique up to scale: d" : "unique up to scale: (pi^2)^" + std::to_string(3 / degree);
  }
  return rep;
}

}  // namespace vinberg
