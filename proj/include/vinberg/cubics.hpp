#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinberg/cone.hpp"

namespace vinberg {

/// A G'-invariant cubic on a rank-2 or special rank-3 cone.
///   rank 2: q = a x2^3 + b x2 p1
///   rank 3: q = a d + b p2 p3 + c p3^3
class InvariantCubic {
 public:
  static InvariantCubic rank2(ConeDescriptor cone, double a, double b);
  /// (x1 x2 - |w|^2) x2 + eps x2^3.
  static InvariantCubic normalized(ConeDescriptor cone, double eps);
  static InvariantCubic rank3(ConeDescriptor cone, double a, double b, double c);
  /// d + eps1 x3 (x2 x3 - |v|^2) + eps2 x3^3.
  static InvariantCubic normalized(ConeDescriptor cone, double eps1, double eps2);

  const ConeDescriptor& cone() const { return cone_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  int rank() const { return cone_.rank(); }
  /// b != 0 (rank 2) or a != 0 (rank 3).
  bool is_normalizable() const;
  /// Coefficients already have the normalized shape (b = 1, resp. a = 1).
  bool is_normalized() const;

 private:
  InvariantCubic(ConeDescriptor cone, std::vector<double> coeffs);

  ConeDescriptor cone_;
  std::vector<double> coeffs_;
};

double eval_cubic(const InvariantCubic& q, const HermMatrix& x);
/// Gradient in flat coordinates (see BlockMatrix::flatten).
Vec gradient(const InvariantCubic& q, const HermMatrix& x);
Mat hessian(const InvariantCubic& q, const HermMatrix& x);
/// -Hess log q = (grad q grad q^T - q Hess q) / q^2. Throws DomainError at q = 0.
Mat hessian_log(const InvariantCubic& q, const HermMatrix& x);

/// X / q(X)^{1/3}; requires q(X) > 0.
HermMatrix project_to_level_set(const InvariantCubic& q, const HermMatrix& x);

enum class Verdict { positive_definite, indefinite, degenerate };
std::string to_string(Verdict v);

/// Positive-definiteness of a symmetric form, decided on the Jacobi-scaled
/// form D^{-1/2} R D^{-1/2}. `pivots` are ratios of consecutive leading minors
/// of the scaled form; `leading_minors` are those of R itself.
struct FormAnalysis {
  Verdict verdict = Verdict::degenerate;
  std::vector<double> leading_minors;
  std::vector<double> pivots;
  /// Smallest pivot; the positive-definiteness margin.
  double margin = 0.0;
  /// Smallest eigenvalue of the scaled form.
  double min_eigenvalue = 0.0;
};

inline constexpr double kDegenerateTol = 1e-12;
inline constexpr double kWitnessMargin = 1e-10;

FormAnalysis classify_form(const Mat& form);

struct HessianReport {
  HermMatrix point;
  Vec gradient;
  Mat hessian;
  /// Columns form an orthonormal basis of ker dq at the point.
  Mat tangent_basis;
  /// Restriction to tangent_basis.
  Mat restricted;
  /// The same restriction, written in coordinates moved to the identity by
  /// diag(sqrt x_i) and in an orthonormal basis there. Congruent to
  /// `restricted` but well scaled; the verdict is read from this form.
  Mat transported;
  FormAnalysis analysis;
  /// max_k |dq(b_k)| / |grad q|.
  double tangent_residual = 0.0;

  Verdict verdict() const { return analysis.verdict; }
};

inline constexpr double kLevelSetTol = 1e-9;

/// Orthonormal basis (columns) of the orthogonal complement of `normal`.
Mat complement_basis(const Vec& normal);

/// Flat-coordinate scaling of the linear map Y -> D Y D, D = diag(sqrt x_i):
/// x_i on diagonal coordinates, sqrt(x_i x_j) on block (i, j). All ones when
/// some x_i <= 0.
Vec transport_scale(const HermMatrix& x);

/// Restriction of -Hess log q to the tangent space of {q = 1} at X.
/// Requires |q(X) - 1| <= kLevelSetTol and a Euclidean algebra.
HessianReport tangent_restriction(const InvariantCubic& q, const HermMatrix& x);

struct DiagonalGrid {
  double lo = 1e-2;
  double hi = 1e2;
  int points = 100;
  /// Used when eps2 > 0: `probes` x3 values log-spaced from hi to probe_max,
  /// and per x2 the same number approaching the edge of the slice, where the
  /// solved x1 reaches 0, at relative gaps 10^(-k/2).
  int probes = 10;
  double probe_max = 1e3;
};

struct DiagonalSample {
  Vec diag;
  Verdict verdict = Verdict::degenerate;
  double margin = 0.0;
  /// 1 - eps2 x3^3 <= 0 at this point (rank 3, normalized).
  bool violates_constraint = false;
};

struct DiagonalReport {
  bool all_pd = false;
  int checked = 0;
  /// Points dropped because q = 1 could not be certified there.
  int discarded = 0;
  int pd_count = 0;
  /// Smallest margin over all checked points.
  double min_margin = 0.0;
  /// Points whose verdict is not positive definite, in grid order.
  std::vector<DiagonalSample> witnesses;
};

/// Diagonal points of {q = 1} inside the cone, in grid order. Rank 2 sweeps x2
/// (x1 when b = 0); rank 3 sweeps (x2, x3), or (x1, x3) when a = 0. Points
/// whose level q = 1 cannot be certified to kLevelSetTol are dropped and
/// counted in `discarded`.
std::vector<Vec> diagonal_slice(const InvariantCubic& q, const DiagonalGrid& grid, int* discarded = nullptr);

/// Runs tangent_restriction over diagonal_slice. Throws DomainError when no
/// grid point is feasible.
DiagonalReport admissibility_on_diagonal(const InvariantCubic& q, const DiagonalGrid& grid = {});

struct WitnessSearch {
  double lo = 0.1;
  double hi = 10.0;
  int points = 40;
};

/// First diagonal point, in grid order over (x2, x3), with a positive-definite
/// restricted form and margin above kWitnessMargin.
std::optional<DiagonalSample> find_locally_admissible_point(const InvariantCubic& q,
                                                            const WitnessSearch& search = {});

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
  /// lo + i * step for i = 0 .. round((hi - lo) / step).
  std::vector<double> values() const;
};

enum class Classification { admissible_on_sample, locally_admissible, not_admissible };
std::string to_string(Classification c);

struct ScanRow {
  double eps1 = 0.0;
  double eps2 = 0.0;
  Classification classification = Classification::not_admissible;
  std::optional<double> witness_x2;
  std::optional<double> witness_x3;
  double min_minor = 0.0;
};

enum class Execution { serial, parallel };

/// Rows in (eps1, eps2) order, eps2 varying fastest.
std::vector<ScanRow> scan_parameter_plane(const ConeDescriptor& cone, const ParamRange& eps1, const ParamRange& eps2,
                                          const DiagonalGrid& grid = {}, const WitnessSearch& search = {},
                                          Execution exec = Execution::parallel);

ScanRow classify_cell(const ConeDescriptor& cone, double eps1, double eps2, const DiagonalGrid& grid,
                      const WitnessSearch& search, Execution exec = Execution::serial);

std::string scan_csv(const std::vector<ScanRow>& rows);

struct NoG0Report {
  int pi_degree = 0;
  bool exists = false;
  std::string summary;
};

/// G0-invariant cubics are powers of pi^2 of degree 3: none when deg pi^2
/// does not divide 3, otherwise unique up to scale.
NoG0Report no_g0_cubic_check(const ConeDescriptor& cone);

}  // namespace vinberg
