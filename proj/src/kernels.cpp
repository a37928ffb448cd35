#include "vinberg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>

namespace vinberg {

namespace {

PointResult classify_point(const InvariantCubic& q, const Vec& diag) {
  const HessianReport report =
      tangent_restriction(q, HermMatrix::diagonal_matrix(q.cone().algebra_ref(), diag));
  return {report.verdict(), report.analysis.margin};
}

RoundtripStats roundtrip_one(const ConeDescriptor& cone, const TriangularMatrix& a) {
  RoundtripStats s;
  s.samples = 1;
  const HermMatrix x = herm_from_triangular(a);
  const GroupCoordinates gc = group_coordinates(cone, x);
  s.roundtrip = (gc.element.flatten() - a.flatten()).cwiseAbs().maxCoeff() / a.max_abs();

  const std::vector<double> p = p_polynomials(cone, x);
  const int m = cone.rank();
  for (int i = 1; i <= m; ++i) {
    double lhs = gc.element.diag(i) * gc.element.diag(i);
    for (int s2 = i + 1; s2 <= m; ++s2) lhs *= p[static_cast<std::size_t>(s2 - 1)];
    const double pi = p[static_cast<std::size_t>(i - 1)];
    s.p_identity = std::max(s.p_identity, std::abs(lhs - pi) / std::abs(pi));
  }

  double prod = 1.0;
  for (int i = 1; i <= m; ++i) prod *= a.diag(i) * a.diag(i);
  s.determinant = std::abs(g_determinant_sq(cone, x) - prod) / prod;
  return s;
}

ScanRow scan_cell(const ConeDescriptor& cone, const std::vector<double>& eps1, const std::vector<double>& eps2,
                  std::size_t k, const DiagonalGrid& grid, const WitnessSearch& search) {
  return classify_cell(cone, eps1[k / eps2.size()], eps2[k % eps2.size()], grid, search, Execution::serial);
}

// Runs body(i) for i in [0, n) on the OpenMP team and rethrows the first
// exception after the loop; exceptions must not escape a parallel region.
template <class Body>
void parallel_for(long n, Body body) {
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(guard);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<PointResult> serial_classify_diagonal(const InvariantCubic& q, const std::vector<Vec>& diagonals) {
  std::vector<PointResult> out(diagonals.size());
  for (std::size_t i = 0; i < diagonals.size(); ++i) out[i] = classify_point(q, diagonals[i]);
  return out;
}

std::vector<PointResult> parallel_classify_diagonal(const InvariantCubic& q, const std::vector<Vec>& diagonals) {
  std::vector<PointResult> out(diagonals.size());
  parallel_for(static_cast<long>(diagonals.size()), [&](long i) {
    out[static_cast<std::size_t>(i)] = classify_point(q, diagonals[static_cast<std::size_t>(i)]);
  });
  return out;
}

RoundtripStats serial_roundtrip(const ConeDescriptor& cone, const std::vector<TriangularMatrix>& elements) {
  RoundtripStats total;
  for (const auto& a : elements) {
    const RoundtripStats s = roundtrip_one(cone, a);
    total.roundtrip = std::max(total.roundtrip, s.roundtrip);
    total.p_identity = std::max(total.p_identity, s.p_identity);
    total.determinant = std::max(total.determinant, s.determinant);
  }
  total.samples = static_cast<int>(elements.size());
  return total;
}

RoundtripStats parallel_roundtrip(const ConeDescriptor& cone, const std::vector<TriangularMatrix>& elements) {
  std::vector<RoundtripStats> per(elements.size());
  parallel_for(static_cast<long>(elements.size()), [&](long i) {
    per[static_cast<std::size_t>(i)] = roundtrip_one(cone, elements[static_cast<std::size_t>(i)]);
  });
  RoundtripStats total;
  for (const auto& s : per) {
    total.roundtrip = std::max(total.roundtrip, s.roundtrip);
    total.p_identity = std::max(total.p_identity, s.p_identity);
    total.determinant = std::max(total.determinant, s.determinant);
  }
  total.samples = static_cast<int>(elements.size());
  return total;
}

std::vector<ScanRow> serial_scan(const ConeDescriptor& cone, const std::vector<double>& eps1,
                                 const std::vector<double>& eps2, const DiagonalGrid& grid,
                                 const WitnessSearch& search) {
  std::vector<ScanRow> rows(eps1.size() * eps2.size());
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = scan_cell(cone, eps1, eps2, k, grid, search);
  return rows;
}

std::vector<ScanRow> parallel_scan(const ConeDescriptor& cone, const std::vector<double>& eps1,
                                   const std::vector<double>& eps2, const DiagonalGrid& grid,
                                   const WitnessSearch& search) {
  std::vector<ScanRow> rows(eps1.size() * eps2.size());
  parallel_for(static_cast<long>(rows.size()), [&](long k) {
    rows[static_cast<std::size_t>(k)] = scan_cell(cone, eps1, eps2, static_cast<std::size_t>(k), grid, search);
  });
  return rows;
}

}  // namespace vinberg
