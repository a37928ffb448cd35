#pragma once

#include <vector>

#include "vinberg/cubics.hpp"

namespace vinberg {

// Batch kernels in two flavours. serial_* is the reference; parallel_* uses
// OpenMP and must return identical results in identical order.

struct PointResult {
  Verdict verdict = Verdict::degenerate;
  double margin = 0.0;
};

/// Verdict of the restricted form at each diagonal point of {q = 1}.
std::vector<PointResult> serial_classify_diagonal(const InvariantCubic& q, const std::vector<Vec>& diagonals);
std::vector<PointResult> parallel_classify_diagonal(const InvariantCubic& q, const std::vector<Vec>& diagonals);

struct RoundtripStats {
  int samples = 0;
  /// max |A' - A| / max |A| with A' = group_coordinates(A . A*).
  double roundtrip = 0.0;
  /// max_i |a_ii^2 prod_{s>i} p_s - p_i| / |p_i|.
  double p_identity = 0.0;
  /// |pi^2(A . A*) - prod a_ii^2| / prod a_ii^2.
  double determinant = 0.0;
};

RoundtripStats serial_roundtrip(const ConeDescriptor& cone, const std::vector<TriangularMatrix>& elements);
RoundtripStats parallel_roundtrip(const ConeDescriptor& cone, const std::vector<TriangularMatrix>& elements);

std::vector<ScanRow> serial_scan(const ConeDescriptor& cone, const std::vector<double>& eps1,
                                 const std::vector<double>& eps2, const DiagonalGrid& grid,
                                 const WitnessSearch& search);
std::vector<ScanRow> parallel_scan(const ConeDescriptor& cone, const std::vector<double>& eps1,
                                   const std::vector<double>& eps2, const DiagonalGrid& grid,
                                   const WitnessSearch& search);

}  // namespace vinberg
