#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vinberg/serialize.hpp"

namespace vinberg {

struct SelftestOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  /// Shift one gamma entry by 1 before building the cone (rank 3 only).
  bool corrupt_gamma = false;
};

struct InvariantCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct SelftestReport {
  std::vector<InvariantCheck> checks;
  bool passed() const;
  std::string table() const;
};

SelftestReport run_selftest(const ConeSpec& spec, const SelftestOptions& options);

}  // namespace vinberg
