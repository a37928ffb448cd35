#include "vinberg/sampling.hpp"

namespace vinberg {

namespace {

std::vector<Vec> sample_blocks(const NilAlgebra& algebra, std::mt19937_64& rng, const SamplingBox& box) {
  std::uniform_real_distribution<double> off(box.offdiag_lo, box.offdiag_hi);
  std::vector<Vec> blocks;
  for (int s = 0; s < algebra.block_count(); ++s) {
    Vec b(algebra.space_at(s).dim());
    for (Eigen::Index k = 0; k < b.size(); ++k) b(k) = off(rng);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

TriangularMatrix sample_group_element(const AlgebraRef& algebra, std::mt19937_64& rng, const SamplingBox& box) {
  std::uniform_real_distribution<double> diag(box.diag_lo, box.diag_hi);
  Vec d(algebra->rank());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = diag(rng);
  auto blocks = sample_blocks(*algebra, rng, box);
  return TriangularMatrix(algebra, std::move(d), std::move(blocks));
}

TriangularMatrix sample_unipotent_element(const AlgebraRef& algebra, std::mt19937_64& rng, const SamplingBox& box) {
  auto blocks = sample_blocks(*algebra, rng, box);
  return TriangularMatrix(algebra, Vec::Ones(algebra->rank()), std::move(blocks));
}

std::vector<TriangularMatrix> sample_group_elements(const AlgebraRef& algebra, int n, std::uint64_t seed,
                                                    const SamplingBox& box) {
  std::mt19937_64 rng(seed);
  std::vector<TriangularMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(sample_group_element(algebra, rng, box));
  return out;
}

}  // namespace vinberg
