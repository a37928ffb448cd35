#include "vinberg/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "vinberg/kernels.hpp"
#include "vinberg/sampling.hpp"

namespace vinberg {

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed || c.skipped; });
}

std::string SelftestReport::table() const {
  std::ostringstream os;
  char line[256];
  for (const InvariantCheck& c : checks) {
    const char* status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line, "%-4s  %-36s  max residual %-12.4g tol %-8.1g", status, c.name.c_str(),
                  c.residual, c.tolerance);
    os << line;
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
  os << (passed() ? "selftest passed" : "selftest FAILED") << '\n';
  return os.str();
}

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Runner {
 public:
  void check(const std::string& name, double tolerance, const std::function<double()>& body) {
    InvariantCheck c{name, 0.0, tolerance, false, false, {}};
    try {
      c.residual = body();
      c.passed = c.residual <= tolerance;
    } catch (const std::exception& e) {
      c.residual = INFINITY;
      c.note = e.what();
    }
    report.checks.push_back(std::move(c));
  }
  void skip(const std::string& name, const std::string& why) {
    report.checks.push_back({name, 0.0, 0.0, false, true, why});
  }

  SelftestReport report;
};

Vec random_flat(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

HermMatrix random_interior(const ConeDescriptor& cone, std::mt19937_64& rng) {
  return herm_from_triangular(sample_group_element(cone.algebra_ref(), rng));
}

// Finite differences of the exact gradient of -log q, one column per coordinate.
Mat fd_hessian_log(const InvariantCubic& q, const HermMatrix& x, double h) {
  const Vec base = x.flatten();
  const int n = static_cast<int>(base.size());
  auto neg_grad_log = [&](const Vec& flat) {
    const HermMatrix p = HermMatrix::from_flat(x.algebra_ref(), flat);
    return Vec(-gradient(q, p) / eval_cubic(q, p));
  };
  Mat out(n, n);
  for (int j = 0; j < n; ++j) {
    Vec plus = base;
    Vec minus = base;
    plus(j) += h;
    minus(j) -= h;
    out.col(j) = (neg_grad_log(plus) - neg_grad_log(minus)) / (2.0 * h);
  }
  return out;
}

double componentwise_rel(const Mat& exact, const Mat& approx) {
  const double floor = 1e-3 * exact.cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (long i = 0; i < exact.rows(); ++i) {
    for (long j = 0; j < exact.cols(); ++j) {
      worst = std::max(worst, std::abs(exact(i, j) - approx(i, j)) / std::max(std::abs(exact(i, j)), floor));
    }
  }
  return worst;
}

InvariantCubic sample_cubic(const ConeDescriptor& cone) {
  return cone.rank() == 2 ? InvariantCubic::normalized(cone, 0.5) : InvariantCubic::normalized(cone, 0.5, 0.25);
}

void clifford_checks(Runner& r, const ConeSpec& spec, const CliffordModule& module, const SelftestOptions& opt) {
  r.check("clifford.isometry", 1e-12, [&] { return verify_isometry(module, 1000, opt.seed).max_deviation; });
  r.check("clifford.relation", 1e-12, [&] { return clifford_relation_residual(module); });
  r.check("clifford.adjunction", 1e-12, [&] { return adjunction_residual(module, opt.samples, opt.seed + 1); });
  r.check("clifford.deterministic", 0.0, [&] {
    const CliffordModule again = build_clifford_module(spec.dim, spec.signature, spec.multiplicity);
    const CliffordModule& reference =
        opt.corrupt_gamma ? corrupt_gamma(again, 0, 0, 0, 1) : again;
    return reference == module ? 0.0 : 1.0;
  });
}

void algebra_checks(Runner& r, const ConeDescriptor& cone, const SelftestOptions& opt) {
  const AlgebraRef& alg = cone.algebra_ref();
  r.check("nilalgebra.associativity", 1e-12, [&] {
    std::mt19937_64 rng(opt.seed + 2);
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const auto a = sample_group_element(alg, rng);
      const auto b = sample_group_element(alg, rng);
      const auto c = sample_group_element(alg, rng);
      const Vec lhs = triangular_product(triangular_product(a, b), c).flatten();
      const Vec rhs = triangular_product(a, triangular_product(b, c)).flatten();
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, lhs.cwiseAbs().maxCoeff()));
    }
    return worst;
  });
  r.check("nilalgebra.unit", 0.0, [&] {
    std::mt19937_64 rng(opt.seed + 3);
    const auto a = sample_group_element(alg, rng);
    const auto id = TriangularMatrix::identity(alg);
    return std::max((triangular_product(a, id).flatten() - a.flatten()).cwiseAbs().maxCoeff(),
                    (triangular_product(id, a).flatten() - a.flatten()).cwiseAbs().maxCoeff());
  });
  r.check("nilalgebra.anti_transpose", 1e-12, [&] {
    std::mt19937_64 rng(opt.seed + 4);
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const HermMatrix x = HermMatrix::from_flat(alg, random_flat(alg->herm_dim(), rng));
      const HermMatrix y = HermMatrix::from_flat(alg, random_flat(alg->herm_dim(), rng));
      const HermMatrix tx = anti_transpose(x, cone.dual_ref());
      const HermMatrix ty = anti_transpose(y, cone.dual_ref());
      worst = std::max(worst, (anti_transpose(tx, alg).flatten() - x.flatten()).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(herm_inner(tx, ty) - herm_inner(x, y)));
    }
    return worst;
  });
  r.check("nilalgebra.dual_involution", 0.0, [&] {
    const AlgebraRef twice = dual_algebra(*cone.dual_ref());
    return twice->same_structure(*alg) ? 0.0 : 1.0;
  });
}

void cone_checks(Runner& r, const ConeDescriptor& cone, const SelftestOptions& opt) {
  const AlgebraRef& alg = cone.algebra_ref();
  const int m = cone.rank();
  const std::vector<TriangularMatrix> sample = sample_group_elements(alg, opt.samples, opt.seed + 5);
  RoundtripStats stats;
  r.check("cone.roundtrip", 1e-9, [&] {
    stats = parallel_roundtrip(cone, sample);
    return stats.roundtrip;
  });
  r.check("cone.p_identity", 1e-10, [&] { return stats.p_identity; });
  r.check("cone.determinant", 1e-10, [&] { return stats.determinant; });
  r.check("cone.orbit_membership", 0.0, [&] {
    double outside = 0.0;
    for (const auto& a : sample) outside += membership(cone, herm_from_triangular(a)) ? 0.0 : 1.0;
    return outside;
  });
  r.check("cone.g_prime_invariance", 1e-9, [&] {
    std::mt19937_64 rng(opt.seed + 6);
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const auto u = sample_unipotent_element(alg, rng);
      const auto b = sample_group_element(alg, rng);
      const auto p_ab = p_polynomials(cone, herm_from_triangular(triangular_product(u, b)));
      const auto p_b = p_polynomials(cone, herm_from_triangular(b));
      for (int i = 0; i < m; ++i) worst = std::max(worst, rel(p_ab[static_cast<std::size_t>(i)], p_b[static_cast<std::size_t>(i)]));
    }
    return worst;
  });
  r.check("cone.homogeneity", 1e-10, [&] {
    std::mt19937_64 rng(opt.seed + 7);
    double worst = 0.0;
    const double lambda = 1.7;
    for (int k = 0; k < opt.samples; ++k) {
      const HermMatrix x = random_interior(cone, rng);
      const HermMatrix lx = x.scaled(lambda);
      const auto p = p_polynomials(cone, x);
      const auto lp = p_polynomials(cone, lx);
      for (int i = 1; i <= m; ++i) {
        const double deg = std::pow(2.0, m - i);
        worst = std::max(worst, rel(lp[static_cast<std::size_t>(i - 1)], std::pow(lambda, deg) * p[static_cast<std::size_t>(i - 1)]));
      }
      if (cone.is_special_rank3()) {
        worst = std::max(worst, rel(d_cubic(cone, lx), std::pow(lambda, 3) * d_cubic(cone, x)));
        worst = std::max(worst, rel(d_prime(cone, lx), std::pow(lambda, 3) * d_prime(cone, x)));
      }
      if (!membership(cone, lx)) worst = INFINITY;
    }
    return worst;
  });
  r.check("cone.chi_homogeneity", 1e-10, [&] {
    std::mt19937_64 rng(opt.seed + 8);
    double degree = 0.0;
    for (int i = 1; i <= m; ++i) degree += std::pow(2.0, m - i) * cone.chi_exponents()[static_cast<std::size_t>(i - 1)].value();
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const HermMatrix x = random_interior(cone, rng);
      const double diff = log_characteristic_function(cone, x.scaled(2.0)) - log_characteristic_function(cone, x);
      worst = std::max(worst, std::abs(diff - degree * std::log(2.0)) / std::max(1.0, std::abs(degree)));
    }
    return worst;
  });
  r.check("cone.dual_membership", 0.0, [&] {
    double outside = 0.0;
    for (const auto& a : sample) outside += dual_membership(cone, dual_herm_from_triangular(a)) ? 0.0 : 1.0;
    return outside;
  });
  r.check("cone.dual_pairing", 0.0, [&] {
    std::mt19937_64 rng(opt.seed + 9);
    double non_positive = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const HermMatrix x = random_interior(cone, rng);
      const HermMatrix y = dual_herm_from_triangular(sample_group_element(alg, rng));
      non_positive += herm_inner(x, y) > 0.0 ? 0.0 : 1.0;
    }
    return non_positive;
  });
  if (!cone.is_special_rank3()) return;
  r.check("cone.d_prime_dual_route", 1e-10, [&] {
    std::mt19937_64 rng(opt.seed + 10);
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const HermMatrix x = random_interior(cone, rng);
      const HermMatrix y = dual_herm_from_triangular(sample_group_element(alg, rng));
      worst = std::max(worst, rel(d_prime(cone, x), d_prime_via_dual(cone, x)));
      worst = std::max(worst, rel(d_prime(cone, y), d_prime_via_dual(cone, y)));
    }
    return worst;
  });
  r.check("cone.dual_determinant", 1e-10, [&] {
    double worst = 0.0;
    for (const auto& a : sample) {
      const double prod = std::pow(a.diag(1) * a.diag(2) * a.diag(3), 2);
      worst = std::max(worst, rel(d_prime(cone, dual_herm_from_triangular(a)), prod));
    }
    return worst;
  });
  const CliffordModule& mod = *cone.algebra().clifford();
  if (mod.dim_v() == 1 && mod.dim_s0() == 1) {
    r.check("cone.self_adjoint_d_equals_d_prime", 1e-12, [&] {
      double worst = 0.0;
      for (const auto& a : sample) {
        const HermMatrix x = herm_from_triangular(a);
        worst = std::max(worst, std::abs(d_cubic(cone, x) - d_prime(cone, x)));
      }
      return worst;
    });
  }
  r.check("cubics.d_g_prime_invariance", 1e-9, [&] {
    std::mt19937_64 rng(opt.seed + 11);
    double worst = 0.0;
    for (int k = 0; k < opt.samples; ++k) {
      const auto u = sample_unipotent_element(alg, rng);
      const auto b = sample_group_element(alg, rng);
      worst = std::max(worst, rel(d_cubic(cone, herm_from_triangular(triangular_product(u, b))),
                                  d_cubic(cone, herm_from_triangular(b))));
    }
    return worst;
  });
}

void cubic_checks(Runner& r, const ConeDescriptor& cone, const SelftestOptions& opt) {
  const InvariantCubic q = sample_cubic(cone);
  const int points = std::min(opt.samples, 20);
  std::mt19937_64 rng(opt.seed + 12);
  std::vector<HermMatrix> level;
  for (int k = 0; k < points; ++k) level.push_back(project_to_level_set(q, random_interior(cone, rng)));

  r.check("cubics.hessian_finite_difference", 1e-5, [&] {
    double worst = 0.0;
    for (const HermMatrix& x : level) worst = std::max(worst, componentwise_rel(hessian_log(q, x), fd_hessian_log(q, x, 1e-5)));
    return worst;
  });
  r.check("cubics.hessian_symmetry", 1e-12, [&] {
    double worst = 0.0;
    for (const HermMatrix& x : level) {
      const Mat h = hessian_log(q, x);
      worst = std::max(worst, (h - h.transpose()).cwiseAbs().maxCoeff() / h.cwiseAbs().maxCoeff());
    }
    return worst;
  });
  r.check("cubics.scaling_covariance", 1e-10, [&] {
    double worst = 0.0;
    const double lambda = 3.0;
    for (const HermMatrix& x : level) {
      const Mat h = hessian_log(q, x);
      const Mat hl = hessian_log(q, x.scaled(lambda)) * lambda * lambda;
      worst = std::max(worst, (h - hl).cwiseAbs().maxCoeff() / h.cwiseAbs().maxCoeff());
    }
    return worst;
  });
  r.check("cubics.tangent_basis", 1e-10, [&] {
    double worst = 0.0;
    for (const HermMatrix& x : level) worst = std::max(worst, tangent_restriction(q, x).tangent_residual);
    return worst;
  });
  r.check("cubics.identity_positive_definite", 0.0, [&] {
    const InvariantCubic base =
        cone.rank() == 2 ? InvariantCubic::normalized(cone, 0.0) : InvariantCubic::normalized(cone, 0.0, 0.0);
    const HessianReport rep = tangent_restriction(base, HermMatrix::identity(cone.algebra_ref()));
    return rep.verdict() == Verdict::positive_definite ? 0.0 : 1.0;
  });
  r.check("cubics.degenerate_never_pd", 0.0, [&] {
    const InvariantCubic degenerate =
        cone.rank() == 2 ? InvariantCubic::rank2(cone, 1.0, 0.0) : InvariantCubic::rank3(cone, 0.0, 1.0, -0.5);
    const DiagonalReport rep = admissibility_on_diagonal(degenerate, DiagonalGrid{1e-2, 1e2, 10, 0, 0.0});
    return static_cast<double>(rep.pd_count);
  });
  r.check("cubics.no_g0_bookkeeping", 0.0, [&] {
    const NoG0Report rep = no_g0_cubic_check(cone);
    const bool expected = cone.rank() == 2 ? (!rep.exists && rep.pi_degree == 2) : (rep.exists && rep.pi_degree == 3);
    return expected ? 0.0 : 1.0;
  });
}

}  // namespace

SelftestReport run_selftest(const ConeSpec& spec, const SelftestOptions& options) {
  if (options.corrupt_gamma && spec.rank != 3) throw ParseError("gamma corruption needs a rank-3 spec");
  Runner r;
  std::optional<ConeDescriptor> cone;
  if (spec.rank == 3) {
    CliffordModule module = build_clifford_module(spec.dim, spec.signature, spec.multiplicity);
    if (options.corrupt_gamma) module = corrupt_gamma(module, 0, 0, 0, 1);
    clifford_checks(r, spec, module, options);
    cone.emplace(rank3_special(module));
  } else {
    cone.emplace(build_cone(spec));
  }
  algebra_checks(r, *cone, options);
  if (!cone->is_euclidean()) {
    r.skip("cone.*", "indefinite algebra: cone and admissibility checks need a Euclidean algebra");
    return r.report;
  }
  cone_checks(r, *cone, options);
  cubic_checks(r, *cone, options);
  return r.report;
}

}  // namespace vinberg
