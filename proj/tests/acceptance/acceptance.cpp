// Acceptance checks. Usage: acceptance [ID...] [--cli PATH]
// With no IDs every criterion runs. Prints one PASS/FAIL line per criterion;
// exits nonzero when any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vinberg/kernels.hpp"
#include "vinberg/sampling.hpp"

using namespace vinberg;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

std::string g_cli;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ConeDescriptor rank2(int dim_w) { return ConeDescriptor(rank2_algebra(MetricSpace::euclidean(dim_w))); }

ConeDescriptor rank3(int dv) {
  return ConeDescriptor(rank3_special(build_clifford_module(dv, Signature::euclidean(dv), 1)));
}

std::vector<std::pair<std::string, ConeDescriptor>> sample_cones() {
  std::vector<std::pair<std::string, ConeDescriptor>> out;
  for (int k : {1, 4, 9}) out.emplace_back("rank2/w" + std::to_string(k), rank2(k));
  for (int dv : {1, 2, 4, 8}) out.emplace_back("rank3/v" + std::to_string(dv), rank3(dv));
  return out;
}

// Criteria 1-3 share one sample per cone.
Outcome roundtrip_family(int which) {
  const auto t0 = Clock::now();
  Outcome o;
  std::ostringstream d;
  const double tol = which == 1 ? 1e-9 : 1e-10;
  for (const auto& [name, cone] : sample_cones()) {
    const auto elements = sample_group_elements(cone.algebra_ref(), 1000, 20240601);
    const RoundtripStats s = parallel_roundtrip(cone, elements);
    const double err = which == 1 ? s.roundtrip : which == 2 ? s.p_identity : s.determinant;
    o.pass = o.pass && err <= tol && s.samples == 1000;
    d << name << "=" << fmt("%.2e", err) << " ";
  }
  const double t = seconds_since(t0);
  if (which == 1) o.pass = o.pass && t < 30.0;
  d << "tol=" << fmt("%.0e", tol) << " t=" << fmt("%.2fs", t);
  o.detail = d.str();
  return o;
}

Outcome c4() {
  Outcome o;
  double worst = 0.0;
  for (int dv = 1; dv <= 8; ++dv) {
    const IsometryReport r = verify_isometry(build_clifford_module(dv, Signature::euclidean(dv), 1), 1000, 4);
    worst = std::max(worst, r.max_deviation);
    o.pass = o.pass && r.samples == 1000 && r.max_deviation <= 1e-12;
  }
  o.detail = "max deviation " + fmt("%.2e", worst) + " over dim_v 1..8, 1000 samples each";
  return o;
}

std::vector<InvariantCubic> hessian_configs() {
  std::vector<InvariantCubic> out;
  for (int k : {1, 4, 9})
    for (double eps : {-1.0, -0.1, 0.0, 0.5, 2.0}) out.push_back(InvariantCubic::normalized(rank2(k), eps));
  for (int dv : {1, 4, 8})
    for (auto [e1, e2] : {std::pair{0.0, 0.0}, {-2.0, 0.0}, {0.5, -0.25}, {1.0, -1.0}, {1.0, 0.1}, {-0.5, 1.0}})
      out.push_back(InvariantCubic::normalized(rank3(dv), e1, e2));
  return out;
}

Outcome c5() {
  Outcome o;
  double worst_fd = 0.0, worst_closed = 0.0;
  int configs = 0;
  for (const InvariantCubic& q : hessian_configs()) {
    ++configs;
    const oracle::LPoly poly = oracle::cubic_poly(q);
    std::mt19937_64 rng(555);
    int done = 0;
    while (done < 50) {
      // Points of the level set q = 1, where the metric lives.
      const HermMatrix x0 = herm_from_triangular(sample_group_element(q.cone().algebra_ref(), rng));
      if (eval_cubic(q, x0) <= 0.0) continue;
      const HermMatrix x = project_to_level_set(q, x0);
      worst_fd = std::max(worst_fd, oracle::componentwise_rel(hessian_log(q, x), oracle::fd_hessian_log(poly, x.flatten(), 1e-5)));
      ++done;
    }
    std::uniform_real_distribution<double> lg(-1.0, 1.0);
    const auto& c = q.coeffs();
    done = 0;
    while (done < 50) {
      const double x1 = std::pow(10.0, lg(rng)), x2 = std::pow(10.0, lg(rng)), x3 = std::pow(10.0, lg(rng));
      Mat closed;
      HermMatrix x = HermMatrix::identity(q.cone().algebra_ref());
      if (q.rank() == 2) {
        x = HermMatrix::diagonal_matrix(q.cone().algebra_ref(), Vec{{x1, x2}});
        closed = oracle::rank2_closed_form(x1, x2, c[0], q.cone().algebra().block_dim(1, 2));
      } else {
        x = HermMatrix::diagonal_matrix(q.cone().algebra_ref(), Vec{{x1, x2, x3}});
        const auto& mod = *q.cone().algebra().clifford();
        closed = oracle::rank3_closed_form(x1, x2, x3, c[1], c[2], mod.dim_s0(), mod.dim_v());
      }
      if (eval_cubic(q, x) <= 1e-6) continue;
      worst_closed = std::max(worst_closed, oracle::componentwise_rel(closed, hessian_log(q, x), oracle::kClosedFormFloor));
      ++done;
    }
  }
  o.pass = worst_fd <= 1e-5 && worst_closed <= 1e-10;
  o.detail = std::to_string(configs) + " configs; fd " + fmt("%.2e", worst_fd) + " (tol 1e-5), closed form " +
             fmt("%.2e", worst_closed) + " (tol 1e-10)";
  return o;
}

Outcome c6() {
  Outcome o;
  double worst = INFINITY;
  int total = 0;
  for (int k : {1, 4, 9}) {
    for (double eps : {-1.0, -0.1, 0.0, 0.5, 2.0}) {
      const DiagonalReport r = admissibility_on_diagonal(InvariantCubic::normalized(rank2(k), eps));
      o.pass = o.pass && r.all_pd && r.checked == 100 && r.min_margin > kWitnessMargin;
      worst = std::min(worst, r.min_margin);
      total += r.checked;
    }
  }
  o.detail = std::to_string(total) + " points, smallest margin " + fmt("%.3e", worst);
  return o;
}

Outcome c7() {
  const auto t0 = Clock::now();
  Outcome o;
  std::ostringstream d;
  DiagonalGrid grid30;
  grid30.points = 30;
  int a_points = 0;
  double a_margin = INFINITY;
  int b_found = 0, c_found = 0;
  for (int dv : {1, 4, 8}) {
    const ConeDescriptor cone = rank3(dv);
    for (double e1 : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
      const DiagonalReport r = admissibility_on_diagonal(InvariantCubic::normalized(cone, e1, 0.0), grid30);
      o.pass = o.pass && r.all_pd && r.checked > 0;
      a_points += r.checked;
      a_margin = std::min(a_margin, r.min_margin);
    }
    for (double e2 : {0.1, 1.0}) {
      const DiagonalReport r = admissibility_on_diagonal(InvariantCubic::normalized(cone, 0.0, e2));
      bool ok = false;
      for (const DiagonalSample& w : r.witnesses) {
        if (w.diag(2) <= 1e3 && (w.violates_constraint || w.verdict == Verdict::indefinite)) ok = true;
      }
      b_found += ok ? 1 : 0;
      o.pass = o.pass && ok;
    }
    for (double e2 : {-0.25, -1.0}) {
      const auto w = find_locally_admissible_point(InvariantCubic::normalized(cone, std::abs(e2), e2));
      const bool ok = w && w->verdict == Verdict::positive_definite && w->margin > kWitnessMargin;
      c_found += ok ? 1 : 0;
      o.pass = o.pass && ok;
    }
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && t < 120.0;
  d << "(a) " << a_points << " points all PD, min margin " << fmt("%.3e", a_margin) << "; (b) " << b_found
    << "/6 violating witnesses; (c) " << c_found << "/6 PD witnesses; t=" << fmt("%.1fs", t);
  o.detail = d.str();
  return o;
}

Outcome c8() {
  Outcome o;
  double worst_dual = 0.0, worst_self = 0.0;
  double min_pair = INFINITY;
  for (int dv : {1, 2, 4, 8}) {
    const ConeDescriptor cone = rank3(dv);
    std::mt19937_64 rng(8000 + static_cast<unsigned>(dv));
    for (int i = 0; i < 500; ++i) {
      const HermMatrix x = herm_from_triangular(sample_group_element(cone.algebra_ref(), rng));
      const double direct = d_prime(cone, x), via = d_prime_via_dual(cone, x);
      worst_dual = std::max(worst_dual, std::abs(direct - via) / std::abs(via));
    }
    for (int i = 0; i < 1000; ++i) {
      const HermMatrix x = herm_from_triangular(sample_group_element(cone.algebra_ref(), rng));
      const HermMatrix y = dual_herm_from_triangular(sample_group_element(cone.algebra_ref(), rng));
      min_pair = std::min(min_pair, herm_inner(x, y));
    }
  }
  const ConeDescriptor self = rank3(1);
  std::mt19937_64 rng(8100);
  for (int i = 0; i < 500; ++i) {
    const HermMatrix x = herm_from_triangular(sample_group_element(self.algebra_ref(), rng));
    worst_self = std::max(worst_self, std::abs(d_cubic(self, x) - d_prime(self, x)));
  }
  o.pass = worst_dual <= 1e-10 && min_pair > 0.0 && worst_self <= 1e-12;
  o.detail = "d' routes " + fmt("%.2e", worst_dual) + ", min <X,Y> " + fmt("%.3e", min_pair) + ", |d - d'| " +
             fmt("%.2e", worst_self);
  return o;
}

Outcome c9() {
  Outcome o;
  int checked = 0, pd = 0;
  DiagonalGrid grid;
  grid.points = 30;
  std::vector<InvariantCubic> cubics;
  for (int k : {1, 4, 9}) cubics.push_back(InvariantCubic::rank2(rank2(k), 1.0, 0.0));
  for (int dv : {1, 4, 8})
    for (auto [b, c] : {std::pair{1.0, 0.0}, {1.0, 1.0}, {1.0, -0.5}, {-1.0, 2.0}})
      cubics.push_back(InvariantCubic::rank3(rank3(dv), 0.0, b, c));
  for (const InvariantCubic& q : cubics) {
    const DiagonalReport r = admissibility_on_diagonal(q, grid);
    checked += r.checked;
    pd += r.pd_count;
    // Off-diagonal points on the level set as well.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const HermMatrix x = herm_from_triangular(sample_group_element(q.cone().algebra_ref(), rng));
      if (eval_cubic(q, x) <= 1e-6) continue;
      ++checked;
      pd += tangent_restriction(q, project_to_level_set(q, x)).verdict() == Verdict::positive_definite ? 1 : 0;
    }
  }
  o.pass = checked > 0 && pd == 0;
  o.detail = std::to_string(cubics.size()) + " cubics, " + std::to_string(checked) + " points, " +
             std::to_string(pd) + " positive definite";
  return o;
}

int run_cli(const std::string& args) {
  const int status = std::system((g_cli + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome c10() {
  Outcome o;
  if (g_cli.empty()) return {false, "no CLI path given"};
  const fs::path dir = fs::temp_directory_path() / ("vinberg_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path spec = dir / "spec.json";
  std::ofstream(spec) << R"({"rank": 3, "dim_v": 1, "mult": 1, "seed": 42})";
  const std::string scan = "scan --spec " + spec.string() + " --eps1 -2:2:0.5 --eps2 -1:1:0.25 --grid 30 --out ";
  const int s1 = run_cli(scan + (dir / "a.csv").string());
  const int s2 = run_cli(scan + (dir / "b.csv").string());
  const std::string a = slurp(dir / "a.csv");
  const bool identical = s1 == 0 && s2 == 0 && !a.empty() && a == slurp(dir / "b.csv");
  const auto t0 = Clock::now();
  const int st = run_cli("selftest --seed 42");
  const double t = seconds_since(t0);
  fs::remove_all(dir);
  o.pass = identical && st == 0 && t < 120.0;
  o.detail = std::string("scan rerun ") + (identical ? "byte-identical" : "differs") + " (" +
             std::to_string(std::count(a.begin(), a.end(), '\n')) + " lines); selftest exit " + std::to_string(st) +
             " in " + fmt("%.2fs", t);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"roundtrip decomposition", [] { return roundtrip_family(1); }},
      {"p-polynomial identity", [] { return roundtrip_family(2); }},
      {"determinant factorization", [] { return roundtrip_family(3); }},
      {"clifford isometry", c4},
      {"hessian oracles", c5},
      {"rank-2 admissibility", c6},
      {"rank-3 family classification", c7},
      {"duality", c8},
      {"degenerate cubics", c9},
      {"determinism and selftest", c10},
  };
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) {
      g_cli = argv[++i];
    } else if (!a.empty() && std::isdigit(static_cast<unsigned char>(a[0]))) {
      ids.push_back(std::atoi(a.c_str()));
    } else {
      g_cli = a;
    }
  }
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);

  bool all = true;
  for (int id : ids) {
    if (id < 1 || id > 10) {
      std::printf("unknown criterion %d\n", id);
      return 2;
    }
    const auto& [name, fn] = criteria[static_cast<std::size_t>(id - 1)];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
