#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vinberg/sampling.hpp"
#include "vinberg/selftest.hpp"

namespace {

using namespace vinberg;

enum ExitCode { kOk = 0, kInvariantFailure = 1, kUsage = 2, kUnsupported = 3 };

struct Options {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string x_path;
  std::string op;
  std::string eps1 = "-2:2:0.5";
  std::string eps2 = "-1:1:0.25";
  int grid = 100;
  int count = 1;
  bool dual = false;
  bool corrupt_gamma = false;
};

ConeSpec load_spec(const Options& o, bool required) {
  ConeSpec spec;
  if (!o.spec_path.empty()) {
    spec = parse_cone_spec(read_json_file(o.spec_path));
  } else if (required) {
    throw ParseError("--spec is required");
  }
  if (o.seed) spec.seed = *o.seed;
  return spec;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + o.out_path);
  out << text;
}

ParamRange parse_range(const std::string& text, const char* flag) {
  ParamRange r;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.hi, &r.step, &tail) != 3) {
    throw ParseError(std::string(flag) + " must be LO:HI:STEP");
  }
  if (!(r.step > 0.0) || r.hi < r.lo) throw ParseError(std::string(flag) + " needs STEP > 0 and HI >= LO");
  return r;
}

Json vector_json(const std::vector<double>& v) { return Json(v); }

int cmd_build(const Options& o) {
  const ConeSpec spec = load_spec(o, true);
  const ConeDescriptor cone = build_cone(spec);
  Json j;
  j["spec"] = to_json(spec);
  j["descriptor"] = to_json(cone);
  emit(o, dump(j) + "\n");
  return kOk;
}

int cmd_eval(const Options& o) {
  const ConeSpec spec = load_spec(o, true);
  const ConeDescriptor cone = build_cone(spec);
  if (o.x_path.empty()) throw ParseError("--x is required");
  const HermMatrix x = herm_from_json(read_json_file(o.x_path), cone.algebra_ref());
  Json j;
  j["op"] = o.op;
  if (o.op == "p") {
    j["result"] = vector_json(p_polynomials(cone, x));
  } else if (o.op == "d") {
    j["result"] = cone.rank() == 3 ? d_cubic(cone, x) : g_determinant_sq(cone, x);
  } else if (o.op == "pi2") {
    j["result"] = g_determinant_sq(cone, x);
  } else if (o.op == "dprime") {
    const double direct = d_prime(cone, x);
    const double dual = d_prime_via_dual(cone, x);
    j["result"] = direct;
    j["via_dual"] = dual;
    j["relative_difference"] = std::abs(direct - dual) / std::max(std::abs(dual), 1e-300);
  } else if (o.op == "chi") {
    j["result"] = characteristic_function(cone, x);
    j["log_result"] = log_characteristic_function(cone, x);
  } else if (o.op == "membership") {
    j["result"] = membership(cone, x);
    j["p"] = vector_json(p_polynomials(cone, x));
  } else if (o.op == "dual_membership") {
    j["result"] = dual_membership(cone, x);
  } else if (o.op == "decompose") {
    const GroupCoordinates gc = group_coordinates(cone, x);
    j["result"] = to_json(gc.element);
    j["residuals"] = vector_json(gc.residuals);
    j["reconstruction_residual"] = gc.max_relative_residual;
  } else {
    throw ParseError("unknown --op \"" + o.op + "\" (p, d, pi2, dprime, chi, membership, dual_membership, decompose)");
  }
  emit(o, dump(j) + "\n");
  return kOk;
}

int cmd_sample(const Options& o) {
  const ConeSpec spec = load_spec(o, true);
  const ConeDescriptor cone = build_cone(spec);
  if (o.count < 1) throw ParseError("--count must be positive");
  const auto elements = sample_group_elements(cone.algebra_ref(), o.count, spec.seed);
  Json out = Json::array();
  for (const auto& a : elements) {
    out.push_back(Json{{"element", to_json(a)},
                       {"X", to_json(o.dual ? dual_herm_from_triangular(a) : herm_from_triangular(a))}});
  }
  // A single sample is written as a bare matrix so it can be fed to `eval --x`.
  emit(o, dump(o.count == 1 ? out[0]["X"] : out) + "\n");
  return kOk;
}

int cmd_scan(const Options& o) {
  const ConeSpec spec = load_spec(o, true);
  const ParamRange e1 = parse_range(o.eps1, "--eps1");
  const ParamRange e2 = parse_range(o.eps2, "--eps2");
  if (o.grid < 2) throw ParseError("--grid must be at least 2");
  if (spec.rank != 3) throw UnsupportedError("scan needs a rank-3 cone");
  if (!spec.signature.is_euclidean()) throw UnsupportedError("scan needs a Euclidean cone");
  const ConeDescriptor cone = build_cone(spec);
  DiagonalGrid grid;
  grid.points = o.grid;
  emit(o, scan_csv(scan_parameter_plane(cone, e1, e2, grid)));
  return kOk;
}

int cmd_selftest(const Options& o) {
  ConeSpec spec = load_spec(o, false);
  SelftestOptions opt;
  opt.seed = spec.seed;
  opt.corrupt_gamma = o.corrupt_gamma;
  const SelftestReport report = run_selftest(spec, opt);
  std::cout << report.table();
  return report.passed() ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-2 and rank-3 Vinberg cones: evaluation, duality and admissible cubics"};
  app.require_subcommand(1);
  Options o;
  auto add_spec = [&o](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--spec", o.spec_path, "cone spec JSON file");
    if (required) opt->required();
    sub->add_option("--seed", o.seed, "seed for all sampling (overrides the spec)");
  };

  auto* build = app.add_subcommand("build", "print the cone descriptor");
  add_spec(build, true);
  build->add_option("--out", o.out_path, "output file (default stdout)");

  auto* eval = app.add_subcommand("eval", "evaluate an operation at a Hermitian matrix");
  add_spec(eval, true);
  eval->add_option("--x", o.x_path, "Hermitian matrix JSON file")->required();
  eval->add_option("--op", o.op, "p | d | pi2 | dprime | chi | membership | dual_membership | decompose")->required();
  eval->add_option("--out", o.out_path, "output file (default stdout)");

  auto* sample = app.add_subcommand("sample", "write random cone points A.A* (or A*.A with --dual)");
  add_spec(sample, true);
  sample->add_option("--count", o.count, "number of samples");
  sample->add_flag("--dual", o.dual, "sample the dual cone");
  sample->add_option("--out", o.out_path, "output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "classify d + eps1 p2 p3 + eps2 p3^3 over a parameter grid");
  add_spec(scan, true);
  scan->add_option("--eps1", o.eps1, "LO:HI:STEP");
  scan->add_option("--eps2", o.eps2, "LO:HI:STEP");
  scan->add_option("--grid", o.grid, "diagonal grid points per axis");
  scan->add_option("--out", o.out_path, "CSV output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  add_spec(selftest, false);
  selftest->add_flag("--corrupt-gamma", o.corrupt_gamma, "shift one gamma entry (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*eval) return cmd_eval(o);
    if (*sample) return cmd_sample(o);
    if (*scan) return cmd_scan(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
