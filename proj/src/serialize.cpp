#include "vinberg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace vinberg {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Signature parse_signature(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("signature must be [p, q]");
  const int p = as_int(j[0], "signature[0]");
  const int q = as_int(j[1], "signature[1]");
  if (p < 0 || q < 0) throw ParseError("signature entries must be non-negative");
  return {p, q};
}

Vec parse_vec(const Json& j, long expected, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  if (static_cast<long>(j.size()) != expected) {
    throw ParseError(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(expected));
  }
  Vec v(expected);
  for (long i = 0; i < expected; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) throw ParseError(what + " entries must be numbers");
    v(i) = j[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (long r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r).transpose()));
  return rows;
}

std::string block_key(int i, int j) { return std::to_string(i) + std::to_string(j); }

Json signature_json(Signature s) { return Json::array({s.positive, s.negative}); }

Json rational_json(const Rational& r) {
  if (r.den == 1) return r.num;
  return r.value();
}

void parse_blocks(const Json& j, const AlgebraRef& algebra, Vec& diag, std::vector<Vec>& blocks) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "rank" && key != "diag" && key != "offdiag") throw ParseError("unknown matrix field \"" + key + "\"");
  }
  const int m = algebra->rank();
  if (j.contains("rank") && as_int(j.at("rank"), "rank") != m) throw ParseError("matrix rank does not match the cone");
  diag = parse_vec(require_field(j, "diag"), m, "diag");
  blocks.assign(static_cast<std::size_t>(algebra->block_count()), Vec());
  const Json empty = Json::object();
  const Json& off = j.contains("offdiag") ? j.at("offdiag") : empty;
  if (!off.is_object()) throw ParseError("offdiag must be an object");
  std::set<std::string> known;
  for (int i = 1; i <= m; ++i) {
    for (int k = i + 1; k <= m; ++k) {
      const std::string key = block_key(i, k);
      known.insert(key);
      const long dim = algebra->block_dim(i, k);
      Vec& target = blocks[static_cast<std::size_t>(NilAlgebra::slot(i, k, m))];
      target = off.contains(key) ? parse_vec(off.at(key), dim, "offdiag." + key) : Vec::Zero(dim);
    }
  }
  for (const auto& [key, _] : off.items()) {
    if (!known.count(key)) throw ParseError("unknown offdiag block \"" + key + "\"");
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(key).dump() << colon;
        write(os, value, indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << (indent > 0 ? ", " : ",");
          write(os, j[i], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

ConeSpec parse_cone_spec(const Json& j) {
  if (!j.is_object()) throw ParseError("cone spec must be a JSON object");
  static const std::set<std::string> allowed{"rank", "dim_w", "dim_v", "signature", "multiplicity", "mult", "seed"};
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ParseError("unknown cone spec field \"" + key + "\"");
  }
  ConeSpec spec;
  spec.rank = as_int(require_field(j, "rank"), "rank");
  if (spec.rank == 2) {
    spec.dim = as_int(require_field(j, "dim_w"), "dim_w");
    if (j.contains("dim_v") || j.contains("multiplicity") || j.contains("mult")) {
      throw ParseError("rank-2 specs take dim_w and signature only");
    }
  } else if (spec.rank == 3) {
    spec.dim = as_int(require_field(j, "dim_v"), "dim_v");
    if (j.contains("dim_w")) throw ParseError("rank-3 specs take dim_v, not dim_w");
    if (j.contains("multiplicity") && j.contains("mult")) throw ParseError("give either multiplicity or mult");
    if (j.contains("multiplicity")) spec.multiplicity = as_int(j.at("multiplicity"), "multiplicity");
    if (j.contains("mult")) spec.multiplicity = as_int(j.at("mult"), "mult");
  } else {
    throw ParseError("rank must be 2 or 3");
  }
  if (spec.dim < 1) throw ParseError("dimension must be positive");
  if (spec.multiplicity < 1) throw ParseError("multiplicity must be positive");
  spec.signature = j.contains("signature") ? parse_signature(j.at("signature")) : Signature::euclidean(spec.dim);
  if (spec.signature.dim() != spec.dim) throw ParseError("signature does not add up to the dimension");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) throw ParseError("seed must be an integer");
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  return spec;
}

Json to_json(const ConeSpec& spec) {
  Json j;
  j["rank"] = spec.rank;
  j[spec.rank == 2 ? "dim_w" : "dim_v"] = spec.dim;
  j["signature"] = signature_json(spec.signature);
  if (spec.rank == 3) j["multiplicity"] = spec.multiplicity;
  j["seed"] = spec.seed;
  return j;
}

ConeDescriptor build_cone(const ConeSpec& spec) {
  if (spec.rank == 2) return ConeDescriptor(rank2_algebra(MetricSpace::pseudo_euclidean(spec.signature)));
  return ConeDescriptor(rank3_special(build_clifford_module(spec.dim, spec.signature, spec.multiplicity)));
}

Json to_json(const CliffordModule& module) {
  Json j;
  j["dim_v"] = module.dim_v();
  j["signature"] = signature_json(module.signature());
  j["multiplicity"] = module.multiplicity();
  j["dim_s0"] = module.dim_s0();
  j["dim_s1"] = module.dim_s1();
  Json gammas = Json::array();
  for (const IntMat& g : module.gammas()) {
    Json rows = Json::array();
    for (long r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (long c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
      rows.push_back(row);
    }
    gammas.push_back(rows);
  }
  j["gammas"] = gammas;
  return j;
}

Json to_json(const NilAlgebra& algebra) {
  Json j;
  j["rank"] = algebra.rank();
  Json blocks = Json::object();
  for (int i = 1; i <= algebra.rank(); ++i) {
    for (int k = i + 1; k <= algebra.rank(); ++k) {
      blocks[block_key(i, k)] = Json{{"dim", algebra.block_dim(i, k)},
                                     {"signature", signature_json(algebra.space(i, k).signature())}};
    }
  }
  j["blocks"] = blocks;
  switch (algebra.product_kind()) {
    case ProductKind::none:
      j["product"] = "none";
      break;
    case ProductKind::spinor_vector:
      j["product"] = "spinor_vector";
      break;
    case ProductKind::vector_spinor:
      j["product"] = "vector_spinor";
      break;
  }
  if (algebra.clifford()) j["clifford"] = to_json(*algebra.clifford());
  return j;
}

Json to_json(const ConeDescriptor& cone) {
  Json j;
  j["rank"] = cone.rank();
  j["dim_herm"] = cone.dim_herm();
  j["euclidean"] = cone.is_euclidean();
  Json n = Json::array();
  Json n_exact = Json::array();
  for (const Rational& r : cone.exponents()) {
    n.push_back(rational_json(r));
    n_exact.push_back(r.str());
  }
  Json chi = Json::array();
  for (const Rational& r : cone.chi_exponents()) chi.push_back(r.str());
  j["exponents"] = n;
  j["exponents_exact"] = n_exact;
  j["chi_exponents"] = chi;
  j["chi_degree"] = cone.chi_degree().str();
  j["algebra"] = to_json(cone.algebra());
  return j;
}

Json to_json(const BlockMatrix& x) {
  Json j;
  j["rank"] = x.rank();
  j["diag"] = vec_json(x.diagonal());
  Json off = Json::object();
  for (int i = 1; i <= x.rank(); ++i) {
    for (int k = i + 1; k <= x.rank(); ++k) off[block_key(i, k)] = vec_json(x.block(i, k));
  }
  j["offdiag"] = off;
  return j;
}

Json to_json(const HessianReport& report) {
  Json j;
  j["point"] = to_json(report.point);
  j["verdict"] = to_string(report.verdict());
  j["margin"] = report.analysis.margin;
  j["min_eigenvalue"] = report.analysis.min_eigenvalue;
  j["leading_minors"] = report.analysis.leading_minors;
  j["pivots"] = report.analysis.pivots;
  j["tangent_residual"] = report.tangent_residual;
  j["gradient"] = vec_json(report.gradient);
  j["hessian"] = mat_json(report.hessian);
  j["restricted"] = mat_json(report.restricted);
  j["transported"] = mat_json(report.transported);
  return j;
}

HermMatrix herm_from_json(const Json& j, const AlgebraRef& algebra) {
  Vec diag;
  std::vector<Vec> blocks;
  parse_blocks(j, algebra, diag, blocks);
  return HermMatrix(algebra, std::move(diag), std::move(blocks));
}

TriangularMatrix triangular_from_json(const Json& j, const AlgebraRef& algebra) {
  Vec diag;
  std::vector<Vec> blocks;
  parse_blocks(j, algebra, diag, blocks);
  return TriangularMatrix(algebra, std::move(diag), std::move(blocks));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

}  // namespace vinberg
