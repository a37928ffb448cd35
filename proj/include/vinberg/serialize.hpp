#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "vinberg/cubics.hpp"

namespace vinberg {

using Json = nlohmann::ordered_json;

/// Malformed or unknown input in a JSON document.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cone request. rank 2: dim_w and signature of W; rank 3: dim_v, signature
/// of V and multiplicity ("mult" is accepted as an alias).
struct ConeSpec {
  int rank = 3;
  int dim = 1;
  Signature signature{1, 0};
  int multiplicity = 1;
  std::uint64_t seed = 0;
};

ConeSpec parse_cone_spec(const Json& j);
Json to_json(const ConeSpec& spec);
ConeDescriptor build_cone(const ConeSpec& spec);

Json to_json(const CliffordModule& module);
Json to_json(const NilAlgebra& algebra);
Json to_json(const ConeDescriptor& cone);
/// {rank, diag, offdiag: {"12": [...], ...}}.
Json to_json(const BlockMatrix& x);
Json to_json(const HessianReport& report);

HermMatrix herm_from_json(const Json& j, const AlgebraRef& algebra);
TriangularMatrix triangular_from_json(const Json& j, const AlgebraRef& algebra);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Like Json::dump but prints every float with 17 significant digits, so
/// that output is exact and byte-stable.
std::string dump(const Json& j, int indent = 2);

}  // namespace vinberg
