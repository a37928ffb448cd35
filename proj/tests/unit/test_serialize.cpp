#include <gtest/gtest.h>

#include "vinberg/serialize.hpp"

using namespace vinberg;

TEST(ConeSpec, ParsesAndBuilds) {
  const ConeSpec s = parse_cone_spec(parse_json(R"({"rank":3,"dim_v":8,"mult":1,"seed":7})"));
  EXPECT_EQ(s.rank, 3);
  EXPECT_EQ(s.dim, 8);
  EXPECT_EQ(s.multiplicity, 1);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_TRUE(s.signature.is_euclidean());
  EXPECT_EQ(build_cone(s).dim_herm(), 27);
  EXPECT_EQ(build_cone(parse_cone_spec(parse_json(R"({"rank":2,"dim_w":9})"))).dim_herm(), 11);
  const ConeSpec p = parse_cone_spec(parse_json(R"({"rank":3,"dim_v":3,"signature":[2,1],"multiplicity":2})"));
  EXPECT_EQ(p.signature, (Signature{2, 1}));
  EXPECT_EQ(p.multiplicity, 2);
}

TEST(ConeSpec, RejectsBadInput) {
  for (const char* text : {R"({"rank":3,"dim_v":1,"colour":1})", R"({"rank":4,"dim_v":1})", R"({"rank":3})",
                           R"({"rank":2,"dim_w":1,"dim_v":1})", R"({"rank":3,"dim_v":2,"signature":[1,0]})",
                           R"({"rank":3,"dim_v":0})", R"({"rank":3,"dim_v":1,"mult":1,"multiplicity":1})",
                           R"([1,2])", R"({"rank":"3","dim_v":1})"}) {
    EXPECT_THROW(parse_cone_spec(parse_json(text)), ParseError) << text;
  }
  EXPECT_THROW(parse_json("{rank:3"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/spec.json"), ParseError);
}

TEST(ConeSpec, RoundtripsThroughJson) {
  const ConeSpec s = parse_cone_spec(parse_json(R"({"rank":3,"dim_v":4,"signature":[3,1],"mult":2,"seed":3})"));
  const ConeSpec t = parse_cone_spec(to_json(s));
  EXPECT_EQ(t.rank, s.rank);
  EXPECT_EQ(t.dim, s.dim);
  EXPECT_EQ(t.signature, s.signature);
  EXPECT_EQ(t.multiplicity, s.multiplicity);
  EXPECT_EQ(t.seed, s.seed);
}

TEST(Matrices, RoundtripThroughJson) {
  const ConeDescriptor c = build_cone(parse_cone_spec(parse_json(R"({"rank":3,"dim_v":2})")));
  Vec flat(c.dim_herm());
  for (long i = 0; i < flat.size(); ++i) flat(i) = 0.1 * static_cast<double>(i) + 1.0 / 3.0;
  const HermMatrix x = HermMatrix::from_flat(c.algebra_ref(), flat);
  const Json j = parse_json(dump(to_json(x)));
  EXPECT_EQ(herm_from_json(j, c.algebra_ref()).flatten(), flat);
  const TriangularMatrix a = TriangularMatrix::from_flat(c.algebra_ref(), flat);
  EXPECT_EQ(triangular_from_json(to_json(a), c.algebra_ref()).flatten(), flat);
}

TEST(Matrices, MissingBlocksDefaultToZeroAndUnknownKeysFail) {
  const ConeDescriptor c = build_cone(parse_cone_spec(parse_json(R"({"rank":2,"dim_w":1})")));
  const HermMatrix x = herm_from_json(parse_json(R"({"diag":[2,3]})"), c.algebra_ref());
  EXPECT_EQ(x.block(1, 2)(0), 0.0);
  EXPECT_THROW(herm_from_json(parse_json(R"({"diag":[2,3],"extra":1})"), c.algebra_ref()), ParseError);
  EXPECT_THROW(herm_from_json(parse_json(R"({"diag":[2,3],"offdiag":{"13":[1]}})"), c.algebra_ref()), ParseError);
  EXPECT_THROW(herm_from_json(parse_json(R"({"diag":[2]})"), c.algebra_ref()), ParseError);
  EXPECT_THROW(herm_from_json(parse_json(R"({"diag":[2,3],"offdiag":{"12":[1,2]}})"), c.algebra_ref()), ParseError);
}

TEST(Dump, FullPrecisionFloats) {
  Json j;
  j["third"] = 1.0 / 3.0;
  j["one"] = 1.0;
  j["n"] = 2;
  j["v"] = std::vector<double>{0.5, -2.0};
  EXPECT_EQ(dump(j), "{\n  \"third\": 0.33333333333333331,\n  \"one\": 1.0,\n  \"n\": 2,\n  \"v\": [0.5, -2.0]\n}");
  EXPECT_EQ(parse_json(dump(j))["third"].get<double>(), 1.0 / 3.0);
}

TEST(Descriptor, Json) {
  const ConeDescriptor c = build_cone(parse_cone_spec(parse_json(R"({"rank":3,"dim_v":1,"mult":1})")));
  const Json j = to_json(c);
  EXPECT_EQ(j.at("dim_herm").get<int>(), 6);
  EXPECT_EQ(j.at("exponents"), Json::parse("[2, 2, 2]"));
}
