#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "plp/serialize.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

TEST(Serialize, RationalAndPolyRoundTrip) {
  for (const Rational& r : {Rational(0), q(-7, 3), q(123456789, 1000000007), Rational(5)}) {
    EXPECT_EQ(rational_from_json(to_json(r)), r);
    EXPECT_TRUE(to_json(r).is_string());
  }
  EXPECT_EQ(to_json(q(-7, 3)).get<std::string>(), "-7/3");
  EXPECT_EQ(rational_from_json(Json(4)), Rational(4));
  Poly f(std::vector<Rational>{q(1, 2), Rational(0), q(-3, 5)});
  EXPECT_EQ(poly_from_json(to_json(f)), f);
  EXPECT_EQ(poly_from_json(to_json(Poly())), Poly());
}

TEST(Serialize, MalformedInput) {
  EXPECT_THROW(rational_from_json(Json("1/0")), std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json("x")), std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json::array()), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json("1/2")), std::invalid_argument);
  EXPECT_THROW(qmatrix_from_json(Json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
  EXPECT_THROW(module_from_json(Json::parse(R"({"p": 4, "phi": [["1"]], "weights": [0]})")), std::invalid_argument);
  EXPECT_THROW(load_module("/nonexistent/module.json"), std::invalid_argument);
}

TEST(Serialize, MatricesAndModules) {
  QMatrix m{{q(1, 3), Rational(2)}, {Rational(0), q(-1, 9)}};
  EXPECT_EQ(qmatrix_from_json(to_json(m)), m);
  PolyMatrix pm = PolyMatrix::diagonal({Poly::x(), Poly(q(2, 3))});
  EXPECT_EQ(polymatrix_from_json(to_json(pm)), pm);

  FilteredPhiModule d = dim2_module(Prime(5), 2, Rational(3), Rational(2));
  EXPECT_EQ(module_from_json(to_json(d)), d);
  Json no_basis = to_json(d);
  no_basis.erase("basis");
  EXPECT_EQ(module_from_json(no_basis), d);

  const std::string path = ::testing::TempDir() + "plp_module.json";
  std::ofstream(path) << to_json(d).dump();
  EXPECT_EQ(load_module(path), d);
  std::remove(path.c_str());

  Refinement r = standard_refinement({q(1, 3), Rational(1)}, QMatrix{{Rational(1), Rational(-5)}, {Rational(0), Rational(1)}});
  Refinement back = refinement_from_json(to_json(r));
  EXPECT_EQ(back.P, r.P);
  EXPECT_EQ(back.alphas, r.alphas);
  EXPECT_EQ(back.eigenbasis, r.eigenbasis);
}

TEST(Serialize, ZStateRoundTripContinuesIdentically) {
  Tower t(3);
  FilteredPhiModule d = dim2_module(t.p, 1, Rational(1), Rational(2));
  ZState s = run_recursion(start_recursion(t, d, default_interval(d), 0), 2).back();
  ZState back = zstate_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(back.Z, s.Z);
  EXPECT_EQ(back.level, s.level);
  EXPECT_EQ(back.J, s.J);
  EXPECT_EQ(advance(back).Z, advance(s).Z);

  Json bad = to_json(s);
  bad["theta"].erase(0);
  EXPECT_THROW(zstate_from_json(bad), std::invalid_argument);
}

TEST(Serialize, ReportJsonAndCsv) {
  Report r;
  r.kind = "demo";
  r.columns = {"name", "value"};
  r.rows = {{"plain", "1/2"}, {"has,comma", "say \"hi\""}};
  r.ok = {true, false};
  r.notes = {"a note"};
  Json j = to_json(r);
  EXPECT_EQ(j["kind"], "demo");
  EXPECT_FALSE(j["all_ok"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(to_csv(r), "name,value,status\nplain,1/2,ok\n\"has,comma\",\"say \"\"hi\"\"\",violation\n");
}
