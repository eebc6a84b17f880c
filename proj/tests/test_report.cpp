#include <gtest/gtest.h>

#include <cstdlib>

#include "generators.hpp"
#include "spincent/commands.hpp"

using namespace spincent;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value) setenv("SPINCENT_MAX_N", value, 1);
    else unsetenv("SPINCENT_MAX_N");
  }
  ~EnvGuard() { unsetenv("SPINCENT_MAX_N"); }
};

}  // namespace

TEST(Json, RationalMatrixRoundTrip) {
  gen::Source src;
  for (int t = 0; t < 20; ++t) {
    RMatrix m = src.matrix(3, 5);
    EXPECT_TRUE(rational_matrix_from_json(json::parse(to_json(m).dump())) == m);
  }
  EXPECT_THROW(rational_matrix_from_json(json::parse(R"([["1/1"],["1/1","2/1"]])")), std::invalid_argument);
  EXPECT_THROW(rational_matrix_from_json(json::parse(R"([["0.5"]])")), std::invalid_argument);
}

TEST(Json, GaussianMatrixRoundTrip) {
  gen::Source src;
  CMatrix m(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = src.gaussian();
  EXPECT_TRUE(gaussian_matrix_from_json(to_json(m)) == m);
}

TEST(Json, ReportRoundTrip) {
  Report rep;
  rep.command = "verify thm1";
  rep.args = {{"seed", 7}};
  ReportRow a;
  a.key = "r=3,m=2";
  a.source = "single-block table, residue +-3";
  a.expected_type = "sp(2)";
  a.expected_dim = 10;
  a.computed_dim = 10;
  a.center = 0;
  a.derived = 10;
  a.killing = "(0,10,0)";
  a.pass = true;
  ReportRow b;
  b.key = "n=3";
  b.expected = "true";
  b.computed = "false";
  b.note = "x, \"y\"";
  rep.rows = {a, b};
  Report back = report_from_json(json::parse(to_json(rep).dump()));
  EXPECT_EQ(back.command, rep.command);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[0].expected_dim, a.expected_dim);
  EXPECT_EQ(back.rows[0].killing, a.killing);
  EXPECT_FALSE(back.rows[1].expected_dim.has_value());
  EXPECT_EQ(back.rows[1].note, b.note);
  EXPECT_FALSE(back.pass());
  json bad = to_json(rep);
  bad["schema_version"] = 99;
  EXPECT_THROW(report_from_json(bad), std::invalid_argument);
}

TEST(Csv, HeaderAndQuoting) {
  Report rep;
  ReportRow r;
  r.key = "a,b";
  r.expected_type = "so(3)";
  r.expected_dim = 3;
  r.pass = true;
  rep.rows = {r};
  const std::string csv = to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "case,expected_type,expected_dim,computed_dim,center,derived,killing,pass");
  EXPECT_NE(csv.find("\"a,b\",so(3),3,,,,,true"), std::string::npos);
}

TEST(Commands, SizeGuardUsesFlagThenEnvironmentThenDefault) {
  RunConfig cfg;
  cfg.command = "centralize";
  cfg.r = 11;
  cfg.m = 3;
  {
    EnvGuard env(nullptr);
    EXPECT_EQ(resolve_max_n(cfg), kDefaultMaxN);
    EXPECT_THROW(cmd_centralize(cfg), UsageError);
  }
  {
    EnvGuard env("8");
    cfg.m = 1;
    EXPECT_EQ(resolve_max_n(cfg), 8u);
    EXPECT_THROW(cmd_centralize(cfg), UsageError);
    cfg.max_n = 64;
    EXPECT_EQ(resolve_max_n(cfg), 64u);
    EXPECT_TRUE(cmd_centralize(cfg).pass());
  }
  {
    EnvGuard env("abc");
    cfg.max_n.reset();
    EXPECT_THROW(resolve_max_n(cfg), UsageError);
  }
}

TEST(Commands, ShapeValidation) {
  RunConfig cfg;
  cfg.r = 4;
  EXPECT_THROW(shape_of(cfg), UsageError);
  cfg.m2 = 0;
  cfg.m = 0;
  EXPECT_THROW(shape_of(cfg), UsageError);
  cfg.r = 3;
  cfg.m = 1;
  cfg.m2 = 1;
  EXPECT_THROW(shape_of(cfg), UsageError);
  cfg.m2.reset();
  EXPECT_EQ(shape_of(cfg).kind, ShapeKind::single);
}

TEST(Commands, VerifyRejectsFloatAndUnknownSuites) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.suite = "prop1";
  cfg.backend = Backend::floating;
  EXPECT_THROW(cmd_verify(cfg), UsageError);
  cfg.backend = Backend::exact;
  cfg.suite = "nope";
  EXPECT_THROW(cmd_verify(cfg), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_THROW(parse_backend("fast"), UsageError);
}

TEST(Commands, CentralizeRowShape) {
  RunConfig cfg;
  cfg.command = "centralize";
  cfg.r = 6;
  cfg.m = 2;
  Report rep = cmd_centralize(cfg);
  ASSERT_EQ(rep.rows.size(), 1u);
  const ReportRow& row = rep.rows.front();
  EXPECT_EQ(row.expected_type, "u(2)");
  EXPECT_EQ(row.computed_dim, std::optional<std::size_t>(4));
  EXPECT_EQ(row.center, std::optional<std::size_t>(1));
  EXPECT_EQ(row.derived, std::optional<std::size_t>(3));
  EXPECT_TRUE(row.pass);
  json j = to_json(rep);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["rows"][0]["case"], "r=6,m=2");
}

TEST(Commands, ExportEmptyCentralizerAndRepresentation) {
  RunConfig cfg;
  cfg.command = "export";
  cfg.target = "centralizer";
  cfg.r = 8;
  cfg.m = 1;
  cfg.m2 = 1;
  json j = cmd_export(cfg);
  EXPECT_EQ(j["dim"], 0);
  EXPECT_TRUE(j["matrices"].empty());
  cfg.target = "rep";
  cfg.r = 4;
  cfg.m2.reset();
  EXPECT_THROW(cmd_export(cfg), UsageError);
  cfg.label = "+";
  json rep = cmd_export(cfg);
  EXPECT_EQ(rep["dim"], 4);
  auto mats = matrices_from_export(rep);
  ASSERT_EQ(mats.size(), 6u);
  for (const auto& m : mats) EXPECT_TRUE(squares_to_minus_identity(m));
}

TEST(Commands, DimsRowsAllPass) {
  RunConfig cfg;
  cfg.command = "dims";
  cfg.r_max = 9;
  Report rep = cmd_dims(cfg);
  EXPECT_FALSE(rep.rows.empty());
  EXPECT_TRUE(rep.pass());
  cfg.r_max = 41;
  EXPECT_THROW(cmd_dims(cfg), UsageError);
}
