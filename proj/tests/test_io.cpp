#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "volterra/config.h"
#include "volterra/csv.h"
#include "volterra/error.h"
#include "volterra/process.h"

namespace volterra {
namespace {

TEST(Csv, FormatRoundTrips) {
  for (double x : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) EXPECT_EQ(std::stod(csv::format(x)), x);
  EXPECT_EQ(csv::format(2.0), "2");
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv::quote("plain"), "plain");
  EXPECT_EQ(csv::quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv::quote("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, PathsHeaderAndRows) {
  const auto e = simulate_fbm(GridSpec(0.0, 1.0, 3), 0.7, 2, 1);
  std::ostringstream os;
  csv::write_paths(os, e);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "t,path_0,path_1");
  std::getline(is, line);
  EXPECT_EQ(line, "0,0,0");
  int rows = 1;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Csv, MatrixWithHeader) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0.5, 0.5, 2;
  std::ostringstream os;
  csv::write_matrix(os, m, {"m_0", "m_1"});
  EXPECT_EQ(os.str(), "m_0,m_1\n1,0.5\n0.5,2\n");
}

TEST(Config, ListAndMatrixParsing) {
  EXPECT_EQ(config::parse_list("1, 2 3"), (std::vector<double>{1, 2, 3}));
  const auto M = config::parse_matrix("1 2 | 3,4");
  ASSERT_EQ(M.rows(), 2);
  EXPECT_EQ(M(1, 0), 3.0);
  EXPECT_THROW(config::parse_matrix("1 2 | 3"), ConfigurationError);
  EXPECT_THROW(config::parse_list("1 x"), ConfigurationError);
}

TEST(Config, EquationRoundTrip) {
  EquationSpec s;
  s.lambda.resize(2);
  s.lambda << 0.1, 1.0 / 3.0;
  s.Phi.resize(2, 2);
  s.Phi << 1, -0.25, 0, 2;
  s.noise.H = 0.7;
  s.noise.families = {NoiseFamily::fbm, NoiseFamily::rosenblatt};
  s.noise.cells_per_unit = 128;
  s.x0.kind = InitialKind::x_infinity;
  s.x0.T_trunc = 25;
  config::Tree t;
  config::equation_into(t, s);
  const auto path = (std::filesystem::temp_directory_path() / "volterra_roundtrip.ini").string();
  config::write_file(path, t);
  const auto r = config::equation_from(config::read_file(path));
  std::filesystem::remove(path);
  EXPECT_TRUE(r.lambda == s.lambda);
  EXPECT_TRUE(r.Phi == s.Phi);
  EXPECT_EQ(r.noise.H, 0.7);
  EXPECT_EQ(r.noise.families, s.noise.families);
  EXPECT_EQ(r.noise.cells_per_unit, 128);
  EXPECT_EQ(r.x0.kind, InitialKind::x_infinity);
  EXPECT_EQ(r.x0.T_trunc, 25.0);
}

TEST(Config, MissingAndMalformedFiles) {
  EXPECT_THROW(config::read_file("/nonexistent/volterra.ini"), ConfigurationError);
  config::Tree t;
  t.put("equation.lambda", "1");
  EXPECT_THROW(config::equation_from(t), ConfigurationError);  // no phi
  t.put("equation.phi", "1");
  t.put("schema.version", 7);
  EXPECT_THROW(config::equation_from(t), ConfigurationError);
}

}  // namespace
}  // namespace volterra
