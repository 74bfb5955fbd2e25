#include "waldron/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using waldron::FamilyKind;
using waldron::Simplex;
using waldron::Weight;
namespace io = waldron::io;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(::testing::TempDir()) + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST(FormatDouble, RoundTripsAndNormalizesZero) {
  EXPECT_EQ(io::format_double(0.0), "0");
  EXPECT_EQ(io::format_double(-0.0), "0");
  EXPECT_EQ(io::format_double(1.0), "1");
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(io::format_double(v)), v);  // 17 digits round-trip
  EXPECT_EQ(io::format_double(v), "0.30000000000000004");
}

TEST(CsvReader, HeaderAndRows) {
  std::istringstream in("a,b\n1,2\n3.5,-4e-2\n");
  const io::CsvTable t = io::read_csv(in);
  ASSERT_EQ(t.header.size(), 2u);
  EXPECT_EQ(t.header[0], "a");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_DOUBLE_EQ(t.rows[1][1], -0.04);
}

TEST(CsvReader, NoHeaderAndBlankLines) {
  std::istringstream in("\n1,2\n\n3,4\n");
  const io::CsvTable t = io::read_csv(in);
  EXPECT_TRUE(t.header.empty());
  ASSERT_EQ(t.rows.size(), 2u);
}

TEST(CsvReader, RejectsRaggedAndNonNumericRows) {
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(io::read_csv(ragged), waldron::IoError);
  std::istringstream text_mid("1,2\nx,2\n");
  EXPECT_THROW(io::read_csv(text_mid), waldron::IoError);
}

TEST(NodesCsv, HeaderMatchesDimension) {
  const auto family = simplex_points(Simplex::equilateral_triangle(), 2);
  std::ostringstream os;
  io::write_nodes_csv(os, family);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "alpha_1,alpha_2,alpha_3,x_1,x_2,lambda_1,lambda_2,lambda_3");
  const io::CsvTable t = io::read_csv(in);
  EXPECT_EQ(t.rows.size(), 6u);
}

TEST(WeightSpec, SimpleNames) {
  EXPECT_EQ(io::parse_weight_spec("identity").kind(), waldron::WeightKind::Identity);
  EXPECT_EQ(io::parse_weight_spec("cosine").name(), "cosine");
  EXPECT_NEAR(io::parse_weight_spec("quad")(0.25), 0.125, 1e-15);
}

TEST(WeightSpec, ConvexAndNested) {
  const Weight w = io::parse_weight_spec("convex:t=0.25:identity:cosine");
  EXPECT_NEAR(w(0.3), 0.75 * 0.3 + 0.25 * Weight::cosine()(0.3), 1e-14);
  const Weight nested =
      io::parse_weight_spec("convex:t=0.5:convex:t=1:identity:cosine:quad");
  EXPECT_NEAR(nested(0.3),
              0.5 * Weight::cosine()(0.3) + 0.5 * Weight::quadratic_piecewise()(0.3),
              1e-14);
}

TEST(WeightSpec, DensityFromFile) {
  // Flat density F = 1 on [0,1/2] integrates to the identity weight.
  const std::string path = temp_file("flat_density.csv", "0,1\n0.5,1\n");
  const Weight w = io::parse_weight_spec("density:file=" + path);
  EXPECT_NEAR(w(0.37), 0.37, 1e-9);
  std::remove(path.c_str());
}

TEST(WeightSpec, Errors) {
  EXPECT_THROW(io::parse_weight_spec("sinusoid"), waldron::SpecParseError);
  EXPECT_THROW(io::parse_weight_spec("convex:t=oops:identity:cosine"),
               waldron::SpecParseError);
  EXPECT_THROW(io::parse_weight_spec("convex:t=0.5:identity"),
               waldron::SpecParseError);
  EXPECT_THROW(io::parse_weight_spec("cosine:extra"), waldron::SpecParseError);
  EXPECT_THROW(io::parse_weight_spec("density:path=/nope"), waldron::SpecParseError);
}

TEST(SimplexSpec, BuiltinsAndCsv) {
  EXPECT_EQ(io::parse_simplex_spec("equilateral2d").dim(), 2);
  EXPECT_EQ(io::parse_simplex_spec("centred3d").dim(), 3);
  EXPECT_EQ(io::parse_simplex_spec("unit3").dim(), 3);
  const std::string path = temp_file("tri.csv", "0,0\n2,0\n0,2\n");
  const Simplex s = io::parse_simplex_spec("csv:" + path);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_NEAR(s.diameter(), 2.0 * std::sqrt(2.0), 1e-14);
  std::remove(path.c_str());
  EXPECT_THROW(io::parse_simplex_spec("hexagon"), waldron::SpecParseError);
  EXPECT_THROW(io::parse_simplex_spec("unitX"), waldron::SpecParseError);
}

TEST(DegreeSpec, RangesAndLists) {
  EXPECT_EQ(io::parse_degree_spec("5"), (std::vector<int>{5}));
  EXPECT_EQ(io::parse_degree_spec("1..4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(io::parse_degree_spec("1..3,7"), (std::vector<int>{1, 2, 3, 7}));
  EXPECT_THROW(io::parse_degree_spec("4..1"), waldron::SpecParseError);
  EXPECT_THROW(io::parse_degree_spec("x"), waldron::SpecParseError);
}

TEST(FamilySpecParse, AllKinds) {
  EXPECT_EQ(io::parse_family_spec("simplex").kind, FamilyKind::Simplex);
  EXPECT_EQ(io::parse_family_spec("concentric").kind, FamilyKind::Concentric);
  const auto waldron_spec = io::parse_family_spec("waldron:cosine");
  EXPECT_EQ(waldron_spec.kind, FamilyKind::Waldron);
  EXPECT_EQ(waldron_spec.weight->name(), "cosine");
  const auto mod = io::parse_family_spec("waldron-mod3d:convex:t=0.5:identity:cosine");
  EXPECT_EQ(mod.kind, FamilyKind::WaldronModified3D);
  EXPECT_THROW(io::parse_family_spec("waldron"), waldron::SpecParseError);
  EXPECT_THROW(io::parse_family_spec("simplex:cosine"), waldron::SpecParseError);
  const auto list = io::parse_family_list("simplex,waldron:cosine,concentric");
  EXPECT_EQ(list.size(), 3u);
  EXPECT_EQ(list[1].label(), "waldron:cosine");
}

TEST(SvgScatter, EmitsOneCirclePerPoint) {
  std::vector<Eigen::Vector2d> pts = {{0.0, 0.0}, {0.5, -0.5}, {-1.0, 1.0}};
  std::ostringstream os;
  io::write_scatter_svg(os, pts);
  const std::string svg = os.str();
  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  EXPECT_EQ(circles, 3u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
}

TEST(LebesgueTableCsv, NodesAndValues) {
  waldron::LebesgueTable t;
  t.columns = {"simplex"};
  t.degrees = {1, 2};
  t.node_counts = {3, 6};
  t.constants = {{1.0}, {std::numeric_limits<double>::quiet_NaN()}};
  std::ostringstream os;
  io::write_lebesgue_table_csv(os, t);
  EXPECT_EQ(os.str(), "degree,node_count,simplex\n1,3,1\n2,6,nan\n");
  const std::string text = io::format_lebesgue_table_text(t);
  EXPECT_NE(text.find("simplex"), std::string::npos);
  EXPECT_NE(text.find('-'), std::string::npos);  // NaN rendered as dash
}
