#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "reflex/reflex.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(REFLEX_TEST_DATA) + "/" + name; }

Result run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() / "reflex_cli_stderr.txt";
  const std::string cmd = std::string(REFLEX_CLI) + " " + args + " 2>" + err_path.string();
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, AnalyzeHexagon) {
  const Result r = run("analyze " + data("v2.poly"));
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_GE(l.size(), 5u);
  EXPECT_EQ(l[0], "dimension 2");
  EXPECT_EQ(l[1], "vertices 6");
  EXPECT_EQ(l[2], "facets 6");
  EXPECT_EQ(l[3], "reflexive simplicial smooth; nu=0; picard=4");
  EXPECT_EQ(l[4], "special-facets 6");
  EXPECT_EQ(l.size(), 11u);
  EXPECT_EQ(l[5], "FACET 0 SLICES 1:2 0:2 -1:2 NU 0");
}

TEST(Cli, AnalyzeCube) {
  const Result r = run("analyze " + data("cube3.poly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reflexive; not simplicial\n"), std::string::npos);
}

TEST(Cli, AnalyzeExtremalShowsCases) {
  const Result r = run("analyze " + data("q3p.poly"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reflexive simplicial smooth; nu=(1,0,0) vertex; picard=5\n"), std::string::npos);
  EXPECT_NE(r.out.find("special-facets 4\n"), std::string::npos);
  std::size_t cases = 0;
  for (const auto& l : lines(r.out))
    if (l.find(" CASE C") != std::string::npos) ++cases;
  EXPECT_EQ(cases, 4u);
  const Result e1 = run("analyze " + data("e1.poly"));
  EXPECT_NE(e1.out.find("reflexive simplicial; nu=(-1,0) boundary-nonvertex; picard=3\n"), std::string::npos);
}

TEST(Cli, InputErrors) {
  const Result degenerate = run("analyze " + data("degenerate.poly"));
  EXPECT_EQ(degenerate.code, 2);
  EXPECT_NE(degenerate.err.find("degenerate"), std::string::npos);
  const Result malformed = run("analyze " + data("malformed.poly"));
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find(data("malformed.poly") + ":3:3:"), std::string::npos);
  const Result off = run("analyze " + data("off_center.poly"));
  EXPECT_EQ(off.code, 2);
  EXPECT_NE(off.err.find("interior"), std::string::npos);
  EXPECT_EQ(run("analyze " + data("no_such.poly")).code, 2);
  EXPECT_EQ(run("construct q4").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify --dim 9").code, 2);
  EXPECT_EQ(run("section " + data("q3.poly") + " 0 1 99").code, 2);
  EXPECT_EQ(run("section " + data("q3.poly") + " 0 3 3").code, 2);
  const Result second = run("iso " + data("q3.poly") + " " + data("malformed.poly"));
  EXPECT_EQ(second.code, 2);
  EXPECT_NE(second.err.find(data("malformed.poly")), std::string::npos);
}

TEST(Cli, Construct) {
  const Result r = run("construct q3");
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0], "3 8");
  const Result big = run("construct e2 --dim 6");
  EXPECT_EQ(big.code, 0);
  EXPECT_EQ(lines(big.out)[0], "6 17");
  EXPECT_EQ(run("construct q3 --dim 4").code, 2);
}

TEST(Cli, ConstructOutputParses) {
  const Result r = run("construct q3p");
  const auto f = reflex::parse_poly(r.out);
  EXPECT_EQ(f.vertices, reflex::construct(reflex::Named::q3p).vertices());
}

TEST(Cli, Verify) {
  const Result r = run("verify --dim 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("VERDICT: PASS\n"), std::string::npos);
  EXPECT_NE(r.out.find("NOTE completeness"), std::string::npos);
  EXPECT_EQ(run("verify --casagrande 4").code, 0);
  EXPECT_EQ(run("verify --polygons").code, 0);
}

TEST(Cli, IsoAndNormalForm) {
  const Result no = run("iso " + data("q3.poly") + " " + data("q3p.poly"));
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "NO\n");
  const Result yes = run("iso " + data("q3.poly") + " " + data("q3_image.poly"));
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "YES\n");
  const Result a = run("normal-form " + data("q3.poly"));
  const Result b = run("normal-form " + data("q3_image.poly"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("normal-form " + data("q3p.poly")).out);
  // The key is itself a polytope in the same class.
  const auto key = reflex::LatticePolytope(reflex::parse_poly(a.out).vertices);
  EXPECT_TRUE(reflex::is_isomorphic(key, reflex::construct(reflex::Named::q3)));
}

TEST(Cli, Dual) {
  const Result r = run("dual " + data("v2.poly"));
  EXPECT_EQ(r.code, 0);
  const auto f = reflex::parse_poly(r.out);
  EXPECT_EQ(f.vertices.size(), 6u);
  const Result q = run("dual " + data("cube3.poly"));
  EXPECT_EQ(lines(q.out)[0], "3 6");
}

TEST(Cli, Section) {
  // q3.poly: vertices 0, 2 and 4 are (1,0,0), (0,1,0), (-1,-1,0).
  const Result r = run("section " + data("q3.poly") + " 0 2 4");
  EXPECT_EQ(r.code, 0);
  const auto f = reflex::parse_poly(r.out);
  EXPECT_TRUE(reflex::is_isomorphic(reflex::LatticePolytope(f.vertices), reflex::construct(reflex::Named::v2)));
}

TEST(Cli, EnumeratePolygons) {
  const auto dir = std::filesystem::temp_directory_path() / "reflex_cli_polygons";
  std::filesystem::remove_all(dir);
  const Result r = run("enumerate-polygons " + dir.string());
  EXPECT_EQ(r.code, 0);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    const auto p = reflex::read_polytope(e.path().string());
    EXPECT_TRUE(reflex::is_reflexive(p));
  }
  EXPECT_EQ(files, 16u);
  std::filesystem::remove_all(dir);
}
