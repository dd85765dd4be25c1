#include "char2forms/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "char2forms/io.hpp"
#include "char2forms/matrix.hpp"

using namespace char2forms;
using nlohmann::json;

namespace {

const FieldCtx& f2 = FieldCtx::get(1);

struct RunResult {
  int status;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& contents)
      : path_(testing::TempDir() + name) {
    std::ofstream f(path_);
    f << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST(Cli, CanonOnAntidiagonal) {
  TempFile s3("s3.txt", matrix_to_text(s_form(f2, 3)));
  RunResult r = run({"canon", "--field", "gf2_1", "--matrix", s3.path()});
  ASSERT_EQ(r.status, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["label"]["rank"], 3);
  EXPECT_EQ(j["label"]["fully_isotropic"], false);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["canonical"]["rows"], json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])"));
}

TEST(Cli, DeterministicOutput) {
  TempFile s4("s4.txt", matrix_to_text(s_form(f2, 4)));
  RunResult a = run({"canon", "--field", "gf2_1", "--matrix", s4.path()});
  RunResult b = run({"canon", "--field", "gf2_1", "--matrix", s4.path()});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EquivAndWitness) {
  TempFile a("a.txt", matrix_to_text(s_form(f2, 4)));
  TempFile b("b.txt", matrix_to_text(z_form(f2, 4)));
  TempFile c("c.txt", matrix_to_text(Matrix::identity(f2, 4)));
  RunResult r1 = run({"equiv", "--field", "gf2_1", "--matrix", a.path(), "--matrix2", b.path()});
  ASSERT_EQ(r1.status, 0);
  json j1 = json::parse(r1.out);
  EXPECT_EQ(j1["equivalent"], true);
  EXPECT_EQ(j1["verified"], true);
  RunResult r2 = run({"equiv", "--field", "gf2_1", "--matrix", a.path(), "--matrix2", c.path()});
  json j2 = json::parse(r2.out);
  EXPECT_EQ(j2["equivalent"], false);
}

TEST(Cli, SocioAndAlbert) {
  TempFile e12("e12.txt", matrix_to_text(unit_matrix(f2, 2, 0, 1)));
  RunResult rs = run({"socio", "--field", "gf2_1", "--matrix", e12.path()});
  ASSERT_EQ(rs.status, 0);
  json js = json::parse(rs.out);
  EXPECT_EQ(js["label"]["rank"], 2);
  EXPECT_EQ(js["verified"], true);

  RunResult ra = run({"albert", "--field", "gf2_1", "--matrix", e12.path()});
  json ja = json::parse(ra.out);
  EXPECT_EQ(ja["label"]["r"], 1);
  EXPECT_EQ(ja["label"]["variant"], "Y");
  EXPECT_EQ(ja["verified"], true);
}

TEST(Cli, PreserverAndFingerprint) {
  TempFile id3("id3.txt", matrix_to_text(Matrix::identity(f2, 3)));
  RunResult rp = run({"preserver", "--field", "gf2_1", "--matrix", id3.path()});
  ASSERT_EQ(rp.status, 0);
  EXPECT_EQ(json::parse(rp.out)["dim"], 6);
  RunResult rsoc = run({"preserver", "--sociological", "--field", "gf2_1", "--matrix", id3.path()});
  EXPECT_EQ(json::parse(rsoc.out)["dim"], 9);
  RunResult rf = run({"fingerprint", "--field", "gf2_1", "--algebra", "oI", "--n", "3"});
  ASSERT_EQ(rf.status, 0);
  EXPECT_EQ(json::parse(rf.out)["fingerprint"][0], 6);
}

TEST(Cli, DerivedCenterSimple) {
  RunResult rd = run({"derived", "--field", "gf2_1", "--algebra", "oPi", "--n", "4", "--depth", "5"});
  ASSERT_EQ(rd.status, 0) << rd.err;
  EXPECT_EQ(json::parse(rd.out)["dims"], json::parse("[10,6,5,1,0]"));

  RunResult rc = run({"center", "--field", "gf2_1", "--algebra", "oI", "--n", "4"});
  EXPECT_EQ(json::parse(rc.out)["dim"], 1);

  RunResult rs = run({"simple", "--field", "gf2_1", "--algebra", "oI1", "--n", "5"});
  ASSERT_EQ(rs.status, 0) << rs.err;
  EXPECT_EQ(json::parse(rs.out)["simple"], true);

  RunResult rss = run({"simple", "--field", "gf2_1", "--algebra", "ooII1", "--sdim", "2,1"});
  ASSERT_EQ(rss.status, 0) << rss.err;
  EXPECT_EQ(json::parse(rss.out)["simple"], true);
}

TEST(Cli, SuperCommands) {
  Matrix pe2(f2, 4, 4);
  pe2.set_block(0, 2, Matrix::identity(f2, 2));
  pe2.set_block(2, 0, Matrix::identity(f2, 2));
  TempFile pef("pe2.txt", matrix_to_text(pe2));
  RunResult rp = run({"super-preserver", "--field", "gf2_1", "--matrix", pef.path(), "--sdim",
                      "2,2", "--parity", "odd"});
  ASSERT_EQ(rp.status, 0) << rp.err;
  json jp = json::parse(rp.out);
  EXPECT_EQ(jp["dim"], json::parse("[4,6]"));

  RunResult rc = run({"super-canon", "--field", "gf2_1", "--matrix", pef.path(), "--sdim", "2,2",
                      "--parity", "odd"});
  json jc = json::parse(rc.out);
  EXPECT_EQ(jc["relation"], "super-odd-symmetric");
  EXPECT_EQ(jc["verified"], true);

  RunResult rd = run({"super-derived", "--field", "gf2_1", "--algebra", "pe", "--n", "2",
                      "--depth", "5"});
  EXPECT_EQ(json::parse(rd.out)["dims"], json::parse("[10,6,5,1,0]"));

  TempFile even("even.txt", matrix_to_text(Matrix::identity(f2, 2)));
  RunResult re = run({"super-canon", "--field", "gf2_1", "--matrix", even.path(), "--sdim", "1,1",
                      "--parity", "even"});
  json je = json::parse(re.out);
  EXPECT_EQ(je["relation"], "super-even");
  EXPECT_EQ(je["verified"], true);
}

TEST(Cli, ContactCommand) {
  TempFile e12("c_e12.txt", matrix_to_text(unit_matrix(f2, 2, 0, 1)));
  RunResult r = run({"contact", "--field", "gf2_1", "--matrix", e12.path(), "--parity", "even"});
  ASSERT_EQ(r.status, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["contact"], true);
  EXPECT_EQ(j["canonical_expression"], "dt + p_1 dq_1");

  TempFile id2("c_id2.txt", matrix_to_text(Matrix::identity(f2, 2)));
  RunResult r2 = run({"contact", "--field", "gf2_1", "--matrix", id2.path(), "--parity", "odd"});
  EXPECT_EQ(json::parse(r2.out)["contact"], false);
}

TEST(Cli, CensusAndCluster) {
  RunResult r = run({"census", "--n", "2", "--predicate", "nondeg-nonsym", "--equiv", "congruence"});
  ASSERT_EQ(r.status, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["orbit_sizes"], json::parse("[2]"));

  RunResult rc = run({"cluster", "--n", "3", "--predicate", "nondeg-nonsym", "--equiv", "congruence"});
  json jc = json::parse(rc.out);
  EXPECT_EQ(jc["cluster_count"], 1);
}

TEST(Cli, TextOutput) {
  TempFile s3("t_s3.txt", matrix_to_text(s_form(f2, 3)));
  RunResult r = run({"canon", "--field", "gf2_1", "--matrix", s3.path(), "--out", "text"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("label.rank: 3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  // Missing file: I/O error, exit 1.
  RunResult r1 = run({"canon", "--field", "gf2_1", "--matrix", "/nonexistent/x.txt"});
  EXPECT_EQ(r1.status, 1);

  // Domain error: canon of a non-symmetric matrix, exit 2.
  TempFile e12("x_e12.txt", matrix_to_text(unit_matrix(f2, 2, 0, 1)));
  RunResult r2 = run({"canon", "--field", "gf2_1", "--matrix", e12.path()});
  EXPECT_EQ(r2.status, 2);
  EXPECT_NE(r2.err.find("symmetric"), std::string::npos);

  // Usage error, exit 1.
  RunResult r3 = run({"canon"});
  EXPECT_EQ(r3.status, 1);
  RunResult r4 = run({"nonsense"});
  EXPECT_EQ(r4.status, 1);

  // Truncated matrix file: parse error, exit 1.
  TempFile bad("bad.txt", "2 1\n0 1\n1\n");
  RunResult r5 = run({"canon", "--field", "gf2_1", "--matrix", bad.path()});
  EXPECT_EQ(r5.status, 1);

  // Field mismatch between flag and file.
  TempFile s3("m_s3.txt", matrix_to_text(s_form(f2, 3)));
  RunResult r6 = run({"canon", "--field", "gf2_2", "--matrix", s3.path()});
  EXPECT_EQ(r6.status, 1);
}
