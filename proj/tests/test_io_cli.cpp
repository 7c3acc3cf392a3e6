#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "heatlab/cli.hpp"
#include "heatlab/io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace heatlab;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("heatlab_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("double formatting round-trips") {
  CHECK(io::fmt(0.25) == "0.25");
  CHECK(io::fmt(-3.0) == "-3");
  for (double x : {0.1, 1.0 / 3.0, 6.02e23, -1.7e-300, 5.0}) {
    CHECK(std::stod(io::fmt(x)) == x);
  }
}

TEST_CASE("atomic writes leave no temp files") {
  TempDir tmp;
  const fs::path target = tmp.path / "table.csv";
  io::write_text_atomic(target, "a,b\n1,2\n");
  CHECK(slurp(target) == "a,b\n1,2\n");
  io::write_text_atomic(target, "a,b\n3,4\n");
  CHECK(slurp(target) == "a,b\n3,4\n");
  size_t entries = 0;
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    ++entries;
    CHECK(e.path() == target);
  }
  CHECK(entries == 1);
}

TEST_CASE("csv assembly") {
  io::Csv csv;
  csv.header = {"x", "y"};
  csv.add_row({io::fmt(1.0), io::fmt(2.5)});
  CHECK(csv.str() == "x,y\n1,2.5\n");
}

TEST_CASE("cli exit codes") {
  TempDir tmp;
  const std::string out = (tmp.path / "r.json").string();

  // Usage errors exit with 2.
  CHECK(cli::run({"estimate", "--id", "sz14", "--solution", "traveling-wave:a=1",
                  "--cube", "3,1,1,2", "--out", out}) == cli::kExitUsage);
  CHECK(cli::run({"estimate", "--id", "nope", "--solution", "traveling-wave:a=1",
                  "--cube", "1,3,1,2", "--out", out}) == cli::kExitUsage);
  CHECK(cli::run({"estimate", "--id", "sz14", "--solution", "martian", "--cube",
                  "1,3,1,2", "--out", out}) == cli::kExitUsage);
  CHECK(cli::run({"no-such-command"}) == cli::kExitUsage);
  CHECK(cli::run({}) == cli::kExitUsage);

  // Contract violations exit with 1.
  CHECK(cli::run({"estimate", "--id", "cy11", "--solution", "traveling-wave:a=1",
                  "--cube", "1,3,1,2", "--out", out}) == cli::kExitCheckFailed);

  // Success paths exit with 0.
  CHECK(cli::run({"estimate", "--id", "sz14", "--solution", "traveling-wave:a=1",
                  "--cube", "1,3,1,2", "--c", "1", "--out", out}) == cli::kExitOk);
  CHECK(cli::run({"cutoff", "--R", "1", "--T", "1",
                  "--out", (tmp.path / "c.json").string()}) == cli::kExitOk);
}

TEST_CASE("cli estimate report matches the anchor example") {
  TempDir tmp;
  const fs::path out = tmp.path / "report.json";
  REQUIRE(cli::run({"estimate", "--id", "sz14", "--solution", "traveling-wave:a=1",
                    "--cube", "1,3,1,2", "--c", "1", "--out", out.string()}) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("estimate_id") == "SZ_1_4");
  CHECK(j.at("R") == 1.0);
  CHECK(j.at("T") == 1.0);
  // The sweep includes the anchor point (2, 2) where LHS/RHS = 1/4.
  CHECK(j.at("ratio").get<double>() >= 0.25 - 1e-12);
  CHECK(j.at("lhs_sup").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("cli sharpness sweep emits the limiting ratio") {
  TempDir tmp;
  const fs::path out = tmp.path / "sharpness.csv";
  REQUIRE(cli::run({"sharpness", "--a", "1,2,4,8,16,32", "--out", out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("a,lhs,rhs_at_c1,ratio\n", 0) == 0);
  CHECK(csv.find("0.48484848484848486") != std::string::npos);
}

TEST_CASE("identical configurations produce byte-identical outputs") {
  TempDir tmp;
  const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
  REQUIRE(cli::run({"hamilton-failure", "--a", "1,2,4,8", "--out", a.string()}) == 0);
  REQUIRE(cli::run({"hamilton-failure", "--a", "1,2,4,8", "--out", b.string()}) == 0);
  CHECK(slurp(a) == slurp(b));

  const fs::path k1 = tmp.path / "k1.json", k2 = tmp.path / "k2.json";
  REQUIRE(cli::run({"kernel", "--model", "euclidean:n=1", "--delta", "2", "--out",
                    k1.string(), "--sweep-out", (tmp.path / "s1.csv").string()}) == 0);
  REQUIRE(cli::run({"kernel", "--model", "euclidean:n=1", "--delta", "2", "--out",
                    k2.string(), "--sweep-out", (tmp.path / "s2.csv").string()}) == 0);
  CHECK(slurp(k1) == slurp(k2));
  CHECK(slurp(tmp.path / "s1.csv") == slurp(tmp.path / "s2.csv"));
}

TEST_CASE("cli proof fixture run writes the term table") {
  TempDir tmp;
  const fs::path out = tmp.path / "terms.csv";
  REQUIRE(cli::run({"proof", "--fixture", "gaussian:n=1", "--out", out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("term_name,value,bound,slack\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 6);  // header + five bounded terms
}

TEST_CASE("cli liouville sweep") {
  TempDir tmp;
  const fs::path out = tmp.path / "liouville.csv";
  REQUIRE(cli::run({"liouville", "--part", "b", "--solution", "affine:slope=1", "--x0",
                    "1", "--radii", "4,16,64", "--out", out.string()}) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("R,bound,true_value,verdict\n", 0) == 0);
  CHECK(csv.find("\n64,") != std::string::npos);
}
