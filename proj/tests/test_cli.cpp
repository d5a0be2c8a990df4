#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lgmf/cli.hpp"
#include "lgmf/mf_io.hpp"

using namespace lgmf;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: potential verbs") {
  CHECK(run({"milnor", "--potential", "x^3+y^5"}).out == "8\n");
  CHECK(run({"milnor", "--potential", "E:7"}).out == "7\n");
  CHECK(run({"cc", "--potential", "x^5"}).out == "9/5\n");
  auto j = run({"jacobian", "--potential", "x^3+y^3"});
  CHECK(j.code == 0);
  CHECK(j.out.find("dx\t3*x^2") != std::string::npos);
  CHECK(run({"jacobian", "--potential", "x^3", "--format", "json"}).out.find("\"basis\"") != std::string::npos);
}

TEST_CASE("cli: exit codes and error lines") {
  auto bad = run({"milnor", "--potential", "x^2*y"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("{\"error\":\"domain\"", 0) == 0);
  auto parse = run({"milnor", "--potential", "x^^2"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("\"parse\"") != std::string::npos);
  CHECK(run({"milnor"}).code == 2);
  CHECK(run({"milnor", "--potential", "x^3", "--frobnicate"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"fusion-table", "--d", "3", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: factorization files round trip") {
  std::string path = "lgmf_cli_test.mf";
  auto mk = run({"mf-make", "--d", "5", "--label", "2:1", "--out", path});
  CHECK(mk.code == 0);
  auto text = slurp(path);
  CHECK(write_mf(read_mf(text)) == text);
  CHECK(run({"mf-make", "--d", "5", "--label", "2:1"}).out == text);
  CHECK(run({"mf-make", "--d", "5", "--J", "2,3"}).out == text);
  CHECK(run({"mf-validate", "--in", path}).out == "ok\n");
  auto q = run({"qdim", "--in", path});
  CHECK(q.out.find("1.61803398874989") != std::string::npos);
  auto v = run({"verify-orbifold", "--in", path, "--v", "x^5", "--w", "y^5"});
  CHECK(v.out.find("witness\tyes") != std::string::npos);
  // a broken file is rejected with exit code 1
  std::ofstream(path) << "mf v1\nring x:1/5 y:1/5 cyclo 5\nwleft x^5\nwright y^5\ngens 0:0 1:-3/5\nd 0 1 = x - y\nd 1 0 = x\n";
  auto inv = run({"mf-validate", "--in", path});
  CHECK(inv.code == 1);
  CHECK(inv.out.rfind("invalid", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"mf-validate", "--in", "does/not/exist.mf"}).code == 1);
}

TEST_CASE("cli: fusion and homs") {
  CHECK(run({"fuse", "--d", "5", "--a", "1:1", "--b", "2:1"}).out == "P[3:2] + P[4:0]\n");
  CHECK(run({"fuse", "--d", "5", "--a", "0:0", "--b", "3:2"}).out == "P[3:2]\n");
  auto js = run({"fuse", "--d", "4", "--a", "0:1", "--b", "0:1", "--format", "json"});
  CHECK(js.out.find("\"decomposition\": \"P[0:2] + P[1:0]\"") != std::string::npos);
  auto h = run({"homdim", "--d", "4", "--a", "0:0", "--b", "0:0"});
  CHECK(h.out.rfind("even\t3\nodd\t0\nstabilized\tyes\n", 0) == 0);
  auto t1 = run({"fusion-table", "--d", "3", "--rule", "bottom"});
  auto t2 = run({"--jobs", "2", "fusion-table", "--d", "3", "--rule", "bottom"});
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("\tno\n") == std::string::npos);
}

TEST_CASE("cli: ansatz and search") {
  std::string path = "lgmf_cli_system.txt";
  auto a = run({"ansatz", "--v", "x^3", "--w", "y^3", "--ladder", "0,1/3", "--out", path});
  CHECK(a.code == 0);
  CHECK(a.out == "unknowns\t4\nequations\t4\n");
  auto s1 = run({"search", "--system", path, "--attempts", "3", "--seed", "5"});
  auto s2 = run({"search", "--v", "x^3", "--w", "y^3", "--ladder", "0,1/3", "--attempts", "3", "--seed", "5"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.out.find("\"exact\": true") != std::string::npos);
  CHECK(run({"search", "--system", path, "--attempts", "0"}).code == 1);
  CHECK(run({"search", "--attempts", "3"}).code == 2);
  std::remove(path.c_str());
}
