#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramlab/cli.hpp"

using namespace ramlab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, std::move(env));
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"c", "2"}).code == cli::kExitUsage);
  CHECK(run({"c", "2", "4", "--system", "Q"}).code == cli::kExitUsage);
  CHECK(run({"c", "2", "4", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"c", "0", "4"}).code == cli::kExitUsage);
  CHECK(run({"even", "r=4; 1:1"}).code == cli::kExitUsage);
  CHECK(run({"table", "--what", "nope", "--rmax", "4"}).code == cli::kExitUsage);
}

TEST_CASE("c subcommand") {
  auto r = run({"c", "2", "4", "--system", "U", "--route", "all", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "\"divisor\":-1"));
  CHECK(contains(r.out, "\"core\":-1"));
  CHECK(contains(r.out, "\"match\":true"));

  r = run({"c", "4", "4", "--format", "json"});
  CHECK(r.out == "{\"n\":4,\"r\":4,\"system\":\"D\",\"divisor\":2}\n");
  r = run({"c", "4", "4", "--system", "U", "--route", "core", "--format", "csv"});
  CHECK(contains(r.out, "3"));
  CHECK(r.out.substr(0, r.out.find('\n')).find(',') != std::string::npos);
}

TEST_CASE("format precedence") {
  const auto plain = run({"c", "2", "4"});
  const auto env_json = run({"c", "2", "4"}, "json");
  const auto flag_csv = run({"c", "2", "4", "--format", "csv"}, "json");
  CHECK(plain.out.front() != '{');
  CHECK(env_json.out.front() == '{');
  CHECK(flag_csv.out.front() != '{');
  CHECK(contains(flag_csv.out, ","));
  CHECK(run({"c", "2", "4"}, "yaml").code == cli::kExitUsage);
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "ramlab_cli_out.json").string();
  const auto r = run({"table", "--what", "phiA", "--system", "U", "--rmax", "6", "--format", "json", "-o", path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "{\"what\":\"phiA\",\"system\":\"U\",\"rmax\":6,\"values\":[1,1,2,3,4,2]}");
  std::filesystem::remove(path);
}

TEST_CASE("table subcommand") {
  CHECK(run({"table", "--what", "psiA", "--system", "U", "--rmax", "4", "--format", "json"}).out ==
        "{\"what\":\"psiA\",\"system\":\"U\",\"rmax\":4,\"values\":[1,3,4,5]}\n");
  const auto ca = run({"table", "--what", "cA", "--system", "D", "--rmax", "3", "--nmax", "4", "--format", "csv"});
  CHECK(ca.code == cli::kExitOk);
  CHECK(ca.out == "n,r=1,r=2,r=3\n1,1,-1,-1\n2,1,1,-1\n3,1,-1,2\n4,1,1,-1\n");
  CHECK(run({"table", "--what", "muA", "--system", "MIX", "--rmax", "8"}).code == cli::kExitOk);
}

TEST_CASE("system spec files") {
  const auto good = temp_file("ramlab_good.json",
                              R"({"kind":"custom","default":"dirichlet-default","a_max":2,)"
                              R"("types":[{"p":2,"a":1,"t":1},{"p":2,"a":2,"t":2}],"name":"U2"})");
  auto r = run({"c", "2", "4", "--system", good, "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "\"system\":\"U2\""));
  CHECK(contains(r.out, "\"divisor\":-1"));

  const auto bad = temp_file("ramlab_bad.json",
                             R"({"kind":"custom","default":"dirichlet-default","a_max":2,)"
                             R"("types":[{"p":2,"a":2,"t":3},{"p":4,"a":1,"t":1}]})");
  r = run({"c", "1", "4", "--system", bad});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "t_A(2^2) = 3 is outside [1, 2]"));
  CHECK(contains(r.err, "4 is not prime"));

  CHECK(run({"c", "1", "4", "--system", temp_file("ramlab_junk.json", "{")}).code == cli::kExitUsage);
  CHECK(run({"c", "1", "4", "--system", "/nonexistent/ramlab.json"}).code == cli::kExitUsage);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("verify subcommand") {
  CHECK(run({"verify", "prop2", "--system", "U", "--rmax", "50", "--xmax", "1000"}).code == cli::kExitOk);
  CHECK(run({"verify", "prop1", "--system", "D", "--rmax", "20", "--xmax", "1000"}).code == cli::kExitOk);
  const auto p3 = run({"verify", "prop3", "--system", "MIX", "--rmax", "6", "--format", "json"});
  CHECK(p3.code == cli::kExitOk);
  CHECK(contains(p3.out, "\"violation_found\":true"));
  const auto p4 = run({"verify", "prop4", "--system", "D", "--format", "json"});
  CHECK(p4.out == "{\"check\":\"prop4\",\"system\":\"D\",\"applicable\":false,\"pass\":true}\n");
  CHECK(run({"verify", "prop4", "--system", "U"}).code == cli::kExitOk);
  CHECK(run({"verify", "all", "--system", "U", "--rmax", "12", "--xmax", "200"}).code == cli::kExitOk);
  CHECK(run({"verify", "prop9"}).code == cli::kExitUsage);
}

TEST_CASE("expansion and even subcommands") {
  const auto e = run({"expansion", "6", "--terms", "100", "--format", "csv"});
  CHECK(e.code == cli::kExitOk);
  CHECK(e.out.rfind("n,terms,truncated,target,abs_error\n6,100,", 0) == 0);

  const auto ev = run({"even", "r=12; 1:1, 2:-1, 3:0, 4:2, 6:0, 12:5", "--x", "1000", "--format", "json"});
  CHECK(ev.code == cli::kExitOk);
  CHECK(contains(ev.out, "\"mean\":\"11/12\""));
  CHECK(contains(ev.out, "\"exact_sum\":915"));
  CHECK(contains(ev.out, "\"pass\":true"));

  // 1 at d = 2, 0 elsewhere is not U-even mod 4
  CHECK(run({"even", "r=4; 1:0, 2:1, 4:0", "--system", "U"}).code == cli::kExitUsage);
}
