#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilcover/catalog.hpp"
#include "nilcover/constructions.hpp"
#include "nilcover/report.hpp"
#include "nilcover/verification.hpp"

using namespace nilcover;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(NILCOVER_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / ("nilcover-cli-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("certificate JSON has exactly the documented fields") {
  auto a5 = catalog::build("A5");
  auto cert = verify_witness(*a5, ClassKind::Nilpotent, a5_sylow_witness(*a5));
  auto j = to_json(cert);
  CHECK(keys(j) == std::vector<std::string>{"group", "kind", "elements", "size", "verified"});
  CHECK(j["group"] == "A5");
  CHECK(j["kind"] == "nilpotent");
  CHECK(j["size"] == 21);
  CHECK(j["verified"] == true);
  CHECK(j["elements"].size() == 21);
  CHECK(dump(j) == dump(to_json(cert)));
}

TEST_CASE("cover JSON") {
  auto a4 = catalog::build("A4");
  std::vector<Subgroup> parts;
  for (unsigned p : {2U, 3U}) {
    for (auto& s : sylow(*a4, p).subgroups) parts.push_back(std::move(s));
  }
  auto j = cover_to_json(*a4, parts, ClassKind::Nilpotent);
  CHECK(keys(j) == std::vector<std::string>{"group", "kind", "parts", "coversGroup"});
  CHECK(j["coversGroup"] == true);
  CHECK(j["parts"].size() == 5);
  CHECK(j["parts"][0].size() == 4);
  CHECK(j["parts"][0][0] == "()");
}

TEST_CASE("structure and Sylow JSON") {
  auto g = catalog::build("SL(2,5)");
  auto j = to_json(analyze_structure(*g));
  CHECK(j["center"]["order"] == 2);
  CHECK(j["derivedLength"] == "insoluble");
  CHECK(j["isNilpotent"] == false);
  CHECK(j["sylow"].size() == 3);
  CHECK(j["sylow"][0]["count"] == 5);
  CHECK(j["sylow"][0]["subgroups"].size() == 5);
  auto s = to_json(analyze_structure(*catalog::build("S4")));
  CHECK(s["derivedLength"] == 3);
  CHECK(s["fitting"]["order"] == 4);
  CHECK(s["fitting"]["generators"].is_array());
}

TEST_CASE("least nontrivial Sylow counts") {
  using verification::least_nontrivial_sylow_count;
  CHECK(least_nontrivial_sylow_count(5616, 13) == 27);
  CHECK(least_nontrivial_sylow_count(372000, 31) == 32);
  CHECK(least_nontrivial_sylow_count(62400, 13) == 40);
  CHECK(least_nontrivial_sylow_count(60, 5) == 6);
  CHECK(least_nontrivial_sylow_count(15, 5) == 0);
}

TEST_CASE("every verification check passes") {
  verification::Settings settings;
  auto results = verification::run_checks({}, settings);
  REQUIRE(results.size() == verification::checks().size());
  for (const auto& r : results) {
    INFO(r.id);
    for (const auto& line : r.details) INFO(line);
    CHECK(r.status == verification::Status::Pass);
  }
}

TEST_CASE("verification filtering, errors and parallel runs") {
  verification::Settings settings;
  const std::vector<std::string> only = {"lemma-1.5", "cor-2.3"};
  auto some = verification::run_checks(only, settings);
  REQUIRE(some.size() == 2);
  CHECK(some[0].id == "cor-2.3");
  CHECK(some[1].id == "lemma-1.5");
  const std::vector<std::string> bogus = {"nope"};
  CHECK_THROWS_AS(verification::run_checks(bogus, settings), std::invalid_argument);

  auto seq = verification::run_checks({}, settings, false);
  auto par = verification::run_checks({}, settings, true);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].id == par[i].id);
    CHECK(seq[i].status == par[i].status);
    CHECK(seq[i].details == par[i].details);
  }

  verification::Settings small;
  small.build.cap = 100;
  const std::vector<std::string> sl = {"theorem-b"};
  CHECK(verification::run_checks(sl, small).front().status == verification::Status::Error);
  CHECK(verification::to_string(verification::Status::Inconclusive) == "INCONCLUSIVE");
}

TEST_CASE("check command") {
  auto dir = scratch_dir();
  auto ok = run("check A5 --class nilpotent --n 21");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "SATISFIES"));
  const auto cert = dir / "a5.json";
  auto bad = run("check A5 --class nilpotent --n 20 --certificate " + cert.string());
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "VIOLATES"));
  CHECK(contains(bad.out, cert.string()));
  auto j = nlohmann::ordered_json::parse(slurp(cert));
  CHECK(keys(j) == std::vector<std::string>{"group", "kind", "elements", "size", "verified"});
  CHECK(j["size"] == 21);
  CHECK(j["verified"] == true);
  CHECK(run("check C7 --class abelian --n 1").code == 0);
  fs::remove_all(dir);
}

TEST_CASE("operational errors exit with 2") {
  CHECK(run("check X5 --class nilpotent --n 3").code == 2);
  CHECK(run("check A5 --class soluble --n 3").code == 2);
  CHECK(run("check A5 --class nilpotent --n 0").code == 2);
  CHECK(run("check A5 --class nilpotent").code == 2);
  CHECK(run("--cap 100 check 'SL(2,5)' --class nilpotent --n 3").code == 2);
  CHECK(run("check S5 --class nilpotent --n 3", "NILCOVER_NILPOTENT_CAP=50").code == 2);
  CHECK(run("check 'SL(2,5)' --class nilpotent --n 30", "NILCOVER_CAP=100").code == 2);
  CHECK(run("--cap 200 check 'SL(2,5)' --class nilpotent --n 30", "NILCOVER_CAP=100").code == 0);
  CHECK(run("check S3 --class abelian --n 3", "NILCOVER_TIMEOUT=abc").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
  auto e = run("check 'PSL(2,49)' --class nilpotent --n 3");
  CHECK(e.code == 2);
  CHECK(contains(e.out, "error:"));
}

TEST_CASE("analyze command") {
  auto sl = run("analyze 'SL(2,5)' --class nilpotent");
  CHECK(sl.code == 0);
  CHECK(contains(sl.out, "omega: 21\n"));
  CHECK(contains(sl.out, "G/Z*(G) ≅ A5: yes"));
  auto s3 = run("analyze S3xC4 --class nilpotent");
  CHECK(contains(s3.out, "omega: 4\n"));
  CHECK(contains(s3.out, "G/Z*(G) ≅ S3: yes"));
  auto c6 = run("analyze C6");
  CHECK(contains(c6.out, "omega: 1\n"));
  CHECK(contains(c6.out, "abelian: yes"));
  auto a5 = run("analyze C2xA5 --class abelian");
  CHECK(contains(a5.out, "omega: 21\n"));
  CHECK(contains(a5.out, "G ≅ Z(G)×A5: yes"));
  auto sla = run("analyze 'SL(2,5)' --class abelian");
  CHECK(contains(sla.out, "G ≅ Z(G)×A5: no"));
  auto j = nlohmann::json::parse(run("analyze A4 --json").out);
  CHECK(j["omega"] == 5);
  CHECK(j["structure"]["isSupersoluble"] == false);
}

TEST_CASE("sylow command") {
  auto r = run("sylow 'PSL(2,8)' --p 7");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count: 36\n"));
  CHECK(contains(r.out, "8·9/2 = 36 MATCH"));
  CHECK(contains(r.out, "TI: true"));
  auto r9 = run("sylow 'PSL(2,9)' --p 5");
  CHECK(contains(r9.out, "9·8/2 = 36 MATCH"));
  auto r13 = run("sylow 'PSL(2,13)' --p 13");
  CHECK(contains(r13.out, "13+1 = 14 MATCH"));
  CHECK(run("sylow A5 --p 4").code == 2);
  auto j = nlohmann::json::parse(run("sylow A5 --p 2 --json").out);
  CHECK(j["sylow"]["count"] == 5);
}

TEST_CASE("export and witness commands") {
  auto dir = scratch_dir();
  auto dot = run("export S3 --class abelian --format dot");
  CHECK(dot.code == 0);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.out.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 9);
  CHECK(dot.out.rfind("graph g {\n", 0) == 0);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  CHECK(run("export A5 --class nilpotent --format json -o " + a.string()).code == 0);
  CHECK(run("export A5 --class nilpotent --format json -o " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["size"] == 21);
  auto w = run("witness A4 --class nilpotent");
  CHECK(w.code == 0);
  CHECK(contains(w.out, "size: 5\n"));
  CHECK(contains(w.out, "verified: true\n"));
  fs::remove_all(dir);
}

TEST_CASE("verify-paper command") {
  auto all = run("verify-paper");
  CHECK(all.code == 0);
  CHECK(contains(all.out, std::to_string(verification::checks().size()) + "/" +
                              std::to_string(verification::checks().size()) + " checks passed"));
  auto one = run("verify-paper --only lemma-1.5");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "PASS"));
  CHECK(contains(one.out, "lemma-1.5"));
  CHECK(contains(one.out, "1/1 checks passed"));
  auto capped = run("--cap 100 verify-paper");
  CHECK(capped.code == 2);
  CHECK(contains(capped.out, "ERROR"));
  CHECK(run("verify-paper --only nope").code == 2);
  CHECK(run("verify-paper --parallel").code == 0);
  CHECK(contains(run("verify-paper --list").out, "lemma-1.5"));
}
