#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QHS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qhs-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("classify --weights 2,3").status == 0);
  CHECK(run("classify --weights 4,6").status == 2);
  CHECK(run("classify --weights 1,2").status == 2);
  CHECK(run("classify --weights x").status == 2);
  CHECK(run("verify 't^^2, t'").status == 4);
  CHECK(run("verify 't^3, t^2'").status == 5);
  CHECK(run("classify --format yaml").status == 1);
  CHECK(run("bogus").status == 1);
  CHECK(run("tables --weights 2,3 --out /proc/qhs-nope").status == 6);
}

TEST_CASE("gcd message names the normalized semigroup") {
  std::string cmd = std::string(QHS_CLI_PATH) + " classify --weights 4,6 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  char buf[512];
  while (fgets(buf, sizeof buf, p)) text += buf;
  pclose(p);
  CHECK(text.find("2,3") != std::string::npos);
}

TEST_CASE("verify reports the family and invariants") {
  auto r = run("verify 't^3, t^7, t^4, 0, t^5, 0' --weights 3,4,5 --format json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("a10") != std::string::npos);
  auto t = run("verify 't^3, t^7, t^4, 0, t^5, 0'");
  CHECK(t.status == 0);
  CHECK(t.out.find("a10") != std::string::npos);
}

TEST_CASE("classify json lists every family") {
  auto r = run("classify --weights 3,5,7 --format json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_forms"].size() == 9);
  CHECK(j["weights"] == "3,5,7");
  CHECK(run("classify --weights 3,5,7 --format json").out == r.out);
}

TEST_CASE("cache is written, reused and repaired") {
  auto dir = scratch("cache");
  auto first = run("classify --weights 3,4,5 --cache " + dir.string());
  REQUIRE(first.status == 0);
  auto p2 = dir / "basis-3_4_5-p2.json";
  REQUIRE(fs::exists(p2));
  auto stamp = fs::last_write_time(p2);
  CHECK(run("classify --weights 3,4,5 --cache " + dir.string()).out == first.out);
  CHECK(fs::last_write_time(p2) == stamp);
  std::ofstream(p2) << "{ broken";
  CHECK(run("classify --weights 3,4,5 --cache " + dir.string()).out == first.out);
  CHECK_NOTHROW(nlohmann::json::parse(slurp(p2)));
  fs::remove_all(dir);
}

TEST_CASE("tables are written deterministically") {
  auto a = scratch("tables-a"), b = scratch("tables-b");
  REQUIRE(run("tables --weights 3,4,5 --out " + a.string()).status == 0);
  REQUIRE(run("tables --weights 3,4,5 --out " + b.string()).status == 0);
  for (const char* name : {"basis-3_4_5.md", "vanishing-3_4_5.md", "actions-3_4_5.md", "classification-3_4_5.md"}) {
    INFO(name);
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
  }
  fs::remove_all(a);
  fs::remove_all(b);
}
