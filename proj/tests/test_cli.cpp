#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "schur-cli-test";
  fs::create_directories(dir);
  fs::path outf = dir / ("out" + std::to_string(counter) + ".txt");
  fs::path errf = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = g_cli_path + " " + args + " > " + outf.string() + " 2> " + errf.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  r.out = slurp(outf);
  r.err = slurp(errf);
  return r;
}

std::string temp_cache_path(const std::string& name) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "schur-cli-test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  fs::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("kl output and usage errors") {
  auto r = run_cli("kl --type A2 --w s1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "h(s1) = H_s1 + v*H_e\n");

  auto all = run_cli("kl --type A2 --all");
  CHECK(all.exit_code == 0);
  int rows = 0;
  for (char c : all.out) rows += (c == '\n');
  CHECK(rows == 6);

  CHECK(run_cli("kl --type Z9 --w s1").exit_code == 2);
  CHECK(run_cli("kl --w s1").exit_code == 2);
  CHECK(run_cli("kl --type A2").exit_code == 2);
  CHECK(run_cli("nonsense --type A2").exit_code == 2);
}

TEST_CASE("cosets and schur-mult") {
  auto r = run_cli("cosets --type A2 --I s1 --J s2");
  CHECK(r.exit_code == 0);
  int rows = 0;
  for (char c : r.out) rows += (c == '\n');
  CHECK(rows == 2);

  auto j = run_cli("cosets --type A2 --I s1 --J s2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"p_min\": \"s2.s1\"") != std::string::npos);
  CHECK(j.out.find("\"p_max\": \"s1.s2.s1\"") != std::string::npos);

  auto m = run_cli("schur-mult --type A2 --I s1 --J s2 --K s1,s2 --p e --q e --format json");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("\"terms\"") != std::string::npos);
}

TEST_CASE("char and phi") {
  auto r = run_cli("char --type A2 --chain \"0,{s1},0,{s2},0\" --decompose");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"p\": \"s1.s2\"") != std::string::npos);
  CHECK(r.out.find("\"positive\": true") != std::string::npos);

  auto p = run_cli("phi --type A2 --I s1 --J \"\" --p e --format json");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("x1 - x2") != std::string::npos);

  CHECK(run_cli("phi --type I2:5 --I s1 --J \"\" --p e").exit_code == 2);
}

TEST_CASE("verify suites and exit codes") {
  CHECK(run_cli("verify --type A2 --suite hecke").exit_code == 0);
  CHECK(run_cli("verify --type A2 --suite nosuchsuite").exit_code == 2);
  auto r = run_cli("verify --type A2 --suite poincare");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"status\": \"ok\"") != std::string::npos);
}

TEST_CASE("determinism: identical invocations give identical bytes") {
  std::string args = "verify --type A2 --suite parabolic";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run_cli("kl --type B2 --all --format json");
  auto d = run_cli("kl --type B2 --all --format json");
  CHECK(c.out == d.out);
}

TEST_CASE("cache round trip") {
  std::string cache = temp_cache_path("klcache.json");
  std::string args = "kl --type A2 --all --cache " + cache + " --stats";
  auto first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.err.find("\"kl_computed\": 0") == std::string::npos);

  auto second = run_cli(args);
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.find("\"kl_computed\": 0") != std::string::npos);

  // same cache against a different group: cache mismatch
  auto clash = run_cli("kl --type B2 --all --cache " + cache);
  CHECK(clash.exit_code == 3);

  // corrupt version header
  {
    std::ofstream out(cache);
    out << "{\"header\":{\"format_version\":999,\"spec_hash\":\"x\"},\"entries\":{}}\n";
  }
  CHECK(run_cli("kl --type A2 --all --cache " + cache).exit_code == 3);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--cli-path" && i + 1 < argc) g_cli_path = argv[++i];
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "test_cli requires --cli-path <binary>\n");
    return 1;
  }
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
