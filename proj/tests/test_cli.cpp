#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "cli_report.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace gbz::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome gbz_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gbz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "gbz_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

const std::string kZeros = oracle::data_file("zeros_10k.txt");

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(gbz_run({}).code == kExitUsage);
  CHECK(gbz_run({"sieve", "--n-max", "0"}).code == kExitUsage);
  CHECK(gbz_run({"nonsense"}).code == kExitUsage);
  CHECK(gbz_run({"theorem7", "--n", "1000,100"}).code == kExitUsage);
  CHECK(gbz_run({"theorem7", "--tol", "theorem7.lo=-1"}).code == kExitUsage);
  CHECK(gbz_run({"theorem7", "--tol", "bogus=1"}).code == kExitUsage);
  CHECK(gbz_run({"--help"}).code == kExitOk);
}

TEST_CASE("sieve writes and revalidates a cache") {
  const auto path = scratch("lambda.bin");
  fs::remove(path);
  auto r = gbz_run({"sieve", "--n-max", "1000000", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(fs::file_size(path) == 5 + 8 + 8 * 1000000);
  CHECK(gbz_run({"sieve", "--load", path.string()}).code == kExitOk);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(5 + 8 + 8 * 9 + 3);  // inside Λ(10)
    f.put(static_cast<char>(0x55));
  }
  r = gbz_run({"sieve", "--load", path.string()});
  CHECK(r.code == kExitData);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(gbz_run({"sieve", "--load", scratch("absent.bin").string()}).code == kExitData);
}

TEST_CASE("cache directory override") {
  const auto dir = scratch("cache_env");
  fs::remove_all(dir);
  setenv("GBZ_CACHE_DIR", dir.string().c_str(), 1);
  CHECK(gbz_run({"sieve", "--n-max", "1000"}).code == kExitOk);
  CHECK(fs::exists(dir / "lambda_1000.bin"));
  const auto r = gbz_run({"theorem7", "--n", "1000"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("using cached table") != std::string::npos);
  unsetenv("GBZ_CACHE_DIR");
}

TEST_CASE("fujii report") {
  auto r = gbz_run({"--zeros", kZeros, "fujii", "--n-grid", "100,1000,10000", "--verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("N,prime_side,main_quadratic,zero_sum", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);

  r = gbz_run({"fujii", "--n-grid", "100", "--format", "json", "--zeros", kZeros});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0].size() == 10);
  CHECK(j[0]["N"] == 100.0);

  const auto missing = gbz_run({"fujii", "--zeros", "/nonexistent/z.txt"});
  CHECK(missing.code == kExitData);

  const auto empty = scratch("empty_zeros.txt");
  std::ofstream(empty) << "# nothing here\n";
  r = gbz_run({"fujii", "--n-grid", "100", "--zeros", empty.string(), "--verify"});
  CHECK(r.code == kExitVerify);
  CHECK(r.err.find("FAIL fujii") != std::string::npos);
}

TEST_CASE("variance, bounds and theorem7 verify") {
  CHECK(gbz_run({"variance", "--kind", "J", "--x", "100000", "--h-grid", "10,100,1000",
                 "--verify"}).code == kExitOk);
  CHECK(gbz_run({"variance", "--kind", "H", "--x", "100,1000,10000", "--verify"}).code ==
        kExitOk);
  CHECK(gbz_run({"bounds", "--n-grid", "100,1000", "--verify"}).code == kExitOk);
  CHECK(gbz_run({"theorem7", "--n", "100000", "--verify"}).code == kExitOk);
  const auto r = gbz_run({"theorem7", "--n", "1000", "--verify"});
  CHECK(r.code == kExitVerify);
  CHECK(r.err.find("N=1000") != std::string::npos);
}

TEST_CASE("paircorr verify") {
  CHECK(gbz_run({"paircorr", "--x-mode", "sqrtT", "--verify", "--zeros", kZeros}).code ==
        kExitOk);
  const auto r = gbz_run({"paircorr", "--zeros", kZeros, "--zeros-limit", "2000",
                          "--mode", "exact", "--x-mode", "list", "--x", "2,30"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find(",exact,") != std::string::npos);
}

TEST_CASE("output is identical across runs and thread counts") {
  const auto dir1 = scratch("det1"), dir2 = scratch("det2");
  CHECK(gbz_run({"paircorr", "--zeros", kZeros, "--output-dir", dir1.string(),
                 "--threads", "1"}).code == kExitOk);
  CHECK(gbz_run({"paircorr", "--zeros", kZeros, "--output-dir", dir2.string(),
                 "--threads", "4"}).code == kExitOk);
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const auto a = slurp(dir1 / "paircorr.csv");
  CHECK(!a.empty());
  CHECK(a == slurp(dir2 / "paircorr.csv"));
}

TEST_CASE("config file with flag override") {
  const auto ini = scratch("run.ini");
  std::ofstream(ini) << "[theorem7]\nn = 1000\n";
  auto r = gbz_run({"--config", ini.string(), "theorem7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\n1000,") != std::string::npos);
  r = gbz_run({"--config", ini.string(), "theorem7", "--n", "2000"});
  CHECK(r.out.find("\n2000,") != std::string::npos);
}

TEST_CASE("fetch-zeros") {
  const std::string body = "# test\n14.134725141734693\n21.022039638771555\n";
  const auto src = scratch("served.txt");
  std::ofstream(src, std::ios::binary) << body;
  const std::string digest = sha256_file(src.string());

  httplib::Server server;
  server.Get("/zeros.txt", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(body, "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const auto out = scratch("fetched.txt");
  fs::remove(out);

  SUBCASE("checksum matches") {
    const auto r = gbz_run({"fetch-zeros", "--url", base + "/zeros.txt", "--sha256", digest,
                            "--out", out.string()});
    CHECK(r.code == kExitOk);
    CHECK(fs::exists(out));
    CHECK(sha256_file(out.string()) == digest);
  }
  SUBCASE("checksum mismatch leaves nothing behind") {
    const auto r = gbz_run({"fetch-zeros", "--url", base + "/zeros.txt", "--sha256",
                            std::string(64, '0'), "--out", out.string()});
    CHECK(r.code == kExitData);
    CHECK(r.err.find("checksum mismatch") != std::string::npos);
    CHECK(!fs::exists(out));
    CHECK(!fs::exists(out.string() + ".part"));
  }
  SUBCASE("missing file") {
    const auto r = gbz_run({"fetch-zeros", "--url", base + "/nope.txt", "--sha256", digest,
                            "--out", out.string()});
    CHECK(r.code == kExitData);
    CHECK(r.err.find("HTTP status 404") != std::string::npos);
  }
  server.stop();
  th.join();

  SUBCASE("unreachable host") {
    const auto r = gbz_run({"fetch-zeros", "--url", "http://127.0.0.1:1/zeros.txt",
                            "--sha256", digest, "--out", out.string(), "--timeout", "2"});
    CHECK(r.code == kExitData);
    CHECK(r.err.find("network error") != std::string::npos);
    CHECK(!fs::exists(out));
  }
}

TEST_CASE("csv and json writers") {
  Report rep{"t", {"a", "b"}, {{1.0 / 3.0, std::string("x")}, {std::nan(""), std::string("y")}}};
  std::ostringstream c, j;
  write_csv(c, rep);
  CHECK(c.str() == "a,b\n0.33333333333333331,x\nnan,y\n");
  write_json(j, rep);
  const auto parsed = nlohmann::json::parse(j.str());
  CHECK(parsed[1]["a"].is_null());
  CHECK(parsed[0]["b"] == "x");
}
