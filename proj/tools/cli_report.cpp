#include "cli_report.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <regex>
#include <thread>

#include <httplib.h>

#include "gbz/error.hpp"
#include "gbz/fourier_bounds.hpp"
#include "gbz/goldbach_sums.hpp"
#include "gbz/lambda_sieve.hpp"
#include "gbz/pair_correlation.hpp"
#include "gbz/variance_lab.hpp"
#include "gbz/zeta_zeros.hpp"

#ifndef GBZ_DEFAULT_ZEROS
#define GBZ_DEFAULT_ZEROS "data/zeros_10k.txt"
#endif

namespace fs = std::filesystem;

namespace gbz::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, double> kDefaultTolerances = {
    {"fujii.multiplier", 10.0},  {"variance.max_ratio", 1.0},
    {"paircorr.ratio_lo", 0.5},  {"paircorr.ratio_hi", 2.0},
    {"paircorr.symmetry", 1e-9}, {"bounds.max_ratio", 10.0},
    {"theorem7.lo", 0.8},        {"theorem7.hi", 1.2},
};

struct Settings {
  std::string zeros_path = GBZ_DEFAULT_ZEROS;
  std::size_t zeros_limit = 0;
  std::string format = "csv";
  std::string output_dir;
  bool verify = false;
  unsigned threads = 1;
  std::vector<std::string> tol_overrides;
  std::map<std::string, double> tol = kDefaultTolerances;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

std::string render_row(const Report& r, const std::vector<Cell>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ' ';
    s += r.columns[i] + '=' + render_cell(row[i]);
  }
  return s;
}

void apply_tolerances(Settings& s) {
  for (const auto& item : s.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects key=value, got " + item);
    const std::string key = item.substr(0, eq);
    if (!s.tol.count(key)) throw UsageError("unknown tolerance '" + key + "'");
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("tolerance '" + key + "' is not a number");
    }
    if (!(v > 0.0)) throw UsageError("tolerance '" + key + "' must be positive");
    s.tol[key] = v;
  }
}

template <class T>
void require_sorted(const std::vector<T>& v, const char* name) {
  if (v.empty()) throw UsageError(std::string(name) + " is empty");
  if (!std::is_sorted(v.begin(), v.end())) {
    throw UsageError(std::string(name) + " must be sorted ascending");
  }
}

fs::path cache_dir() {
  if (const char* env = std::getenv("GBZ_CACHE_DIR"); env && *env) return env;
  return "cache";
}

LambdaTable obtain_table(std::int64_t n_max, std::ostream& err) {
  const fs::path cached = cache_dir() / ("lambda_" + std::to_string(n_max) + ".bin");
  if (fs::exists(cached)) {
    err << "using cached table " << cached.string() << "\n";
    return load_lambda_cache(cached);
  }
  return build_lambda_table(n_max);
}

ZeroTable obtain_zeros(const Settings& s, std::ostream& err) {
  ZeroTable z;
  try {
    z = load_zeros(s.zeros_path);
  } catch (const EmptyFileError& e) {
    err << "warning: " << e.what() << "; continuing with an empty zero table\n";
    return {};
  }
  if (s.zeros_limit > 0 && s.zeros_limit < z.size()) {
    std::vector<double> head(z.gammas.begin(),
                             z.gammas.begin() + static_cast<std::ptrdiff_t>(s.zeros_limit));
    z = make_zero_table(std::move(head), z.source, z.precision_digits);
  }
  return z;
}

void emit(const Settings& s, const Report& r, std::ostream& out) {
  if (s.output_dir.empty()) {
    s.format == "json" ? write_json(out, r) : write_csv(out, r);
    return;
  }
  fs::create_directories(s.output_dir);
  const fs::path path = fs::path(s.output_dir) / (r.name + "." + s.format);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  s.format == "json" ? write_json(f, r) : write_csv(f, r);
  if (!f) throw IoError("short write to " + path.string());
}

// Every failing row is printed to err.
int finish(const Settings& s, const Report& r,
           const std::vector<std::optional<std::string>>& failures,
           std::ostream& out, std::ostream& err) {
  emit(s, r, out);
  if (!s.verify) {
    err << r.name << ": " << r.rows.size() << " rows\n";
    return kExitOk;
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i]) continue;
    ++bad;
    err << "FAIL " << r.name << ": " << *failures[i] << " | "
        << render_row(r, r.rows[i]) << "\n";
  }
  if (bad) return kExitVerify;
  err << r.name << ": " << r.rows.size() << " rows verified\n";
  return kExitOk;
}

// --- sieve ---------------------------------------------------------------

struct SieveArgs {
  std::int64_t n_max = 0;
  std::int64_t cap = kDefaultSieveCap;
  std::string out;
  std::string load;
};

int cmd_sieve(const Settings&, const SieveArgs& a, std::ostream&, std::ostream& err) {
  if (!a.load.empty()) {
    const auto t = load_lambda_cache(a.load, a.cap);
    err << "sieve: " << a.load << " valid, n_max " << t.n_max() << ", ψ(n_max) "
        << format_number(t.psi_prefix().back()) << "\n";
    return kExitOk;
  }
  if (a.n_max < 1) throw UsageError("--n-max is required and must be positive");
  const auto t = build_lambda_table(a.n_max, a.cap);
  const fs::path path = a.out.empty()
                            ? cache_dir() / ("lambda_" + std::to_string(a.n_max) + ".bin")
                            : fs::path(a.out);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  save_lambda_cache(t, path);
  err << "sieve: n_max " << a.n_max << ", " << t.support().size()
      << " prime powers, ψ(n_max) " << format_number(t.psi_prefix().back())
      << " -> " << path.string() << "\n";
  return kExitOk;
}

// --- fujii ---------------------------------------------------------------

struct FujiiArgs {
  std::vector<std::int64_t> n_grid{100, 1000, 10000};
  double T = 0.0;
  std::string method = "fft";
};

int cmd_fujii(const Settings& s, const FujiiArgs& a, std::ostream& out,
              std::ostream& err) {
  require_sorted(a.n_grid, "--n-grid");
  if (a.n_grid.front() < 2) throw UsageError("--n-grid values must be >= 2");
  const auto zeros = obtain_zeros(s, err);
  const double T = a.T > 0.0 ? a.T : zeros.max_height;
  const auto table = obtain_table(a.n_grid.back(), err);
  const auto series = psi2_all(table, a.n_grid.back(),
                               a.method == "direct" ? ConvolutionMethod::kDirect
                                                    : ConvolutionMethod::kFft);
  Report r{"fujii", {}, {}};
  std::vector<std::optional<std::string>> fails;
  const double mult = s.tol.at("fujii.multiplier");
  for (auto N : a.n_grid) {
    const auto b = fujii_breakdown(series, table, zeros, N, T);
    const auto cols = fujii_columns(b);
    if (r.columns.empty()) {
      for (const auto& [name, v] : cols) r.columns.push_back(name);
    }
    std::vector<Cell> row;
    for (const auto& [name, v] : cols) row.emplace_back(v);
    r.rows.push_back(std::move(row));
    if (!std::isfinite(b.tail_bound)) {
      fails.emplace_back("no usable tail bound (zero table below height 20)");
    } else if (std::abs(b.residual) > mult * b.tail_bound) {
      fails.emplace_back("|residual| exceeds " + format_number(mult) + "·tail_bound");
    } else {
      fails.emplace_back();
    }
  }
  return finish(s, r, fails, out, err);
}

// --- variance ------------------------------------------------------------

struct VarianceArgs {
  std::string kind = "J";
  std::vector<double> xs{1000, 10000, 100000};
  std::vector<double> h_grid{1, 10, 100};
  std::vector<double> delta_grid{0.01, 0.1, 1.0};
};

int cmd_variance(const Settings& s, const VarianceArgs& a, std::ostream& out,
                 std::ostream& err) {
  const auto kind = parse_variance_kind(a.kind);
  require_sorted(a.xs, "--x");
  const auto& params = kind == VarianceKind::kCalJ ? a.delta_grid : a.h_grid;
  if (kind != VarianceKind::kH) require_sorted(params, "parameter grid");
  double reach = a.xs.back();
  if (kind == VarianceKind::kJ) reach += params.back();
  if (kind == VarianceKind::kCalJ) reach *= 1.0 + params.back();
  const auto table = obtain_table(static_cast<std::int64_t>(std::ceil(reach)), err);
  const auto curve = bound_ratio_curve(table, kind, a.xs, params);
  Report r{"variance", {"kind", "x", "param", "value", "normalizer", "ratio"}, {}};
  std::vector<std::optional<std::string>> fails;
  const double cap = s.tol.at("variance.max_ratio");
  for (const auto& row : curve.rows) {
    r.rows.push_back({std::string(variance_kind_name(kind)), row.x, row.param,
                      row.value, row.normalizer, row.ratio});
    if (!(row.ratio <= cap)) {
      fails.emplace_back("ratio above " + format_number(cap));
    } else {
      fails.emplace_back();
    }
  }
  return finish(s, r, fails, out, err);
}

// --- paircorr ------------------------------------------------------------

struct PairArgs {
  double T = 0.0;
  std::string x_mode = "standard";
  std::vector<double> xs;
  std::string mode = "auto";
  double window = kDefaultPairWindow;
  std::size_t exact_cap = kExactPairCap;
};

int cmd_paircorr(const Settings& s, const PairArgs& a, std::ostream& out,
                 std::ostream& err) {
  const auto zeros = obtain_zeros(s, err);
  const double T = a.T > 0.0 ? a.T : zeros.max_height;
  std::vector<double> xs;
  if (a.x_mode == "sqrtT") {
    xs = {std::sqrt(T)};
  } else if (a.x_mode == "standard") {
    xs = {std::pow(T, 0.3), std::pow(T, 0.5), std::pow(T, 0.8), T};
  } else {
    xs = a.xs;
    require_sorted(xs, "--x");
  }
  PairOptions opt;
  opt.exact_cap = a.exact_cap;
  opt.threads = s.threads;
  const std::size_t m = T > 0.0 ? count_zeros(zeros, T) : 0;
  const bool exact = a.mode == "exact" || (a.mode == "auto" && m <= a.exact_cap);
  auto eval = [&](double x) {
    return exact ? F_exact(zeros, x, T, opt) : F_windowed(zeros, x, T, a.window, opt);
  };

  Report r{"paircorr",
           {"x", "T", "F", "main_term", "ratio", "mode", "window", "truncation_bound"},
           {}};
  std::vector<std::optional<std::string>> fails;
  const double lo = s.tol.at("paircorr.ratio_lo");
  const double hi = s.tol.at("paircorr.ratio_hi");
  const double sym = s.tol.at("paircorr.symmetry");
  bool large_phase = false;
  for (double x : xs) {
    const auto res = eval(x);
    large_phase = large_phase || res.large_phase;
    r.rows.push_back({res.x, res.T, res.F_value, res.main_term, res.ratio,
                      std::string(pair_mode_name(res.mode)), res.window,
                      res.truncation_bound});
    if (!s.verify) {
      fails.emplace_back();
      continue;
    }
    std::optional<std::string> why;
    if (!(res.F_value >= 0.0)) why = "F is negative";
    if (!why) {
      const double mirror = eval(1.0 / x).F_value;
      if (std::abs(mirror - res.F_value) > sym * std::abs(res.F_value)) {
        why = "F(1/x) = " + format_number(mirror) + " differs from F(x)";
      }
    }
    if (!why && !(res.ratio >= lo && res.ratio <= hi)) {
      why = "ratio outside [" + format_number(lo) + ", " + format_number(hi) + "]";
    }
    fails.push_back(why);
  }
  if (large_phase) err << "note: some phases exceeded 1e8 rad and used compensated reduction\n";
  return finish(s, r, fails, out, err);
}

// --- bounds --------------------------------------------------------------

struct BoundsArgs {
  std::vector<std::int64_t> n_grid{100, 1000, 10000};
  std::size_t grid_size = 0;
};

int cmd_bounds(const Settings& s, const BoundsArgs& a, std::ostream& out,
               std::ostream& err) {
  require_sorted(a.n_grid, "--n-grid");
  if (a.n_grid.front() < 2) throw UsageError("--n-grid values must be >= 2");
  const auto table = obtain_table(default_n_trunc(a.n_grid.back()), err);
  const auto series = psi2_all(table, a.n_grid.back(), ConvolutionMethod::kFft);
  Report r{"bounds",
           {"N", "M", "n_trunc", "curlyE", "quad_uncertainty", "E_exact",
            "ratio_E_over_NlogcubeN"},
           {}};
  std::vector<std::optional<std::string>> fails;
  const double cap = s.tol.at("bounds.max_ratio");
  for (auto N : a.n_grid) {
    const auto grid = build_grid(table, N, a.grid_size);
    const auto e = curlyE(grid);
    const double E = fujii_error_E(series, table, N);
    const auto n = static_cast<double>(N);
    const double l = std::log(n);
    const double ratio = e.value / (n * l * l * l);
    r.rows.push_back({n, static_cast<double>(grid.M), static_cast<double>(grid.n_trunc),
                      e.value, e.uncertainty, E, ratio});
    std::optional<std::string> why;
    if (std::abs(E) > e.value + e.uncertainty) why = "|E(N)| exceeds ℰ(N)";
    if (!why && !(ratio <= cap)) why = "ℰ/(N log³N) above " + format_number(cap);
    if (!why && s.verify) {
      const double lhs = std::abs(psi(table, n) - n);
      if (lhs > 3.0 * std::sqrt(e.value * l)) why = "|ψ(N) - N| exceeds 3√(ℰ log N)";
    }
    fails.push_back(why);
  }
  return finish(s, r, fails, out, err);
}

// --- theorem7 ------------------------------------------------------------

struct Theorem7Args {
  std::vector<std::int64_t> ns{10000, 100000};
};

int cmd_theorem7(const Settings& s, const Theorem7Args& a, std::ostream& out,
                 std::ostream& err) {
  require_sorted(a.ns, "--n");
  if (a.ns.front() < 2) throw UsageError("--n values must be >= 2");
  const auto table = obtain_table(a.ns.back(), err);
  const auto series = psi2_all(table, a.ns.back(), ConvolutionMethod::kFft);
  Report r{"theorem7", {"N", "odd_sum", "even_sum", "ratio"}, {}};
  std::vector<std::optional<std::string>> fails;
  const double lo = s.tol.at("theorem7.lo");
  const double hi = s.tol.at("theorem7.hi");
  for (auto N : a.ns) {
    const auto split = odd_even_split(series, N);
    const auto n = static_cast<double>(N);
    const double ratio = split.odd_sum / (2.0 * n * std::log(n));
    r.rows.push_back({n, split.odd_sum, split.even_sum, ratio});
    if (!(ratio >= lo && ratio <= hi)) {
      fails.emplace_back("ratio outside [" + format_number(lo) + ", " +
                         format_number(hi) + "]");
    } else {
      fails.emplace_back();
    }
  }
  return finish(s, r, fails, out, err);
}

// --- fetch-zeros ---------------------------------------------------------

struct FetchArgs {
  std::string url;
  std::string sha256;
  std::string out = "zeros.txt";
  int timeout_s = 30;
};

int cmd_fetch(const Settings&, const FetchArgs& a, std::ostream&, std::ostream& err) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(a.url, m, kUrl)) throw UsageError("malformed --url " + a.url);
  std::string want = a.sha256;
  std::transform(want.begin(), want.end(), want.begin(), ::tolower);
  if (want.size() != 64 || want.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw UsageError("--sha256 must be 64 hex digits");
  }
  const fs::path dest(a.out);
  if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
  const fs::path tmp = dest.string() + ".part";

  httplib::Client client(m[1].str());
  client.set_follow_location(true);
  client.set_connection_timeout(a.timeout_s, 0);
  client.set_read_timeout(a.timeout_s, 0);
  const std::string path = m[2].matched ? m[2].str() : "/";
  int status = 0;
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    auto res = client.Get(
        path,
        [&](const httplib::Response& resp) {
          status = resp.status;
          return resp.status == 200;
        },
        [&](const char* data, std::size_t len) {
          f.write(data, static_cast<std::streamsize>(len));
          return static_cast<bool>(f);
        });
    if (!res && status == 0) {
      f.close();
      fs::remove(tmp);
      throw IoError("network error fetching " + a.url + ": " +
                    httplib::to_string(res.error()));
    }
  }
  if (status != 200) {
    fs::remove(tmp);
    throw IoError("HTTP status " + std::to_string(status) + " from " + a.url);
  }
  const std::string got = sha256_file(tmp.string());
  if (got != want) {
    fs::remove(tmp);
    throw IoError("checksum mismatch for " + a.url + ": got " + got);
  }
  try {
    const auto z = load_zeros(tmp);
    err << "fetch-zeros: " << z.size() << " ordinates up to "
        << format_number(z.max_height) << " -> " << dest.string() << "\n";
  } catch (...) {
    fs::remove(tmp);
    throw;
  }
  fs::rename(tmp, dest);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kDomain:
    case ErrorKind::kSize:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

void write_csv(std::ostream& out, const Report& report) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << report.columns[i];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Report& report) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* d = std::get_if<double>(&row[i])) {
        obj[report.columns[i]] =
            std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
      } else {
        obj[report.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 unavailable");
  }
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  static const char* kHex = "0123456789abcdef";
  std::string hex;
  for (unsigned i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldbach averages, ψ variances and zeta-zero correlations", "gbz"};
  app.set_config("--config", "", "INI file; [command] sections, flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--zeros", s.zeros_path, "Zero ordinate file")->capture_default_str();
  app.add_option("--zeros-limit", s.zeros_limit, "Use only the first K zeros");
  app.add_option("--format", s.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output-dir", s.output_dir, "Write <command>.<format> here");
  app.add_flag("--verify", s.verify, "Apply the acceptance thresholds");
  app.add_option("--threads", s.threads, "Worker threads (0 = all cores)");
  app.add_option("--tol", s.tol_overrides, "Tolerance override key=value");

  SieveArgs sieve_a;
  auto* sieve = app.add_subcommand("sieve", "Build and cache a Λ table");
  sieve->add_option("--n-max", sieve_a.n_max, "Table size")->check(CLI::PositiveNumber);
  sieve->add_option("--cap", sieve_a.cap, "Largest n_max accepted")->capture_default_str();
  sieve->add_option("--out", sieve_a.out, "Cache file");
  sieve->add_option("--load", sieve_a.load, "Validate an existing cache file");

  FujiiArgs fujii_a;
  auto* fujii = app.add_subcommand("fujii", "Average Goldbach identity breakdown");
  fujii->add_option("--n-grid", fujii_a.n_grid)->delimiter(',')->capture_default_str();
  fujii->add_option("--T", fujii_a.T, "Zero height (default: whole table)");
  fujii->add_option("--method", fujii_a.method)
      ->check(CLI::IsMember({"direct", "fft"}))
      ->capture_default_str();

  VarianceArgs var_a;
  auto* variance = app.add_subcommand("variance", "H, J and 𝒥 ratio curves");
  variance->add_option("--kind", var_a.kind)
      ->check(CLI::IsMember({"H", "J", "calJ"}))
      ->capture_default_str();
  variance->add_option("--x", var_a.xs)->delimiter(',')->capture_default_str();
  variance->add_option("--h-grid", var_a.h_grid)->delimiter(',')->capture_default_str();
  variance->add_option("--delta-grid", var_a.delta_grid)->delimiter(',')->capture_default_str();

  PairArgs pair_a;
  auto* paircorr = app.add_subcommand("paircorr", "Montgomery's F(x,T)");
  paircorr->add_option("--T", pair_a.T, "Zero height (default: whole table)");
  paircorr->add_option("--x-mode", pair_a.x_mode)
      ->check(CLI::IsMember({"standard", "sqrtT", "list"}))
      ->capture_default_str();
  paircorr->add_option("--x", pair_a.xs, "x values for --x-mode list")->delimiter(',');
  paircorr->add_option("--mode", pair_a.mode)
      ->check(CLI::IsMember({"auto", "exact", "windowed"}))
      ->capture_default_str();
  paircorr->add_option("--window", pair_a.window)->check(CLI::PositiveNumber)->capture_default_str();
  paircorr->add_option("--exact-cap", pair_a.exact_cap)->capture_default_str();

  BoundsArgs bounds_a;
  auto* bounds = app.add_subcommand("bounds", "ℰ(N) against E(N) and the PNT chain");
  bounds->add_option("--n-grid", bounds_a.n_grid)->delimiter(',')->capture_default_str();
  bounds->add_option("--grid-size", bounds_a.grid_size, "DFT length (0 = default)");

  Theorem7Args t7_a;
  auto* theorem7 = app.add_subcommand("theorem7", "Odd-n Goldbach sum over 2N log N");
  theorem7->add_option("--n", t7_a.ns)->delimiter(',')->capture_default_str();

  FetchArgs fetch_a;
  auto* fetch = app.add_subcommand("fetch-zeros", "Download and checksum a zero file");
  fetch->add_option("--url", fetch_a.url)->required();
  fetch->add_option("--sha256", fetch_a.sha256)->required();
  fetch->add_option("--out", fetch_a.out)->capture_default_str();
  fetch->add_option("--timeout", fetch_a.timeout_s, "Seconds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_tolerances(s);
    if (s.threads == 0) s.threads = std::max(1u, std::thread::hardware_concurrency());
    if (*sieve) return cmd_sieve(s, sieve_a, out, err);
    if (*fujii) return cmd_fujii(s, fujii_a, out, err);
    if (*variance) return cmd_variance(s, var_a, out, err);
    if (*paircorr) return cmd_paircorr(s, pair_a, out, err);
    if (*bounds) return cmd_bounds(s, bounds_a, out, err);
    if (*theorem7) return cmd_theorem7(s, t7_a, out, err);
    if (*fetch) return cmd_fetch(s, fetch_a, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace gbz::cli
