// cli_report.hpp
//
// The gbz command line: sieve, fujii, variance, paircorr, bounds, theorem7
// and fetch-zeros. Exit codes are 0 ok, 1 usage, 2 data or I/O, 3 failed
// verification.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gbz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitVerify = 3;

using Cell = std::variant<double, std::string>;

struct Report {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// %.17g numbers, header row, LF line ends.
void write_csv(std::ostream& out, const Report& report);

// Array of flat objects keyed by the CSV columns; non-finite numbers become
// null.
void write_json(std::ostream& out, const Report& report);

// Runs one command line. Reports go to `out` (or to --output-dir), summaries
// and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of a file.
std::string sha256_file(const std::string& path);

}  // namespace gbz::cli
