#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bohr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// One solved radius as printed by `radius`.
struct OutputRecord {
  std::string theorem;
  std::string class_name;
  std::string functional;
  std::optional<double> p;
  std::optional<int> N;
  double radius = 0.0;
  double bracket_width = 0.0;
  bool sharp = false;
};

/// Radius rounded to 6 decimals (round-half-even on the exact binary value).
std::string format_radius(double radius);

std::string to_text(const OutputRecord& record);
std::string csv_header();
std::string to_csv_row(const OutputRecord& record);
std::string to_json(const OutputRecord& record);

/// Runs the command line `bohr <args...>` (program name excluded).
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
