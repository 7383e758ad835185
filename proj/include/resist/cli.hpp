#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resist::cli {

/// Parsed command line. Every field is echoed into the output files.
struct RunConfig {
  std::string command;
  std::string generator;
  std::string graph;
  std::optional<int> depth;
  std::vector<int> depths;
  std::string scheme = "mu0";
  std::string data;
  std::optional<double> pendants;
  std::optional<double> limit;
  std::string bc = "default=absorbing";
  std::vector<double> times;
  std::string method = "auto";
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  unsigned jobs = 1;
  bool no_lump = false;
  double tolerance = 1e-10;
  // metric
  std::string from;
  bool volume = false;
  bool diameter = false;
  // cut
  std::string witness;
  std::string x;
  std::string y;
  std::string expect;
  // evolve
  std::string u;
  std::string p0 = "uniform";
};

/// "5..30" -> 5,6,...,30; "4,8,12" -> as listed; both forms may be mixed.
std::vector<int> expand_depths(std::string_view text);
/// "0,0.5,1" or "a..b:step" (step count rounded to the nearest integer).
std::vector<double> parse_times(std::string_view text);
/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Exit status: 0 success, 1 failed check, 2 configuration or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int main(int argc, char** argv);

}  // namespace resist::cli
