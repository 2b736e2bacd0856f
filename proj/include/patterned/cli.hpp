#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace patterned::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Every tunable the subcommands read. Loaded from --config JSON first;
/// command-line flags override.
struct RunConfig {
  std::uint64_t limit = 100;
  std::size_t k = 12;
  std::string turns; // explicit L/R word; overrides k for curve commands
  double alpha = 1.0;
  double beta = 0.5;
  double theta_l = 0.78539816339744830962;  // pi/4
  double theta_r = -0.78539816339744830962; // -pi/4
  double g_l = 1.0;
  double g_r = 1.0;
  std::string omega_mode = "energy"; // energy | constant
  double omega = 1.0;
  double s = 0.5;
  std::string s_grid = "0:1:11"; // start:stop:count, or comma list
  std::string format = "csv";    // csv | json | bfile (gen only)
  std::string out;               // empty: stdout
  std::string svg;               // curve commands: SVG destination
  double unit = 20.0;
  std::size_t generations = 4;
  std::size_t edge_cap = std::size_t{1} << 20;
  std::size_t steps = 100;
  std::size_t positions = 0; // 0: patterned count <= limit
  std::size_t start = 0;     // 0-based walk start position
  std::string start_coin = "R";
  std::string boundary = "reflecting"; // reflecting | absorbing
  std::string placements = "0:0:0:0;90:0:0:0;180:0:0:0;270:0:0:0"; // rot:reflect:tx:ty
  bool all = false;           // gen: include non-patterned rows
  bool gap_primes = false;    // primes/dag: include gap primes
  bool chain = true;          // dag
  bool cluster = true;        // dag
};

/// Throws InvalidInput on unknown keys or wrongly typed values.
RunConfig config_from_json(const nlohmann::json& j);

/// Parses "a:b:n" (n evenly spaced points, inclusive) or "x,y,z".
std::vector<double> parse_s_grid(const std::string& spec);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace patterned::cli
