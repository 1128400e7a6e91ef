// Command-line front end.
//
//   dubinswind plan --wind WX,WY --target X,Y --theta-f-deg D [--rho R]
//                   [--start X,Y,THETA_DEG] [--feas-tol T] [--residual-tol T]
//                   [--sample-dt DT] [--output table|csv|both] [--out PATH]
//   dubinswind batch FILE [same output flags]
//   dubinswind selftest
//
// Exit status: 0 success, 1 input error, 2 no feasible candidate.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dubinswind/geometry.hpp"
#include "dubinswind/planner.hpp"

namespace dubinswind::cli {

enum class Mode { Plan, Batch, Selftest };
enum class OutputFormat { Table, Csv, Both };

struct CliConfig {
  Mode mode = Mode::Plan;
  Scenario scenario;
  std::string batch_file;
  OutputFormat output = OutputFormat::Table;
  double sample_dt = 0.1;
  std::optional<std::string> output_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;

inline constexpr const char* kCsvHeader = "t,x_rel,y_rel,theta,u,x_inertial,y_inertial";

/// Parses one batch line `wx wy XT0 YT0 theta_f_deg rho`. Returns nothing for
/// blank and comment lines; throws std::invalid_argument on malformed ones.
std::optional<Scenario> parse_batch_line(const std::string& line);

/// Candidate table for one plan result.
void write_table(std::ostream& out, const PlanResult& result);

/// Trajectory CSV for the winning path, header included.
void write_csv(std::ostream& out, const PlanResult& result, double dt);

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dubinswind::cli
