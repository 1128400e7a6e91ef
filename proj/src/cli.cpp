#include "dubinswind/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dubinswind::cli {

namespace {

constexpr double kDegToRad = kPi / 180.0;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.15g", v); }

std::vector<double> parse_list(const std::string& flag, const std::string& text, std::size_t count) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v))
      throw InputError(flag + ": '" + item + "' is not a number");
    values.push_back(v);
  }
  if (values.size() != count)
    throw InputError(flag + ": expected " + std::to_string(count) + " comma-separated values, got '" + text + "'");
  return values;
}

// Checks the scenario and names the flag responsible for the first problem.
void check_scenario(const Scenario& s) {
  if (s.wind.wx * s.wind.wx + s.wind.wy * s.wind.wy >= 1.0)
    throw InputError("--wind: wind speed must be below 1 (the airspeed)");
  if (!(s.rho > 0.0) || !std::isfinite(s.rho)) throw InputError("--rho: must be positive");
  if (!(s.tol.feas_tol > 0.0) || !std::isfinite(s.tol.feas_tol)) throw InputError("--feas-tol: must be positive");
  if (!(s.tol.residual_tol > 0.0) || !std::isfinite(s.tol.residual_tol))
    throw InputError("--residual-tol: must be positive");
  if (!std::isfinite(s.theta_f)) throw InputError("--theta-f-deg: must be finite");
  s.check();
}

std::string header_line(const Scenario& s) {
  std::string line = "scenario: wind (" + num(s.wind.wx) + ", " + num(s.wind.wy) + ")  target (" + num(s.target.x) +
                     ", " + num(s.target.y) + ")  theta_f " + num(s.theta_f / kDegToRad) + " deg  rho " + num(s.rho);
  if (s.start)
    line += "  start (" + num(s.start->x) + ", " + num(s.start->y) + ", " + num(s.start->heading / kDegToRad) +
            " deg)";
  return line;
}

int emit(std::ostream& out, const Scenario& s, const PlanResult& result, OutputFormat format, double dt) {
  if (format != OutputFormat::Csv) {
    out << header_line(s) << '\n';
    write_table(out, result);
  }
  if (!result.feasible()) return kExitInfeasible;
  if (format == OutputFormat::Both) out << '\n';
  if (format != OutputFormat::Table) write_csv(out, result, dt);
  return kExitOk;
}

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };

  Scenario straight;
  straight.target = {0.0, 10.0};
  straight.theta_f = kHalfPi;
  const PlanResult a = plan(straight);
  report(a.feasible() && std::abs(a.t_f - 10.0) < 1e-9, "calm straight-ahead goal is reached in 10");

  Scenario windy;
  windy.wind = {0.475, -0.155};
  windy.target = {5.0, -2.0};
  windy.theta_f = 72.0 * kDegToRad;
  const PlanResult b = plan(windy);
  report(b.feasible() && b.best->tag.variant == Variant::LSL, "windy example is won by LSL");
  bool residuals_ok = b.feasible();
  for (const auto& c : b.all_candidates) residuals_ok = residuals_ok && validate(c, b.normalized).position < 1e-9;
  report(residuals_ok, "every candidate meets the moving target");

  Scenario crosswind;
  crosswind.wind = {0.0, -(4.0 + 2.0 * std::sqrt(2.0)) / (9.0 * kPi)};
  crosswind.target = {1.0 - 1.0 / std::sqrt(2.0), -1.0};
  crosswind.theta_f = 45.0 * kDegToRad;
  const PlanResult c = plan(crosswind);
  report(c.feasible() && c.best->tag.variant == Variant::RL2pi && std::abs(c.t_f - 2.25 * kPi) < 1e-9,
         "pure crosswind example is won by RL2pi in 2.25 pi");
  return failures == 0 ? kExitOk : kExitInput;
}

}  // namespace

std::optional<Scenario> parse_batch_line(const std::string& line) {
  const std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<double> v;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw std::invalid_argument("'" + token + "' is not a number");
    v.push_back(x);
  }
  if (v.empty()) return std::nullopt;
  if (v.size() != 6)
    throw std::invalid_argument("expected 6 fields (wx wy XT0 YT0 theta_f_deg rho), got " + std::to_string(v.size()));
  Scenario s;
  s.wind = {v[0], v[1]};
  s.target = {v[2], v[3]};
  s.theta_f = v[4] * kDegToRad;
  s.rho = v[5];
  return s;
}

void write_table(std::ostream& out, const PlanResult& result) {
  if (result.widened) out << "note: no candidate at the requested feas_tol; retried with feas_tol x100\n";
  if (!result.feasible()) {
    out << "no feasible candidate\n";
    return;
  }
  char line[256];
  std::snprintf(line, sizeof line, "  %-8s %12s %12s %12s %12s %12s %10s\n", "variant", "alpha", "beta", "gamma", "d",
                "time", "residual");
  out << line;
  for (const auto& c : result.all_candidates) {
    const bool winner = &c == &result.all_candidates.front();
    const std::string name(to_string(c.tag.variant));
    std::snprintf(line, sizeof line, "%c %-8s %12.6f %12.6f %12.6f %12.6f %12.6f %10.2e\n", winner ? '*' : ' ',
                  name.c_str(), c.params.alpha, c.params.beta, c.params.gamma, c.params.d, c.total_time, c.residual);
    out << line;
  }
  out << "best: " << to_string(result.best->tag.variant) << "  t_f = " << fmt("%.6f", result.t_f) << '\n';
}

void write_csv(std::ostream& out, const PlanResult& result, double dt) {
  out << kCsvHeader << '\n';
  if (!result.feasible()) return;
  for (const auto& r : sample(*result.best, dt, result.normalized, result.denormalizing_transform)) {
    out << num(r.t) << ',' << num(r.x_rel) << ',' << num(r.y_rel) << ',' << num(r.theta) << ',' << r.u << ','
        << num(r.x_inertial) << ',' << num(r.y_inertial) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-time paths for a fixed-wing vehicle meeting a goal pose in steady wind", "dubinswind"};
  app.require_subcommand(1);

  std::string wind = "0,0", target, start, output = "table", out_path;
  double theta_deg = 0.0, rho = 1.0, dt = 0.1;
  ToleranceSet tol;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--feas-tol", tol.feas_tol, "Slack on feasibility equalities");
    cmd->add_option("--residual-tol", tol.residual_tol, "Terminal residual tolerance, scaled by 1 + t_f");
    cmd->add_option("--sample-dt", dt, "Trajectory sampling step");
    cmd->add_option("--output", output, "table, csv or both")->check(CLI::IsMember({"table", "csv", "both"}));
    cmd->add_option("--out", out_path, "Write to this file instead of stdout");
  };

  CLI::App* plan_cmd = app.add_subcommand("plan", "Plan a single scenario");
  plan_cmd->add_option("--wind", wind, "Wind WX,WY as a fraction of airspeed");
  plan_cmd->add_option("--target", target, "Goal position X,Y")->required();
  plan_cmd->add_option("--theta-f-deg", theta_deg, "Goal heading in degrees")->required();
  plan_cmd->add_option("--rho", rho, "Minimum turn radius");
  plan_cmd->add_option("--start", start, "Start pose X,Y,THETA_DEG");
  add_output_flags(plan_cmd);

  std::string batch_file;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Plan every scenario in a file");
  batch_cmd->add_option("file", batch_file, "One scenario per line: wx wy XT0 YT0 theta_f_deg rho")->required();
  add_output_flags(batch_cmd);

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run built-in sanity checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitInput;
  }

  if (*selftest_cmd) return run_selftest(out);

  CliConfig config;
  config.output = output == "csv" ? OutputFormat::Csv : output == "both" ? OutputFormat::Both : OutputFormat::Table;
  config.sample_dt = dt;
  if (!out_path.empty()) config.output_path = out_path;
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    err << "error: --sample-dt: must be positive\n";
    return kExitInput;
  }

  std::ofstream file;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "error: --out: cannot open '" << *config.output_path << "'\n";
      return kExitInput;
    }
  }
  std::ostream& sink = config.output_path ? static_cast<std::ostream&>(file) : out;

  if (*plan_cmd) {
    config.mode = Mode::Plan;
    try {
      const auto w = parse_list("--wind", wind, 2);
      const auto t = parse_list("--target", target, 2);
      config.scenario.wind = {w[0], w[1]};
      config.scenario.target = {t[0], t[1]};
      config.scenario.theta_f = theta_deg * kDegToRad;
      config.scenario.rho = rho;
      config.scenario.tol = tol;
      if (!start.empty()) {
        const auto p = parse_list("--start", start, 3);
        config.scenario.start = Pose{p[0], p[1], p[2] * kDegToRad};
      }
      check_scenario(config.scenario);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    const PlanResult result = plan(config.scenario);
    const int status = emit(sink, config.scenario, result, config.output, config.sample_dt);
    if (status == kExitInfeasible) err << "no feasible candidate\n";
    return status;
  }

  config.mode = Mode::Batch;
  config.batch_file = batch_file;
  std::ifstream in(config.batch_file);
  if (!in) {
    err << "error: batch: cannot read '" << config.batch_file << "'\n";
    return kExitInput;
  }
  int status = kExitOk;
  std::string line;
  int line_no = 0;
  int block = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::optional<Scenario> s;
    try {
      s = parse_batch_line(line);
      if (!s) continue;
      s->tol = tol;
      check_scenario(*s);
    } catch (const std::invalid_argument& e) {
      err << "error: " << config.batch_file << ':' << line_no << ": " << e.what() << '\n';
      status = kExitInput;
      continue;
    }
    if (block++ > 0) sink << '\n';
    sink << "# line " << line_no << '\n';
    const int st = emit(sink, *s, plan(*s), config.output, config.sample_dt);
    if (st == kExitInfeasible && status == kExitOk) status = kExitInfeasible;
  }
  return status;
}

}  // namespace dubinswind::cli
