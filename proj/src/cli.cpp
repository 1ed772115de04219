#include "pmeqt/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "pmeqt/integrate.hpp"
#include "pmeqt/io.hpp"
#include "pmeqt/monotonicity.hpp"
#include "pmeqt/pme.hpp"
#include "pmeqt/qt.hpp"
#include "pmeqt/yd.hpp"

namespace pmeqt::cli {

namespace {

using io::Json;

constexpr const char* kRateSchemaHelp = R"(Rate-matrix JSON schema:
  {"n": <int>, "rates": [[row-major reals]]}
  rows = destination, columns = source: rates[i][j] is the rate of the jump
  from state j+1 to state i+1. Diagonal entries must be 0, off-diagonal
  entries must be >= 0. For n = 3 the named rates are
  a = rates[1][0], b = rates[2][0], c = rates[0][1],
  d = rates[2][1], e = rates[0][2], f = rates[1][2].

Exit codes: 0 success, 1 input validation, 2 solver failure, 3 internal error.)";

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUniqueStationary:
    case ErrorKind::DefectiveGenerator:
    case ErrorKind::SolveFailed:
    case ErrorKind::NoConvergence:
    case ErrorKind::DegenerateDenominator:
      return kSolverError;
    default:
      return kInputError;
  }
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "not a number: '" + item + "'");
    }
  }
  return out;
}

struct Vary {
  RateName name;
  AxisRange range;
};

Vary parse_vary(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) {
    throw Error(ErrorKind::InvalidArgument,
                "--vary expects name:lo:hi:steps, got '" + text + "'");
  }
  Vary v{parse_rate_name(parts[0]), {}};
  try {
    v.range.lo = std::stod(parts[1]);
    v.range.hi = std::stod(parts[2]);
    v.range.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad numbers in --vary '" + text + "'");
  }
  return v;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

QTDecomposition closed_form(const RateMatrix& w) {
  if (w.n() == 2) return decompose_2state(w);
  if (w.n() == 3) return decompose_3state(w);
  throw Error(ErrorKind::InvalidArgument, "closed-form decomposition exists only for n <= 3");
}

struct Options {
  std::string rates;
  std::string method;
  std::string p0;
  double t_end = 0.0;
  int steps = 0;
  bool monitor = false;
  std::vector<std::string> vary;
  int jobs = 0;
  std::string config;
  double a1 = 0.0, f1 = 0.0, d = 0.0, e = 0.0;
  double k_min = 0.0, k_max = 10.0;
  int k_steps = 101;
  std::string out;
};

int cmd_validate(const Options& o, std::ostream& out) {
  emit(out, io::to_json(io::read_rates_file(o.rates)));
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const RateMatrix w = io::read_rates_file(o.rates);
  std::string method = o.method;
  if (method.empty()) method = w.n() <= 3 ? "closed" : "numeric";
  const QTDecomposition qt = method == "closed" ? closed_form(w) : decompose_nstate(w);
  emit(out, io::to_json(qt));
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const RateMatrix w = io::read_rates_file(o.rates);
  Json doc;
  doc["structure"] = io::to_json(classify_structure(w));
  doc["spectrum"] = io::to_json(spectrum(generator_from_rates(w)));
  emit(out, doc);
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const RateMatrix w = io::read_rates_file(o.rates);
  const std::vector<double> vals = parse_csv_doubles(o.p0);
  if (static_cast<int>(vals.size()) != w.n()) {
    throw Error(ErrorKind::BadShape, "--p0 has " + std::to_string(vals.size()) +
                                         " entries, rate matrix has n = " +
                                         std::to_string(w.n()));
  }
  Vector entries = Eigen::Map<const Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
  const ProbabilityVector p0(std::move(entries));
  const Method method = o.method == "rk4" ? Method::RK4 : Method::Exact;
  const Trajectory traj = integrate(generator_from_rates(w), p0, o.t_end, o.steps, method);
  if (!o.monitor) {
    io::write_trajectory_csv(out, traj);
    return kOk;
  }
  const QTDecomposition qt = w.n() <= 3 ? closed_form(w) : decompose_nstate(w);
  const MonitorSeries mon = monitor(traj, &qt);
  io::write_trajectory_csv(out, traj, &mon);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const RateMatrix w = io::read_rates_file(o.rates);
  emit(out, io::classify_json(discriminant(w), uvw(w)));
  return kOk;
}

int cmd_sweep(Options o, std::ostream& out) {
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + o.config);
    Json cfg;
    try {
      cfg = Json::parse(in);
    } catch (const Json::parse_error& ex) {
      throw Error(ErrorKind::BadShape, o.config + ": " + ex.what());
    }
    for (const auto& [key, value] : cfg.items()) {
      if (key == "rates") {
        if (o.rates.empty()) {
          const std::filesystem::path path = value.get<std::string>();
          o.rates = (path.is_relative() ? std::filesystem::path(o.config).parent_path() / path : path)
                        .string();
        }
      } else if (key == "vary") {
        if (o.vary.empty()) o.vary = value.get<std::vector<std::string>>();
      } else if (key == "jobs") {
        if (o.jobs == 0) o.jobs = value.get<int>();
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
      }
    }
  }
  if (o.rates.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs --rates");
  if (o.vary.size() != 2) {
    throw Error(ErrorKind::BadAxis, "sweep needs exactly two --vary axes");
  }
  const RateMatrix w = io::read_rates_file(o.rates);
  const Vary v1 = parse_vary(o.vary[0]);
  const Vary v2 = parse_vary(o.vary[1]);
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  const RegionMap map = sweep(w, v1.name, v2.name, v1.range, v2.range);
  std::ostringstream buf;
  io::write_region_csv(buf, map);
  out << buf.str();
  return kOk;
}

int cmd_yd(const std::string& which, const Options& o, std::ostream& out) {
  const YDParams params(o.a1, o.f1, o.d, o.e);
  if (which == "curve") {
    io::write_yd_curve_csv(out, yd_curve(params, o.k_min, o.k_max, o.k_steps));
  } else if (which == "optimal") {
    const double k_opt = yd_optimal_arousal(params);
    Json doc;
    doc["k_opt"] = k_opt;
    doc["rho3"] = yd_rho3(params, k_opt);
    emit(out, doc);
  } else {
    emit(out, io::to_json(yd_consistency(params)));
  }
  return kOk;
}

void add_rates(CLI::App* sub, Options& o, bool required = true) {
  auto* opt = sub->add_option("--rates", o.rates, "rate-matrix JSON file");
  if (required) opt->required();
}

void add_yd_params(CLI::App* sub, Options& o) {
  sub->add_option("--a1", o.a1, "1->2 rate per unit arousal")->required();
  sub->add_option("--f1", o.f1, "3->2 rate per unit arousal")->required();
  sub->add_option("--d", o.d, "2->3 rate")->required();
  sub->add_option("--e", o.e, "3->1 rate")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quasithermodynamic analysis of Pauli master equations", "pmeqt"};
  app.footer(kRateSchemaHelp);
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "check a rate matrix and echo it");
  add_rates(validate, o);

  auto* decompose = app.add_subcommand("decompose", "entropy + hamiltonian decomposition");
  add_rates(decompose, o);
  decompose->add_option("--method", o.method, "closed (n <= 3) or numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));

  auto* analyze = app.add_subcommand("analyze", "stationary state, symmetry flags, spectrum");
  add_rates(analyze, o);

  auto* simulate = app.add_subcommand("simulate", "integrate the master equation to CSV");
  add_rates(simulate, o);
  simulate->add_option("--p0", o.p0, "initial probabilities, comma separated")->required();
  simulate->add_option("--t-end", o.t_end, "final time")->required();
  simulate->add_option("--steps", o.steps, "number of time steps")->required();
  simulate->add_option("--method", o.method, "exact or rk4")
      ->check(CLI::IsMember({"exact", "rk4"}));
  simulate->add_flag("--monitor", o.monitor, "append H, S and S_BS columns");

  auto* classify = app.add_subcommand("classify", "monotonic vs oscillatory relaxation (n = 3)");
  add_rates(classify, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "relaxation class over a 2-D rate grid");
  add_rates(sweep_cmd, o, false);
  sweep_cmd->add_option("--vary", o.vary, "name:lo:hi:steps, give twice");
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads (default: all processors)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--config", o.config, "JSON file with keys rates, vary, jobs");

  auto* yd = app.add_subcommand("yd", "three-state learning model");
  yd->require_subcommand(1);
  auto* yd_curve_cmd = yd->add_subcommand("curve", "stationary shares against arousal (CSV)");
  auto* yd_opt_cmd = yd->add_subcommand("optimal", "optimal arousal level (JSON)");
  auto* yd_check_cmd = yd->add_subcommand("check", "consistency condition (JSON)");
  for (auto* sub : {yd_curve_cmd, yd_opt_cmd, yd_check_cmd}) add_yd_params(sub, o);
  for (auto* sub : {validate, decompose, analyze, simulate, classify, sweep_cmd, yd_curve_cmd,
                    yd_opt_cmd, yd_check_cmd}) {
    sub->add_option("--out", o.out, "write the result to this file instead of stdout");
  }
  yd_curve_cmd->add_option("--k-min", o.k_min, "lowest arousal");
  yd_curve_cmd->add_option("--k-max", o.k_max, "highest arousal");
  yd_curve_cmd->add_option("--steps", o.k_steps, "grid points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    Json doc{{"error", Json{{"kind", "UsageError"}, {"message", e.what()}}}};
    err << doc.dump() << '\n';
    return kInputError;
  }

  std::ostringstream buffer;
  int code = -1;
  try {
    if (validate->parsed()) code = cmd_validate(o, buffer);
    else if (decompose->parsed()) code = cmd_decompose(o, buffer);
    else if (analyze->parsed()) code = cmd_analyze(o, buffer);
    else if (simulate->parsed()) code = cmd_simulate(o, buffer);
    else if (classify->parsed()) code = cmd_classify(o, buffer);
    else if (sweep_cmd->parsed()) code = cmd_sweep(o, buffer);
    else if (yd_curve_cmd->parsed()) code = cmd_yd("curve", o, buffer);
    else if (yd_opt_cmd->parsed()) code = cmd_yd("optimal", o, buffer);
    else if (yd_check_cmd->parsed()) code = cmd_yd("check", o, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n' << io::error_json(e).dump() << '\n';
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    err << Json{{"error", Json{{"kind", "BadShape"}, {"message", e.what()}}}}.dump() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    err << Json{{"error", Json{{"kind", "Internal"}, {"message", e.what()}}}}.dump() << '\n';
    return kInternalError;
  }
  if (code >= 0) {
    if (o.out.empty()) {
      out << buffer.str();
      return code;
    }
    std::ofstream file(o.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      err << Json{{"error", Json{{"kind", "InvalidArgument"}, {"message", "cannot write " + o.out}}}}.dump()
          << '\n';
      return kInputError;
    }
    return code;
  }
  err << "internal error: no subcommand dispatched\n";
  return kInternalError;
}

}  // namespace pmeqt::cli
