// cnqual: sharp CFL bounds for positivity and max-norm contractivity of
// Crank-Nicolson stepping on the 1-D heat equation, with brute-force
// verification and a theta-method simulator. All data output is CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnqual/bounds.hpp"
#include "cnqual/csv.hpp"
#include "cnqual/oracle.hpp"
#include "cnqual/polynomials.hpp"
#include "cnqual/simulator.hpp"

namespace {

using cnqual::Property;

double bisect_tol_from_env() {
  const char* raw = std::getenv("CNQUAL_BISECT_TOL");
  if (raw == nullptr || *raw == '\0') return cnqual::kDefaultBisectTol;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0)) {
    throw std::invalid_argument("CNQUAL_BISECT_TOL must be a positive number");
  }
  return v;
}

int parse_full_int(const std::string& token) {
  size_t used = 0;
  const int v = std::stoi(token, &used);
  if (used != token.size()) throw std::invalid_argument(token);
  return v;
}

double parse_full_double(const std::string& token) {
  size_t used = 0;
  const double v = std::stod(token, &used);
  if (used != token.size()) throw std::invalid_argument(token);
  return v;
}

// "A..B", "a,b,c" or a single integer
std::vector<int> parse_m_list(const std::string& text) {
  std::vector<int> ms;
  const auto range_sep = text.find("..");
  if (range_sep != std::string::npos) {
    const int lo = parse_full_int(text.substr(0, range_sep));
    const int hi = parse_full_int(text.substr(range_sep + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument(text);
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    return ms;
  }
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const int v = parse_full_int(token);
    if (v < 1) throw std::invalid_argument(token);
    ms.push_back(v);
  }
  if (ms.empty()) throw std::invalid_argument(text);
  return ms;
}

Property parse_property(const std::string& name) {
  if (name == "positivity") return Property::Positivity;
  if (name == "contractivity") return Property::Contractivity;
  throw std::invalid_argument(name);
}

// Streams CSV either to stdout ("-") or to a file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_table(const std::string& property_name, const std::string& m_arg,
              bool include_limit, const std::string& output) {
  const Property property = parse_property(property_name);
  const std::vector<int> ms = parse_m_list(m_arg);
  const double tol = bisect_tol_from_env();
  const auto rows = cnqual::bound_table(property, ms, include_limit, tol);
  Output out(output);
  cnqual::write_bound_csv(out.stream(), rows);
  return 0;
}

int run_verify(const std::string& property_name, int m_max, double tol) {
  const Property property = parse_property(property_name);
  const auto report = cnqual::cross_validate(property, m_max, tol);
  cnqual::write_cross_validate_csv(std::cout, report);
  std::cerr << "max deviation " << cnqual::format_g15(report.max_deviation)
            << (report.all_pass ? " (pass)" : " (FAIL)") << "\n";
  return report.all_pass ? 0 : 1;
}

int run_simulate(int m, double theta, double tau, int steps, double profile,
                 const std::string& output) {
  cnqual::SimConfig config;
  config.grid.m = m;
  config.theta = theta;
  config.tau = tau;
  config.steps = steps;
  config.initial = cnqual::StepProfile{profile};
  const auto trace = cnqual::run(config);
  Output out(output);
  cnqual::write_trace_csv(out.stream(), trace);
  if (trace.first_positivity_violation) {
    std::cerr << "positivity violated at step " << *trace.first_positivity_violation
              << "\n";
  }
  if (trace.first_norm_violation) {
    std::cerr << "contractivity violated at step " << *trace.first_norm_violation
              << "\n";
  }
  if (!trace.first_positivity_violation && !trace.first_norm_violation) {
    std::cerr << "no violations\n";
  }
  return 0;
}

int run_poly(const std::string& kind_name, int n, const std::string& range,
             int samples, const std::string& output) {
  cnqual::PolyKind kind;
  if (kind_name == "U") {
    kind = cnqual::PolyKind::U;
  } else if (kind_name == "P") {
    kind = cnqual::PolyKind::P;
  } else if (kind_name == "C") {
    kind = cnqual::PolyKind::C;
  } else {
    throw std::invalid_argument(kind_name);
  }
  const auto sep = range.find(':');
  if (sep == std::string::npos) throw std::invalid_argument(range);
  const double lo = parse_full_double(range.substr(0, sep));
  const double hi = parse_full_double(range.substr(sep + 1));
  if (!(hi >= lo)) throw std::invalid_argument(range);

  std::vector<std::pair<double, double>> rows;
  rows.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double x = samples == 1 ? lo : lo + (hi - lo) * k / (samples - 1);
    rows.emplace_back(x, cnqual::eval_recurrence(kind, n, x));
  }
  Output out(output);
  cnqual::write_poly_csv(out.stream(), rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp CFL bounds for Crank-Nicolson positivity and contractivity"};
  app.require_subcommand(1);

  const std::vector<std::string> properties{"positivity", "contractivity"};

  auto* table = app.add_subcommand("table", "bound table as CSV");
  std::string table_property, table_m, table_output = "-";
  bool table_limit = false;
  table->add_option("--property", table_property, "positivity or contractivity")
      ->required()
      ->check(CLI::IsMember(properties));
  table->add_option("--m", table_m, "grid sizes: A..B or a,b,c")->required();
  table->add_flag("--limit", table_limit, "append the limit row");
  table->add_option("--output", table_output, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "closed-form bounds vs brute force");
  std::string verify_property;
  int verify_m_max = 16;
  double verify_tol = 1e-6;
  verify->add_option("--property", verify_property, "positivity or contractivity")
      ->required()
      ->check(CLI::IsMember(properties));
  verify->add_option("--m-max", verify_m_max, "largest grid size")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", verify_tol, "allowed deviation")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "theta-method time stepping");
  int sim_m = 7, sim_steps = 1;
  double sim_theta = 0.5, sim_tau = 0.0, sim_profile = 0.5;
  std::string sim_output = "-";
  simulate->add_option("--m", sim_m, "interior grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--theta", sim_theta, "theta in [0,1], 0.5 = Crank-Nicolson")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--tau", sim_tau, "time step")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--steps", sim_steps, "number of steps")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--step-profile", sim_profile, "initial step profile edge in (0,1)")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--output", sim_output, "trace CSV path, - for stdout");

  auto* poly = app.add_subcommand("poly", "sample a polynomial family as CSV");
  std::string poly_kind, poly_range, poly_output = "-";
  int poly_n = 0, poly_samples = 2;
  poly->add_option("--kind", poly_kind, "U, P or C")
      ->required()
      ->check(CLI::IsMember({"U", "P", "C"}));
  poly->add_option("--n", poly_n, "degree")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--range", poly_range, "abscissa range lo:hi")->required();
  poly->add_option("--samples", poly_samples, "number of sample points")
      ->required()
      ->check(CLI::PositiveNumber);
  poly->add_option("--output", poly_output, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return run_table(table_property, table_m, table_limit, table_output);
    if (verify->parsed()) return run_verify(verify_property, verify_m_max, verify_tol);
    if (simulate->parsed()) {
      return run_simulate(sim_m, sim_theta, sim_tau, sim_steps, sim_profile, sim_output);
    }
    if (poly->parsed()) {
      return run_poly(poly_kind, poly_n, poly_range, poly_samples, poly_output);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
