#include "horizon/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "horizon/correlations.hpp"
#include "horizon/errors.hpp"
#include "horizon/fock_oracle.hpp"
#include "horizon/horizon_map.hpp"
#include "horizon/state_factory.hpp"
#include "horizon/sweep.hpp"

namespace horizon::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnwritableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Splices `key = value` lines from the --config file in right after the
// subcommand, skipping keys the user set explicitly; flags therefore win
// over the file, and the file over built-in defaults.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;

  std::ifstream file(*path);
  if (!file) throw UsageError("cannot read config file " + *path);
  std::vector<std::string> injected;
  std::string line;
  while (std::getline(file, line)) {
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + content);
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (!given_on_command_line(args, key)) injected.push_back("--" + key + "=" + value);
  }

  const auto subcommand = std::find_if(args.begin(), args.end(),
                                       [](const std::string& a) { return a.rfind('-', 0) != 0; });
  const auto insert_at = subcommand == args.end() ? args.end() : subcommand + 1;
  args.insert(insert_at, injected.begin(), injected.end());
  return args;
}

// Writes to --out when given, otherwise to the provided stream.
void emit(const std::string& out_path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(fallback);
    return;
  }
  std::ostringstream buffer;
  writer(buffer);
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UnwritableError("cannot open output path " + out_path);
  file << buffer.str();
  file.flush();
  if (!file) throw UnwritableError("failed writing output path " + out_path);
}

struct XiValue {
  double value = 0.0;
  bool infinite = false;
};

XiValue parse_xi(const std::string& text) {
  if (text == "inf" || text == "infinity") return {0.0, true};
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("--xi expects a number or 'inf', got '" + text + "'");
  }
  if (!(value >= 0.0) || !std::isfinite(value)) throw UsageError("--xi must be non-negative");
  return {value, false};
}

void require_positive(std::optional<double> v, const char* name) {
  if (v && !(*v > 0.0)) throw UsageError(std::string("--") + name + " must be positive");
}

SweepAxis parse_axis(const std::string& text) {
  // name:start:stop:count[:linear|log]
  std::vector<std::string> parts;
  std::stringstream stream(text);
  for (std::string part; std::getline(stream, part, ':');) parts.push_back(part);
  if (parts.size() != 4 && parts.size() != 5) {
    throw UsageError("--axis expects name:start:stop:count[:linear|log], got '" + text + "'");
  }
  const auto name = parse_parameter(parts[0]);
  if (!name) throw UsageError("unknown axis '" + parts[0] + "' (xi, mass, lambda, nu)");
  SweepAxis axis{*name, 0.0, 0.0, 0};
  try {
    axis.start = std::stod(parts[1]);
    axis.stop = std::stod(parts[2]);
    const long count = std::stol(parts[3]);
    if (count < 0) throw std::invalid_argument("count");
    axis.count = static_cast<std::size_t>(count);
  } catch (const std::exception&) {
    throw UsageError("malformed numbers in --axis '" + text + "'");
  }
  if (parts.size() == 5) {
    if (parts[4] == "log") {
      axis.spacing = Spacing::log;
    } else if (parts[4] != "linear") {
      throw UsageError("axis spacing must be linear or log");
    }
  }
  return axis;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlations of a two-mode squeezed field across a black-hole horizon",
               "horizon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string config_help;
  app.add_option("--config", config_help,
                 "key=value file supplying defaults for the subcommand's options");

  std::string format = "json";
  std::string out_path;
  std::string xi_text;
  std::optional<double> mass, lambda, nu, l, n;
  unsigned workers = 0;

  // measure
  auto* measure = app.add_subcommand("measure", "Evaluate every correlation quantity at one point");
  measure->add_option("--xi", xi_text, "Kruskal squeezing (number or 'inf')")->required();
  measure->add_option("--mass", mass, "Black-hole mass");
  measure->add_option("--lambda", lambda, "Frequency of the first mode");
  measure->add_option("--nu", nu, "Frequency of the second mode");
  measure->add_option("--l", l, "Effective squeezing of the first mode (instead of mass/lambda)");
  measure->add_option("--n", n, "Effective squeezing of the second mode (instead of mass/nu)");
  measure->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  measure->add_option("--out", out_path, "Output file (default: stdout)");

  // sweep
  std::vector<std::string> axis_texts;
  std::string sweep_xi = "1";
  double sweep_mass = 1.0, sweep_lambda = 1.0, sweep_nu = 2.0;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a 1- or 2-axis parameter grid to CSV");
  sweep->add_option("--axis", axis_texts, "name:start:stop:count[:linear|log]; outer axis first")
      ->required();
  sweep->add_option("--xi", sweep_xi, "Fixed Kruskal squeezing (number or 'inf')");
  sweep->add_option("--mass", sweep_mass, "Fixed black-hole mass");
  sweep->add_option("--lambda", sweep_lambda, "Fixed first frequency");
  sweep->add_option("--nu", sweep_nu, "Fixed second frequency");
  sweep->add_option("--out", out_path, "Output file (default: stdout)");
  sweep->add_option("--workers", workers, "Worker threads (0 = all cores)");

  // figure
  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "Write one of the built-in figure data sets");
  figure->add_option("name", figure_name, "fig1a | fig1a-inset | fig1b | fig2 | fig3")->required();
  figure->add_option("--out", out_path, "Output file (default: stdout)");
  figure->add_option("--workers", workers, "Worker threads (0 = all cores)");

  // critical-mass
  double cm_lambda = 0.0, cm_nu = 0.0;
  auto* critical = app.add_subcommand("critical-mass",
                                      "Mass below which the outer modes are never entangled");
  critical->add_option("--lambda", cm_lambda, "First frequency")->required();
  critical->add_option("--nu", cm_nu, "Second frequency")->required();
  critical->add_option("--out", out_path, "Output file (default: stdout)");

  // oracle
  double oracle_r = 1.0;
  std::vector<std::size_t> truncations = {10, 20, 40, 60, 80};
  auto* oracle = app.add_subcommand("oracle", "Fock-basis convergence table for the squeezer");
  oracle->add_option("--r", oracle_r, "Squeezing parameter")->check(CLI::NonNegativeNumber);
  oracle->add_option("--truncations", truncations, "Fock truncations to tabulate")
      ->delimiter(',');
  oracle->add_option("--out", out_path, "Output file (default: stdout)");

  // state
  std::string route = "product";
  double state_xi = 0.0, state_l = 0.0, state_n = 0.0;
  auto* state = app.add_subcommand("state", "Dump the four-mode covariance matrix as CSV");
  state->add_option("--xi", state_xi, "Kruskal squeezing")->check(CLI::NonNegativeNumber);
  state->add_option("--l", state_l, "Squeezing of the first frequency")->check(CLI::NonNegativeNumber);
  state->add_option("--n", state_n, "Squeezing of the second frequency")->check(CLI::NonNegativeNumber);
  state->add_option("--route", route, "Construction route")
      ->check(CLI::IsMember({"product", "blocks"}));
  state->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*measure) {
      const XiValue xi = parse_xi(xi_text);
      const bool physical = mass || lambda || nu;
      const bool direct = l || n;
      if (physical == direct) {
        throw UsageError("give exactly one of (--mass, --lambda, --nu) or (--l, --n)");
      }
      double l_value = 0.0, n_value = 0.0;
      std::string description = "measure xi=" + (xi.infinite ? std::string("inf") : format_number(xi.value));
      if (physical) {
        if (!mass || !lambda || !nu) throw UsageError("--mass, --lambda and --nu go together");
        require_positive(mass, "mass");
        require_positive(lambda, "lambda");
        require_positive(nu, "nu");
        l_value = squeezing_parameter({*mass, *lambda});
        n_value = squeezing_parameter({*mass, *nu});
        description += " mass=" + format_number(*mass) + " lambda=" + format_number(*lambda) +
                       " nu=" + format_number(*nu);
      } else {
        if (!l || !n) throw UsageError("--l and --n go together");
        if (!(*l >= 0.0) || !(*n >= 0.0)) throw UsageError("--l and --n must be non-negative");
        l_value = *l;
        n_value = *n;
        description += " l=" + format_number(*l) + " n=" + format_number(*n);
      }
      const SqueezingTriple triple = xi.infinite ? SqueezingTriple::infinite(l_value, n_value)
                                                 : SqueezingTriple::finite(xi.value, l_value, n_value);
      const CorrelationReport report = evaluate_report(triple);
      emit(out_path, out, [&](std::ostream& os) {
        if (format == "csv") {
          write_report_csv(os, report, provenance_line(description));
        } else {
          os << report_json(report) << '\n';
        }
      });
    } else if (*sweep) {
      SweepSpec spec;
      for (const std::string& text : axis_texts) spec.axes.push_back(parse_axis(text));
      const XiValue xi = parse_xi(sweep_xi);
      spec.xi = xi.value;
      spec.xi_infinite = xi.infinite;
      spec.mass = sweep_mass;
      spec.lambda = sweep_lambda;
      spec.nu = sweep_nu;
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const std::vector<SweepRow> rows = run_sweep(spec, workers);
      emit(out_path, out, [&](std::ostream& os) {
        write_sweep_csv(os, rows, provenance_line(describe(spec)));
      });
    } else if (*figure) {
      const bool known = std::find(std::begin(kFigureNames), std::end(kFigureNames), figure_name) !=
                         std::end(kFigureNames);
      if (!known) throw UsageError("unknown figure '" + figure_name + "'");
      emit(out_path, out, [&](std::ostream& os) { write_figure(os, figure_name, workers); });
    } else if (*critical) {
      if (!(cm_lambda > 0.0) || !(cm_nu > 0.0)) {
        throw UsageError("--lambda and --nu must be positive");
      }
      const double value = critical_mass(cm_lambda, cm_nu);
      emit(out_path, out, [&](std::ostream& os) {
        os << "{\"critical_mass\":" << format_number(value, 12) << "}\n";
      });
    } else if (*oracle) {
      emit(out_path, out, [&](std::ostream& os) {
        const Matrix expected = kruskal_state(oracle_r).matrix();
        const double exact_entropy = kruskal_entanglement(oracle_r);
        const double exact_occupation = std::sinh(oracle_r) * std::sinh(oracle_r);
        os << provenance_line("oracle r=" + format_number(oracle_r)) << '\n'
           << "d,norm_defect,entropy,entropy_error,occupation_error,cm_error\n";
        for (std::size_t d : truncations) {
          if (d == 0) throw UsageError("truncations must be positive");
          const fock::TruncatedTwoModeState s = fock::truncated_tms(oracle_r, d);
          const double entropy = fock::reduced_entropy(s);
          const double cm_error = (fock::second_moments(s) - expected).cwiseAbs().maxCoeff();
          os << d << ',' << format_number(1.0 - s.norm_squared()) << ',' << format_number(entropy)
             << ',' << format_number(std::abs(entropy - exact_entropy)) << ','
             << format_number(std::abs(fock::mean_occupation(s) - exact_occupation)) << ','
             << format_number(cm_error) << '\n';
        }
      });
    } else if (*state) {
      const SqueezingTriple triple = SqueezingTriple::finite(state_xi, state_l, state_n);
      const CovarianceMatrix sigma = route == "blocks" ? schwarzschild_state_blocks(triple)
                                                       : schwarzschild_state_product(triple);
      emit(out_path, out, [&](std::ostream& os) { write_matrix_csv(os, sigma.matrix()); });
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnwritableError& e) {
    err << "error: " << e.what() << '\n';
    return kUnwritable;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalDomain;
  }
  return kOk;
}

}  // namespace horizon::cli
