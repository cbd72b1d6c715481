#include "horizon/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "horizon/horizon_map.hpp"

namespace horizon {

namespace {

constexpr std::string_view kNonFiniteLegend =
    "; inf = divergent xi->inf limit, nan = undefined at xi->inf";

bool is_physical_scale(Parameter p) { return p != Parameter::xi; }

double& slot(PhysicalPoint& point, Parameter p) {
  switch (p) {
    case Parameter::xi: return point.xi;
    case Parameter::mass: return point.mass;
    case Parameter::lambda: return point.lambda;
    case Parameter::nu: return point.nu;
  }
  throw std::logic_error("unreachable parameter");
}

std::string spacing_name(Spacing s) { return s == Spacing::log ? "log" : "linear"; }

}  // namespace

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::xi: return "xi";
    case Parameter::mass: return "mass";
    case Parameter::lambda: return "lambda";
    case Parameter::nu: return "nu";
  }
  return "?";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (Parameter p : {Parameter::xi, Parameter::mass, Parameter::lambda, Parameter::nu}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / last;
    if (spacing == Spacing::log) {
      out[k] = std::exp(std::log(start) + t * (std::log(stop) - std::log(start)));
    } else {
      out[k] = start + t * (stop - start);
    }
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) {
    throw std::invalid_argument("sweep needs one or two axes");
  }
  if (axes.size() == 2 && axes[0].name == axes[1].name) {
    throw std::invalid_argument("sweep axes must be distinct");
  }
  for (const SweepAxis& axis : axes) {
    const std::string name(to_string(axis.name));
    if (axis.count < 2) throw std::invalid_argument("axis " + name + ": count must be >= 2");
    if (!(axis.start < axis.stop) || !std::isfinite(axis.stop)) {
      throw std::invalid_argument("axis " + name + ": start must be below a finite stop");
    }
    if (is_physical_scale(axis.name) && !(axis.start > 0.0)) {
      throw std::invalid_argument("axis " + name + ": values must be positive");
    }
    if (axis.name == Parameter::xi) {
      if (xi_infinite) throw std::invalid_argument("cannot sweep xi with xi = inf");
      if (axis.start < 0.0) throw std::invalid_argument("axis xi: values must be non-negative");
    }
    if (axis.spacing == Spacing::log && !(axis.start > 0.0)) {
      throw std::invalid_argument("axis " + name + ": log spacing needs a positive start");
    }
  }
  for (auto [value, label] : {std::pair{mass, "mass"}, std::pair{lambda, "lambda"},
                              std::pair{nu, "nu"}}) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument(std::string(label) + " must be positive");
    }
  }
  if (!xi_infinite && (!(xi >= 0.0) || !std::isfinite(xi))) {
    throw std::invalid_argument("xi must be finite and non-negative");
  }
}

SweepRow evaluate_point(const PhysicalPoint& point) {
  const double l = squeezing_parameter({point.mass, point.lambda});
  const double n = squeezing_parameter({point.mass, point.nu});
  const SqueezingTriple triple =
      point.xi_infinite ? SqueezingTriple::infinite(l, n) : SqueezingTriple::finite(point.xi, l, n);
  return SweepRow{point, l, n, evaluate_report(triple)};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();

  std::vector<std::vector<double>> grids;
  for (const SweepAxis& axis : spec.axes) grids.push_back(axis.values());
  const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
  const std::size_t total = grids[0].size() * inner;

  const PhysicalPoint base{spec.xi, spec.mass, spec.lambda, spec.nu, spec.xi_infinite};
  const auto point_at = [&](std::size_t index) {
    PhysicalPoint p = base;
    slot(p, spec.axes[0].name) = grids[0][index / inner];
    if (grids.size() == 2) slot(p, spec.axes[1].name) = grids[1][index % inner];
    return p;
  };

  std::vector<SweepRow> rows(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      try {
        rows[i] = evaluate_point(point_at(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, significant_digits);
  return std::string(buffer, result.ptr);
}

std::string provenance_line(std::string_view description) {
  return "# horizon " + std::string(kToolVersion) + " " + std::string(description) +
         std::string(kNonFiniteLegend);
}

std::string describe(const SweepSpec& spec) {
  std::string text = "sweep";
  for (const SweepAxis& axis : spec.axes) {
    text += " " + std::string(to_string(axis.name)) + "=[" + format_number(axis.start) + "," +
            format_number(axis.stop) + "]x" + std::to_string(axis.count) + ":" +
            spacing_name(axis.spacing);
  }
  const auto is_axis = [&](Parameter p) {
    for (const SweepAxis& axis : spec.axes) {
      if (axis.name == p) return true;
    }
    return false;
  };
  if (!is_axis(Parameter::xi)) {
    text += " xi=" + (spec.xi_infinite ? std::string("inf") : format_number(spec.xi));
  }
  if (!is_axis(Parameter::mass)) text += " mass=" + format_number(spec.mass);
  if (!is_axis(Parameter::lambda)) text += " lambda=" + format_number(spec.lambda);
  if (!is_axis(Parameter::nu)) text += " nu=" + format_number(spec.nu);
  return text;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::string_view provenance) {
  out << provenance << '\n'
      << "xi,mass,lambda,nu,l,n,s_kruskal,i_kruskal,tau_kruskal,tau_out,i_out,tau_1v3,"
         "tau_residual,tau_tri_upper,entangled_out\n";
  for (const SweepRow& row : rows) {
    const PhysicalPoint& p = row.point;
    const CorrelationReport& r = row.report;
    const double xi = p.xi_infinite ? std::numeric_limits<double>::infinity() : p.xi;
    const double tau_kruskal = p.xi_infinite ? xi : in_out_contangle(p.xi);
    out << format_number(xi) << ',' << format_number(p.mass) << ',' << format_number(p.lambda)
        << ',' << format_number(p.nu) << ',' << format_number(row.l) << ','
        << format_number(row.n) << ',' << format_number(r.s_kruskal) << ','
        << format_number(r.i_kruskal) << ',' << format_number(tau_kruskal) << ','
        << format_number(r.tau_out) << ',' << format_number(r.i_out) << ','
        << format_number(r.tau_1v3) << ',' << format_number(r.tau_residual) << ','
        << format_number(r.tau_tri_upper) << ',' << (r.entangled_out ? 1 : 0) << '\n';
  }
}

void write_report_csv(std::ostream& out, const CorrelationReport& r,
                      std::string_view provenance) {
  out << provenance << '\n'
      << "s_kruskal,i_kruskal,tau_out,i_out,tau_in_out_lambda,tau_in_out_nu,tau_1v3,"
         "tau_residual,tau_tri_upper,entangled_out\n"
      << format_number(r.s_kruskal) << ',' << format_number(r.i_kruskal) << ','
      << format_number(r.tau_out) << ',' << format_number(r.i_out) << ','
      << format_number(r.tau_in_out_lambda) << ',' << format_number(r.tau_in_out_nu) << ','
      << format_number(r.tau_1v3) << ',' << format_number(r.tau_residual) << ','
      << format_number(r.tau_tri_upper) << ',' << (r.entangled_out ? 1 : 0) << '\n';
}

std::string report_json(const CorrelationReport& r) {
  const auto number = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return format_number(v);
  };
  nlohmann::ordered_json j;
  j["s_kruskal"] = number(r.s_kruskal);
  j["i_kruskal"] = number(r.i_kruskal);
  j["tau_out"] = number(r.tau_out);
  j["i_out"] = number(r.i_out);
  j["tau_in_out_lambda"] = number(r.tau_in_out_lambda);
  j["tau_in_out_nu"] = number(r.tau_in_out_nu);
  j["tau_1v3"] = number(r.tau_1v3);
  j["tau_residual"] = number(r.tau_residual);
  j["tau_tri_upper"] = number(r.tau_tri_upper);
  j["entangled_out"] = r.entangled_out;
  return j.dump();
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      if (col > 0) out << ',';
      out << format_number(m(row, col), 17);
    }
    out << '\n';
  }
}

std::optional<SweepSpec> figure_spec(std::string_view name) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const SweepAxis mass_axis{Parameter::mass, 0.01, 1.0, kFigureGrid};
  const SweepAxis xi_axis{Parameter::xi, 0.0, 3.0, kFigureGrid};

  if (name == "fig1a") {
    SweepSpec spec;
    spec.axes = {SweepAxis{Parameter::lambda, 0.05, 4.0, kFigureGrid},
                 SweepAxis{Parameter::nu, 0.05, 4.0, kFigureGrid}};
    spec.mass = 1.0 / two_pi;
    spec.xi_infinite = true;
    return spec;
  }
  if (name == "fig1b") {
    SweepSpec spec;
    spec.axes = {xi_axis, mass_axis};
    spec.lambda = 1.0;
    spec.nu = 2.0;
    return spec;
  }
  if (name == "fig2") {
    SweepSpec spec;
    spec.axes = {mass_axis, SweepAxis{Parameter::xi, 0.1, 3.0, kFigureGrid}};
    spec.lambda = 1.0;
    spec.nu = 2.0;
    return spec;
  }
  if (name == "fig3") {
    // The residual contangle depends on l_min only; ν = λ keeps l_min = l.
    SweepSpec spec;
    spec.axes = {xi_axis, mass_axis};
    spec.lambda = 1.0 / (4.0 * two_pi);
    spec.nu = spec.lambda;
    return spec;
  }
  return std::nullopt;
}

bool write_figure(std::ostream& out, std::string_view name, unsigned workers) {
  if (name == "fig1a-inset") {
    const std::vector<double> freqs = SweepAxis{Parameter::lambda, 0.1, 3.0, kInsetGrid}.values();
    const std::vector<double> masses = SweepAxis{Parameter::mass, 0.01, 0.5, kInsetGrid}.values();
    out << provenance_line("figure fig1a-inset lambda=[0.1,3]x20 nu=[0.1,3]x20 "
                           "mass=[0.01,0.5]x20 xi=inf")
        << '\n'
        << "lambda,nu,mass,survival_expression,survives\n";
    for (double lambda : freqs) {
      for (double nu : freqs) {
        for (double mass : masses) {
          const double expression = survival_expression(mass, lambda, nu);
          out << format_number(lambda) << ',' << format_number(nu) << ','
              << format_number(mass) << ',' << format_number(expression) << ','
              << (expression < 0.0 ? 1 : 0) << '\n';
        }
      }
    }
    return true;
  }
  const std::optional<SweepSpec> spec = figure_spec(name);
  if (!spec) return false;
  const std::vector<SweepRow> rows = run_sweep(*spec, workers);
  write_sweep_csv(out, rows, provenance_line("figure " + std::string(name) + " " + describe(*spec)));
  return true;
}

}  // namespace horizon
