#pragma once

// Parameter grids over (ξ, M, λ, ν), their parallel evaluation, and the CSV
// and JSON encodings used by the command-line tool.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/correlations.hpp"
#include "horizon/gaussian.hpp"

namespace horizon {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Parameter { xi, mass, lambda, nu };
enum class Spacing { linear, log };

std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);

struct SweepAxis {
  Parameter name;
  double start;
  double stop;
  std::size_t count;
  Spacing spacing = Spacing::linear;

  /// Grid values; both endpoints included exactly.
  std::vector<double> values() const;
};

struct SweepSpec {
  std::vector<SweepAxis> axes;  // outer axis first
  double xi = 1.0;
  double mass = 1.0;
  double lambda = 1.0;
  double nu = 2.0;
  bool xi_infinite = false;

  /// Throws std::invalid_argument when the spec is malformed.
  void validate() const;
};

struct PhysicalPoint {
  double xi;
  double mass;
  double lambda;
  double nu;
  bool xi_infinite;
};

struct SweepRow {
  PhysicalPoint point;
  double l;
  double n;
  CorrelationReport report;
};

SweepRow evaluate_point(const PhysicalPoint& point);

/// Every grid point in row-major order (outer axis slowest). Points are
/// split across `workers` threads (0 = hardware concurrency) but the result
/// order never depends on scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 0);

/// Locale-independent %g-style rendering; non-finite values become "inf",
/// "-inf" or "nan".
std::string format_number(double value, int significant_digits = 15);

/// "# horizon <version> <description>" followed by the non-finite legend.
std::string provenance_line(std::string_view description);
std::string describe(const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::string_view provenance);

/// One header row plus one data row of the report fields.
void write_report_csv(std::ostream& out, const CorrelationReport& report,
                      std::string_view provenance);
/// Flat object keyed by the report field names; non-finite values are
/// encoded as the strings "inf" / "nan".
std::string report_json(const CorrelationReport& report);

/// Row-major CSV, 17 significant digits.
void write_matrix_csv(std::ostream& out, const Matrix& m);

// Figure recipes.
inline constexpr std::size_t kFigureGrid = 60;
inline constexpr std::size_t kInsetGrid = 20;
inline constexpr std::string_view kFigureNames[] = {"fig1a", "fig1a-inset", "fig1b", "fig2",
                                                     "fig3"};

/// Spec of a surface figure; nullopt for unknown names and for fig1a-inset,
/// which is a three-axis sign table rather than a sweep.
std::optional<SweepSpec> figure_spec(std::string_view name);

/// Writes the named figure's data. Returns false for an unknown name.
bool write_figure(std::ostream& out, std::string_view name, unsigned workers = 0);

}  // namespace horizon
