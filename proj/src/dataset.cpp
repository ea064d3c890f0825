#include "isingcoh/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>

#include "isingcoh/limits.hpp"
#include "isingcoh/observables.hpp"
#include "isingcoh/spectrum.hpp"

namespace isingcoh {

namespace {

using Extra = std::function<double(const ModelParams&, Temperature)>;

struct Curve {
  std::string column;
  ModelParams params;
};

// One row per temperature: the coherence of every curve, then the extras
// evaluated at `base`.
Dataset temperature_family(std::string id, const ModelParams& base, const std::vector<double>& temps,
                           const std::vector<Curve>& curves,
                           const std::vector<std::pair<std::string, Extra>>& extras) {
  Dataset out;
  out.id = std::move(id);
  out.columns.push_back("T");
  for (const auto& c : curves) out.columns.push_back(c.column);
  for (const auto& e : extras) out.columns.push_back(e.first);

  std::vector<SweepResult> per_curve;
  for (const auto& c : curves) {
    per_curve.push_back(sweep(c.params, Temperature(0.0), SweepVariable::T, temps));
  }
  for (std::size_t i = 0; i < temps.size(); ++i) {
    std::vector<Cell> row{temps[i]};
    for (const auto& r : per_curve) row.emplace_back(r.rows[i].c);
    for (const auto& e : extras) row.emplace_back(e.second(base, Temperature(temps[i])));
    out.rows.push_back(std::move(row));
  }
  out.manifest.emplace_back("base_params", describe(base));
  out.manifest.emplace_back("t_grid", "log " + format_real(temps.front()) + " " +
                                          format_real(temps.back()) + " " +
                                          std::to_string(temps.size()));
  for (const auto& c : curves) out.manifest.emplace_back("curve." + c.column, describe(c.params));
  return out;
}

ModelParams params(double omega0, double omega_a, double gamma, double j, int n) {
  return validate({omega0, omega_a, gamma, j, n});
}

std::string label_of(const char* name, double v) { return std::string("C_") + name + format_real(v); }

template <class Setter>
std::vector<Curve> family(const ModelParams& base, const char* name, const std::vector<double>& values,
                          Setter set) {
  std::vector<Curve> out;
  for (double v : values) {
    ModelParams p = base;
    set(p, v);
    out.push_back({label_of(name, v), validate(p)});
  }
  return out;
}

const char* kPresetNote = "curve-family values are presets, not stated with the source parameters";

Dataset fig1a() {
  const ModelParams base = params(10, 2, 3, 0, 8);
  auto curves = family(base, "J", {0, 1, 4, 16, 64}, [](ModelParams& p, double v) { p.j = v; });
  Dataset d = temperature_family(
      "fig1a", base, default_temperature_grid(base.omega0), curves,
      {{"C_ub", [](const ModelParams& p, Temperature t) { return upper_bound(p, t); }},
       {"C_lb", [](const ModelParams& p, Temperature t) { return lower_bound(p, t); }}});
  d.manifest.emplace_back("source_parameters", "omega0=10 omega_a=2 gamma=3 N=8");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig1b() {
  const ModelParams base = params(10, 2, 3, 250, 8);
  Dataset d = temperature_family(
      "fig1b", base, log_grid(1.0, 1e5, 200), {{"C", base}},
      {{"high_t_leading",
        [](const ModelParams& p, Temperature t) {
          return high_t_asymptotic(p, t, HighTOrder::Leading).value;
        }},
       {"high_t_two_term", [](const ModelParams& p, Temperature t) {
          return high_t_asymptotic(p, t, HighTOrder::LeadingPlusSubleading).value;
        }}});
  d.manifest.emplace_back("source_parameters", "omega0=10 omega_a=2 gamma=3 N=8 J=250");
  d.manifest.emplace_back("preset_note", "high-temperature grid [1, 1e5] is a preset");
  return d;
}

Dataset fig1c() {
  const ModelParams base = params(10, 2, 3, 250, 8);
  Dataset d = temperature_family(
      "fig1c", base, log_grid(1.0, 1e5, 200), {{"C", base}},
      {{"C_ub", [](const ModelParams& p, Temperature t) { return upper_bound(p, t); }},
       {"t_limit_first",
        [](const ModelParams& p, Temperature t) {
          return high_t_asymptotic(p, t, HighTOrder::LeadingPlusSubleading).value;
        }},
       {"j_limit_first",
        [](const ModelParams& p, Temperature t) { return upper_bound_high_t(p, t); }}});
  d.manifest.emplace_back("source_parameters", "omega0=10 omega_a=2 gamma=3 N=8 J=250");
  d.manifest.emplace_back("preset_note", "high-temperature grid [1, 1e5] is a preset");
  return d;
}

Dataset fig2a() {
  const ModelParams base = params(10, 2, 3, 4, 6);
  auto curves = family(base, "gamma", {0.5, 1, 3, 10}, [](ModelParams& p, double v) { p.gamma = v; });
  Dataset d = temperature_family(
      "fig2a", base, default_temperature_grid(base.omega0), curves,
      {{"gamma_inf_limit",
        [](const ModelParams& p, Temperature t) { return gamma_infinity_limit(p, t); }}});
  d.manifest.emplace_back("source_parameters", "omega0=10 J=4 omega_a=2 N=6");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig2b() {
  const ModelParams base = params(10, 2, 3, 4, 7);
  auto curves =
      family(base, "omega_a", {0.5, 1, 2, 5, 10}, [](ModelParams& p, double v) { p.omega_a = v; });
  Dataset d = temperature_family(
      "fig2b", base, default_temperature_grid(base.omega0), curves,
      {{"omega_a_inf_limit",
        [](const ModelParams& p, Temperature t) { return omega_a_infinity_limit(p, t); }}});
  d.manifest.emplace_back("source_parameters", "omega0=10 J=4 gamma=3 N=7");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig2c() {
  const ModelParams base = params(10, 2, 3, 4, 8);
  auto curves = family(base, "N", {1, 2, 4, 8, 16},
                       [](ModelParams& p, double v) { p.n = static_cast<int>(v); });
  Dataset d = temperature_family("fig2c", base, default_temperature_grid(base.omega0), curves, {});
  d.manifest.emplace_back("source_parameters", "omega0=10 J=4 omega_a=2 gamma=3");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig3a() {
  const ModelParams base = params(20, 12, 3, 0, 8);
  std::vector<double> omega_a_grid;
  for (double half : linear_grid(0.25, 12.0, 48)) omega_a_grid.push_back(2.0 * half);
  Dataset d = phase_diagram(base, linear_grid(-12.0, 2.0, 57), omega_a_grid);
  d.id = "fig3a";
  d.manifest.emplace_back("source_parameters", "omega0=20 gamma=3 N=8");
  d.manifest.emplace_back("preset_note", "grid extent is a preset");
  return d;
}

Dataset fig3b() {
  const ModelParams base = params(20, 12, 3, -6.7, 8);
  const double j_pt = *transition_j(base);
  auto curves = family(base, "J", {-10, -8, -5, -2}, [](ModelParams& p, double v) { p.j = v; });
  ModelParams at_pt = base;
  at_pt.j = j_pt;
  curves.insert(curves.begin() + 2, Curve{"C_J_pt", at_pt});
  Dataset d = temperature_family("fig3b", base, default_temperature_grid(base.omega0), curves, {});
  d.manifest.emplace_back("source_parameters", "omega0=20 gamma=3 omega_a=12 N=8");
  d.manifest.emplace_back("j_pt", format_real(j_pt));
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig3c() {
  const ModelParams base = params(20, 12, 3, -6.7, 8);
  auto curves =
      family(base, "omega_a", {8, 10, 12, 14, 16}, [](ModelParams& p, double v) { p.omega_a = v; });
  Dataset d = temperature_family("fig3c", base, default_temperature_grid(base.omega0), curves, {});
  d.manifest.emplace_back("source_parameters", "omega0=20 gamma=3 J=-6.7 N=8");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

Dataset fig3d() {
  const ModelParams base = params(20, 12, 3, -6.7, 8);
  auto curves = family(base, "gamma", {1, 3, 5, 10}, [](ModelParams& p, double v) { p.gamma = v; });
  Dataset d = temperature_family("fig3d", base, default_temperature_grid(base.omega0), curves, {});
  d.manifest.emplace_back("source_parameters", "omega0=20 omega_a=12 J=-6.7 N=8");
  d.manifest.emplace_back("preset_note", kPresetNote);
  return d;
}

}  // namespace

std::size_t Dataset::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "' in " + id);
  return static_cast<std::size_t>(it - columns.begin());
}

double Dataset::number(std::size_t row, const std::string& name) const {
  return std::get<double>(rows.at(row).at(column(name)));
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1a", "fig1b", "fig1c", "fig2a", "fig2b",
                                            "fig2c", "fig3a", "fig3b", "fig3c", "fig3d"};
  return ids;
}

Dataset figure_dataset(const std::string& id) {
  if (id == "fig1a") return fig1a();
  if (id == "fig1b") return fig1b();
  if (id == "fig1c") return fig1c();
  if (id == "fig2a") return fig2a();
  if (id == "fig2b") return fig2b();
  if (id == "fig2c") return fig2c();
  if (id == "fig3a") return fig3a();
  if (id == "fig3b") return fig3b();
  if (id == "fig3c") return fig3c();
  if (id == "fig3d") return fig3d();
  throw UnknownFigure("unknown figure '" + id + "'");
}

std::vector<double> default_temperature_grid(double omega0) {
  return log_grid(1e-2 * omega0 / 10.0, 1e3 * omega0 / 10.0, 200);
}

Dataset phase_diagram(const ModelParams& base, const std::vector<double>& j_grid,
                      const std::vector<double>& omega_a_grid) {
  Dataset out;
  out.id = "phase-diagram";
  out.columns = {"J", "omega_a", "omega_a_half", "label", "delta_e_min", "c0", "j_pt"};
  for (double j : j_grid) {
    for (double wa : omega_a_grid) {
      ModelParams p = base;
      p.j = j;
      p.omega_a = wa;
      p = validate(p);
      const PhaseInfo phase = phase_classify(p);
      const auto j_pt = transition_j(p);
      out.rows.push_back({j, wa, 0.5 * wa, std::string(to_string(phase.label)), phase.delta_e_min,
                          ground_manifold_coherence(p), j_pt ? *j_pt : NAN});
    }
  }
  out.manifest.emplace_back("base_params", describe(base));
  out.manifest.emplace_back("j_grid", format_real(j_grid.front()) + " " + format_real(j_grid.back()) +
                                          " " + std::to_string(j_grid.size()));
  out.manifest.emplace_back("omega_a_grid", format_real(omega_a_grid.front()) + " " +
                                                format_real(omega_a_grid.back()) + " " +
                                                std::to_string(omega_a_grid.size()));
  return out;
}

Dataset sweep_dataset(const SweepResult& result) {
  Dataset out;
  out.id = std::string("sweep-") + to_string(result.variable);
  out.columns = {to_string(result.variable), "C"};
  const bool bounds = !result.rows.empty() && result.rows.front().c_ub.has_value();
  const bool asym = std::any_of(result.rows.begin(), result.rows.end(),
                                [](const SweepRow& r) { return r.high_t_leading.has_value(); });
  if (bounds) {
    out.columns.push_back("C_ub");
    out.columns.push_back("C_lb");
  }
  if (asym) {
    out.columns.push_back("high_t_leading");
    out.columns.push_back("high_t_two_term");
  }
  auto opt = [](const std::optional<double>& v) -> Cell {
    return v ? Cell{*v} : Cell{std::string()};
  };
  for (const SweepRow& r : result.rows) {
    std::vector<Cell> row{r.x, r.c};
    if (bounds) {
      row.push_back(opt(r.c_ub));
      row.push_back(opt(r.c_lb));
    }
    if (asym) {
      row.push_back(opt(r.high_t_leading));
      row.push_back(opt(r.high_t_two_term));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Dataset& data) {
  for (std::size_t i = 0; i < data.columns.size(); ++i) {
    os << (i ? "," : "") << data.columns[i];
  }
  os << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const double* v = std::get_if<double>(&row[i])) {
        os << format_real(*v);
      } else {
        os << std::get<std::string>(row[i]);
      }
    }
    os << '\n';
  }
}

void write_manifest(std::ostream& os,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
}

}  // namespace isingcoh
