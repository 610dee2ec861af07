// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
//
// Command-line front end: solve Riemann problems, classify wave
// interactions, emit transition-curve data, and run the verification suite.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wavelab/wavelab.hpp"

namespace wl = wavelab;

namespace {

const char* wave_type_name(wl::WaveType t) {
  switch (t) {
    case wl::WaveType::Shock: return "Shock";
    case wl::WaveType::Rarefaction: return "Rarefaction";
    case wl::WaveType::ContactUp: return "ContactUp";
    case wl::WaveType::ContactDown: return "ContactDown";
    default: return "Null";
  }
}

const char* jump_name(wl::EntropyJump j) {
  switch (j) {
    case wl::EntropyJump::Up: return "Up";
    case wl::EntropyJump::Down: return "Down";
    default: return "None";
  }
}

const char* kind_name(wl::InteractionKind k) {
  switch (k) {
    case wl::InteractionKind::Ia: return "Ia";
    case wl::InteractionKind::Ib: return "Ib";
    case wl::InteractionKind::Ic: return "Ic";
    case wl::InteractionKind::IIa: return "IIa";
    case wl::InteractionKind::IIb: return "IIb";
    case wl::InteractionKind::IIc: return "IIc";
    case wl::InteractionKind::IId: return "IId";
    case wl::InteractionKind::IIIa: return "IIIa";
    case wl::InteractionKind::IIIb: return "IIIb";
    default: return "IIIc";
  }
}

wl::InteractionKind kind_from(const std::string& s) {
  static const std::pair<const char*, wl::InteractionKind> table[] = {
      {"Ia", wl::InteractionKind::Ia},     {"Ib", wl::InteractionKind::Ib},
      {"Ic", wl::InteractionKind::Ic},     {"IIa", wl::InteractionKind::IIa},
      {"IIb", wl::InteractionKind::IIb},   {"IIc", wl::InteractionKind::IIc},
      {"IId", wl::InteractionKind::IId},   {"IIIa", wl::InteractionKind::IIIa},
      {"IIIb", wl::InteractionKind::IIIb}, {"IIIc", wl::InteractionKind::IIIc},
  };
  for (const auto& [name, kind] : table)
    if (s == name) return kind;
  throw std::invalid_argument("unknown interaction kind: " + s);
}

wl::AtlasPanel panel_from(const std::string& s) {
  if (s == "groupI") return wl::AtlasPanel::GroupI;
  if (s == "groupII") return wl::AtlasPanel::GroupII;
  if (s == "groupIII") return wl::AtlasPanel::GroupIII;
  throw std::invalid_argument("unknown panel: " + s +
                              " (expected groupI, groupII, or groupIII)");
}

double parse_double(const std::string& text, const char* what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::invalid_argument(std::string("malformed number in ") + what +
                                ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

wl::PrimitiveState parse_state(const std::string& text, const char* which) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3)
    throw std::invalid_argument(std::string(which) +
                                " must be tau,u,p (three numbers)");
  return {parse_double(parts[0], which), parse_double(parts[1], which),
          parse_double(parts[2], which)};
}

wl::GridSpec parse_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 1 && parts.size() != 3)
    throw std::invalid_argument("--grid must be COUNT or COUNT:LO:HI");
  wl::GridSpec spec;
  const long count = std::strtol(parts[0].c_str(), nullptr, 10);
  if (count < 2 || count > 100000000)
    throw std::invalid_argument("--grid count out of range");
  spec.count = static_cast<int>(count);
  if (parts.size() == 3) {
    spec.lo = parse_double(parts[1], "--grid");
    spec.hi = parse_double(parts[2], "--grid");
    if (!(*spec.lo < *spec.hi))
      throw std::invalid_argument("--grid range must have LO < HI");
  }
  return spec;
}

wl::GasConstants make_gas(double gamma) {
  const wl::GasConstants gas = wl::derive_constants(gamma);
  if (gamma > wl::calibrated_gamma_max)
    std::fprintf(stderr,
                 "warning: gamma=%s exceeds the calibrated range (1, %g]; "
                 "results are unvalidated\n",
                 wl::format_g17(gamma).c_str(), wl::calibrated_gamma_max);
  return gas;
}

wl::JsonValue state_json(const wl::PrimitiveState& s) {
  wl::JsonValue o = wl::JsonValue::object();
  o.set("tau", wl::JsonValue::of(s.tau));
  o.set("u", wl::JsonValue::of(s.u));
  o.set("p", wl::JsonValue::of(s.p));
  return o;
}

void require_json(const std::string& format, const char* cmd) {
  if (format != "json")
    throw std::invalid_argument(std::string(cmd) +
                                " emits JSON only; csv applies to atlas");
}

/// Prints the payload to stdout and mirrors it to out_dir/filename when an
/// output directory was requested.
void emit_payload(const std::string& payload,
                  const std::optional<std::string>& out_dir,
                  const std::string& filename) {
  std::fwrite(payload.data(), 1, payload.size(), stdout);
  std::fputc('\n', stdout);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    std::ofstream file(std::filesystem::path(*out_dir) / filename,
                       std::ios::binary);
    if (!file)
      throw std::invalid_argument("cannot write to output directory: " +
                                  *out_dir);
    file << payload << '\n';
  }
}

int run_riemann(double gamma, const std::string& left_text,
                const std::string& right_text, double tol,
                const std::string& format,
                const std::optional<std::string>& out_dir) {
  require_json(format, "riemann");
  const wl::GasConstants gas = make_gas(gamma);
  const wl::PrimitiveState left = parse_state(left_text, "--left");
  const wl::PrimitiveState right = parse_state(right_text, "--right");
  const wl::RiemannSolution sol = wl::solve(left, right, gas, tol);

  wl::JsonValue input = wl::JsonValue::object();
  input.set("left", state_json(left));
  input.set("right", state_json(right));
  input.set("tol", wl::JsonValue::of(tol));

  wl::JsonValue result = wl::JsonValue::object();
  result.set("vacuum", wl::JsonValue::of(sol.vacuum));
  result.set("B", wl::JsonValue::of(sol.B));
  result.set("C", wl::JsonValue::of(sol.C));
  result.set("F", wl::JsonValue::of(sol.F));
  result.set("left_middle", state_json(sol.left_middle));
  result.set("right_middle", state_json(sol.right_middle));
  wl::JsonValue types = wl::JsonValue::array();
  for (wl::WaveType t : sol.wave_types)
    types.push(wl::JsonValue::of(wave_type_name(t)));
  result.set("wave_types", std::move(types));
  result.set("entropy_jump", wl::JsonValue::of(jump_name(sol.entropy_jump)));
  if (sol.fan) {
    wl::JsonValue fan = wl::JsonValue::array();
    fan.push(wl::JsonValue::of(sol.fan->first));
    fan.push(wl::JsonValue::of(sol.fan->second));
    result.set("fan", std::move(fan));
  } else {
    result.set("fan", wl::JsonValue::null());
  }

  wl::JsonValue residuals = wl::JsonValue::object();
  residuals.set("curve_function",
                wl::JsonValue::of(sol.residuals.curve_function));
  residuals.set("velocity_mismatch",
                wl::JsonValue::of(sol.residuals.velocity_mismatch));
  residuals.set("iterations", wl::JsonValue::of(sol.residuals.iterations));
  residuals.set("recomposition", wl::JsonValue::of(wl::recomposition_residual(
                                     sol, left, right, gas)));

  wl::JsonValue doc = wl::JsonValue::object();
  doc.set("gamma", wl::JsonValue::of(gamma));
  doc.set("input", std::move(input));
  doc.set("result", std::move(result));
  doc.set("residuals", std::move(residuals));
  emit_payload(doc.dump(), out_dir, "riemann.json");
  return 0;
}

int run_interact(double gamma, const std::string& kind_text, double s_left,
                 double s_right, double tol, const std::string& format,
                 const std::optional<std::string>& out_dir) {
  require_json(format, "interact");
  const wl::GasConstants gas = make_gas(gamma);
  const wl::IncomingPair pair{kind_from(kind_text), s_left, s_right};
  const wl::InteractionOutcome out = wl::solve_interaction(pair, gas, tol);

  wl::JsonValue input = wl::JsonValue::object();
  input.set("kind", wl::JsonValue::of(kind_name(pair.kind)));
  input.set("s_left", wl::JsonValue::of(pair.s_left));
  input.set("s_right", wl::JsonValue::of(pair.s_right));
  input.set("tol", wl::JsonValue::of(tol));

  wl::JsonValue result = wl::JsonValue::object();
  result.set("vacuum", wl::JsonValue::of(out.vacuum));
  result.set("B", wl::JsonValue::of(out.B));
  result.set("C", wl::JsonValue::of(out.C));
  result.set("F", wl::JsonValue::of(out.F));
  wl::JsonValue types = wl::JsonValue::array();
  for (wl::WaveType t : out.types)
    types.push(wl::JsonValue::of(wave_type_name(t)));
  result.set("types", std::move(types));
  if (out.vacuum)
    result.set("entropy_jump_across_vacuum",
               wl::JsonValue::of(jump_name(out.entropy_jump_across_vacuum)));
  else
    result.set("entropy_jump_across_vacuum", wl::JsonValue::null());
  result.set("theorem", wl::JsonValue::of(wl::theorem_tag(pair, out)));

  wl::JsonValue residuals = wl::JsonValue::object();
  residuals.set("equation", wl::JsonValue::of(out.residuals.equation));
  residuals.set("velocity", wl::JsonValue::of(out.residuals.velocity));
  residuals.set("product", wl::JsonValue::of(out.residuals.product));
  residuals.set("iterations", wl::JsonValue::of(out.residuals.iterations));

  wl::JsonValue doc = wl::JsonValue::object();
  doc.set("gamma", wl::JsonValue::of(gamma));
  doc.set("input", std::move(input));
  doc.set("result", std::move(result));
  doc.set("residuals", std::move(residuals));
  emit_payload(doc.dump(), out_dir, "interact.json");
  return 0;
}

int run_atlas(double gamma, const std::string& panel_text,
              const std::string& grid_text, const std::string& format,
              const std::string& out_dir) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("--format must be json or csv");
  const wl::GasConstants gas = make_gas(gamma);
  const wl::AtlasPanel panel = panel_from(panel_text);
  const wl::GridSpec spec = parse_grid(grid_text);
  const std::vector<wl::CurveSample> samples =
      wl::sample_atlas(gas, panel, spec);

  double max_abs_residual = 0.0;
  wl::JsonValue files = wl::JsonValue::array();
  for (const wl::CurveSample& s : samples) {
    for (const wl::CurvePoint& p : s.points)
      max_abs_residual = std::max(max_abs_residual, std::abs(p.residual));

    wl::JsonValue entry = wl::JsonValue::object();
    entry.set("curve", wl::JsonValue::of(wl::curve_name(s.id)));
    entry.set("points",
              wl::JsonValue::of(static_cast<long long>(s.points.size())));
    wl::JsonValue meta = wl::JsonValue::object();
    for (const auto& [key, value] : s.metadata)
      meta.set(key, wl::JsonValue::of(value));
    entry.set("metadata", std::move(meta));

    if (format == "csv") {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path path =
          std::filesystem::path(out_dir) / wl::curve_filename(s.id);
      std::ofstream file(path, std::ios::binary);
      if (!file)
        throw std::invalid_argument("cannot write curve file: " +
                                    path.string());
      file << "x,y,curve_id,residual\n";
      for (const wl::CurvePoint& p : s.points)
        file << wl::csv_row(p.x, p.y, wl::curve_name(s.id), p.residual)
             << '\n';
      entry.set("file", wl::JsonValue::of(wl::curve_filename(s.id)));
    } else {
      wl::JsonValue rows = wl::JsonValue::array();
      for (const wl::CurvePoint& p : s.points) {
        wl::JsonValue row = wl::JsonValue::array();
        row.push(wl::JsonValue::of(p.x));
        row.push(wl::JsonValue::of(p.y));
        row.push(wl::JsonValue::of(p.residual));
        rows.push(std::move(row));
      }
      entry.set("rows", std::move(rows));
    }
    files.push(std::move(entry));
  }

  wl::JsonValue input = wl::JsonValue::object();
  input.set("panel", wl::JsonValue::of(panel_text));
  input.set("grid", wl::JsonValue::of(spec.count));
  input.set("format", wl::JsonValue::of(format));

  wl::JsonValue result = wl::JsonValue::object();
  result.set("curves", std::move(files));

  wl::JsonValue residuals = wl::JsonValue::object();
  residuals.set("max_abs_row_residual", wl::JsonValue::of(max_abs_residual));

  wl::JsonValue doc = wl::JsonValue::object();
  doc.set("gamma", wl::JsonValue::of(gamma));
  doc.set("input", std::move(input));
  doc.set("result", std::move(result));
  doc.set("residuals", std::move(residuals));
  std::string payload = doc.dump();
  std::fwrite(payload.data(), 1, payload.size(), stdout);
  std::fputc('\n', stdout);
  return 0;
}

wl::JsonValue report_json(const wl::VerifyReport& report) {
  wl::JsonValue properties = wl::JsonValue::array();
  for (const wl::PropertyResult& r : report.results) {
    wl::JsonValue p = wl::JsonValue::object();
    p.set("name", wl::JsonValue::of(r.name));
    p.set("passed", wl::JsonValue::of(r.passed));
    p.set("cases", wl::JsonValue::of(r.cases));
    p.set("max_residual", wl::JsonValue::of(r.max_residual));
    p.set("note", wl::JsonValue::of(r.note));
    properties.push(std::move(p));
  }
  wl::JsonValue o = wl::JsonValue::object();
  o.set("gamma", wl::JsonValue::of(report.gamma));
  o.set("all_passed", wl::JsonValue::of(report.all_passed));
  o.set("properties", std::move(properties));
  return o;
}

int run_verify(const std::optional<double>& gamma, std::uint64_t seed,
               const std::string& grid_text, bool inject_psi_flip,
               const std::string& format,
               const std::optional<std::string>& out_dir) {
  require_json(format, "verify");
  int samples = 400;
  if (!grid_text.empty()) {
    const wl::GridSpec spec = parse_grid(grid_text);
    samples = spec.count;
  }

  std::vector<double> gammas;
  if (gamma)
    gammas.push_back(*gamma);
  else
    gammas = {1.2, 1.4, 5.0 / 3.0, 1.9, 2.0, 3.0};

  bool all_passed = true;
  double max_residual = 0.0;
  long long failed = 0;
  wl::JsonValue reports = wl::JsonValue::array();
  for (double g : gammas) {
    wl::VerifyConfig cfg;
    cfg.gas = make_gas(g);
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.hooks.flip_psi_shock_sign = inject_psi_flip;
    const wl::VerifyReport report = wl::run_verify(cfg);
    all_passed = all_passed && report.all_passed;
    for (const wl::PropertyResult& r : report.results) {
      max_residual = std::max(max_residual, r.max_residual);
      if (!r.passed) ++failed;
    }
    reports.push(report_json(report));
  }

  wl::JsonValue input = wl::JsonValue::object();
  input.set("seed", wl::JsonValue::of(static_cast<long long>(seed)));
  input.set("samples", wl::JsonValue::of(samples));
  input.set("inject_psi_flip", wl::JsonValue::of(inject_psi_flip));
  wl::JsonValue gamma_list = wl::JsonValue::array();
  for (double g : gammas) gamma_list.push(wl::JsonValue::of(g));
  input.set("gammas", std::move(gamma_list));

  wl::JsonValue result = wl::JsonValue::object();
  result.set("all_passed", wl::JsonValue::of(all_passed));
  result.set("reports", std::move(reports));

  wl::JsonValue residuals = wl::JsonValue::object();
  residuals.set("max_residual", wl::JsonValue::of(max_residual));
  residuals.set("failed_properties", wl::JsonValue::of(failed));

  wl::JsonValue doc = wl::JsonValue::object();
  doc.set("gamma", gamma ? wl::JsonValue::of(*gamma) : wl::JsonValue::null());
  doc.set("input", std::move(input));
  doc.set("result", std::move(result));
  doc.set("residuals", std::move(residuals));
  emit_payload(doc.dump(), out_dir, "verify.json");
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavelab: exact Riemann solutions and pairwise wave "
               "interactions for a polytropic gas in mass coordinates"};
  app.require_subcommand(1);

  // riemann
  CLI::App* riemann =
      app.add_subcommand("riemann", "Solve a Riemann problem");
  double r_gamma = 1.4, r_tol = 1e-12;
  std::string r_left, r_right, r_format = "json";
  std::optional<std::string> r_out;
  riemann->add_option("--gamma", r_gamma, "adiabatic exponent")->required();
  riemann->add_option("--left", r_left, "left state tau,u,p")->required();
  riemann->add_option("--right", r_right, "right state tau,u,p")->required();
  riemann->add_option("--tol", r_tol, "solver tolerance");
  riemann->add_option("--format", r_format, "output format (json)");
  riemann->add_option("--out", r_out, "directory to mirror the output into");

  // interact
  CLI::App* interact =
      app.add_subcommand("interact", "Solve a pairwise wave interaction");
  double i_gamma = 1.4, i_sl = 0.0, i_sr = 0.0, i_tol = 1e-12;
  std::string i_kind, i_format = "json";
  std::optional<std::string> i_out;
  interact->add_option("--gamma", i_gamma, "adiabatic exponent")->required();
  interact
      ->add_option("--kind", i_kind,
                   "interaction kind (Ia..Ic, IIa..IId, IIIa..IIIc)")
      ->required();
  interact->add_option("--s-left", i_sl, "left incoming strength")
      ->required();
  interact->add_option("--s-right", i_sr, "right incoming strength")
      ->required();
  interact->add_option("--tol", i_tol, "solver tolerance");
  interact->add_option("--format", i_format, "output format (json)");
  interact->add_option("--out", i_out, "directory to mirror the output into");

  // atlas
  CLI::App* atlas =
      app.add_subcommand("atlas", "Emit transition-curve data for one panel");
  double a_gamma = 1.4;
  std::string a_panel, a_grid = "200", a_format = "csv", a_out = ".";
  atlas->add_option("--gamma", a_gamma, "adiabatic exponent")->required();
  atlas->add_option("--panel", a_panel, "groupI | groupII | groupIII")
      ->required();
  atlas->add_option("--grid", a_grid, "points per curve: COUNT or COUNT:LO:HI");
  atlas->add_option("--format", a_format,
                    "csv writes one file per curve; json emits rows inline");
  atlas->add_option("--out", a_out, "directory for curve files");

  // verify
  CLI::App* verify =
      app.add_subcommand("verify", "Run the property verification suite");
  std::optional<double> v_gamma;
  std::uint64_t v_seed = 20260821;
  std::string v_grid, v_format = "json";
  std::optional<std::string> v_out;
  bool v_flip = false;
  verify->add_option("--gamma", v_gamma,
                     "adiabatic exponent (default: sweep the test set)");
  verify->add_option("--seed", v_seed, "PRNG seed");
  verify->add_option("--grid", v_grid, "samples per sub-check");
  verify->add_option("--format", v_format, "output format (json)");
  verify->add_option("--out", v_out, "directory to mirror the report into");
  verify->add_flag("--inject-psi-flip", v_flip)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (riemann->parsed())
      return run_riemann(r_gamma, r_left, r_right, r_tol, r_format, r_out);
    if (interact->parsed())
      return run_interact(i_gamma, i_kind, i_sl, i_sr, i_tol, i_format,
                          i_out);
    if (atlas->parsed())
      return run_atlas(a_gamma, a_panel, a_grid, a_format, a_out);
    return run_verify(v_gamma, v_seed, v_grid, v_flip, v_format, v_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
