#include "dualcat/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualcat/closed_forms.hpp"
#include "dualcat/curve.hpp"
#include "dualcat/error.hpp"
#include "dualcat/solver.hpp"
#include "dualcat/variational.hpp"

namespace dualcat::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kClosedFormTol = 1e-8;
constexpr double kNumericTol = 1e-6;
constexpr double kVariationTol = 1e-5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveOptions {
  double alpha{1.0};
  std::optional<double> check_alpha;
  double c{1.0};
  double m{0.0};
  double R{1.0};
  double v{0.0};
  double d1{0.0};
  double d2{0.0};
  double d3{0.0};
  std::string branch{"plus"};
  std::string domain;
  bool reversed{false};

  bool solve{false};
  std::optional<double> x0;
  double y0{1.0};
  double yp0{0.0};
  double z0{0.0};
  double zp0{0.0};
  double w0{0.0};
  double step{1e-3};
};

void add_curve_options(CLI::App& cmd, CurveOptions& o) {
  cmd.add_option("--alpha", o.alpha, "Energy exponent alpha");
  cmd.add_option("--check-alpha", o.check_alpha,
                 "Alpha used for residuals and characterization (defaults to --alpha)");
  cmd.add_option("--c", o.c, "First-integral constant c (alpha = 0, 1)");
  cmd.add_option("--m", o.m, "Horizontal shift m");
  cmd.add_option("--R", o.R, "Circle radius (alpha = -1)");
  cmd.add_option("--v", o.v, "Dual part of the direction u = (0,1) + eps (v,0)");
  cmd.add_option("--d1", o.d1, "Integration constant d1");
  cmd.add_option("--d2", o.d2, "Integration constant d2");
  cmd.add_option("--d3", o.d3, "Integration constant d3");
  cmd.add_option("--branch", o.branch, "Slope sign for alpha = 0")
      ->check(CLI::IsMember({"plus", "minus"}));
  cmd.add_option("--domain", o.domain, "Interval a:b (use --domain=-1:1 for negative a)");
  cmd.add_flag("--reversed", o.reversed, "Use the reversed catenary (x,y) + eps v (y,-x)");
  cmd.add_flag("--solve", o.solve, "Integrate numerically instead of using a closed form");
  cmd.add_option("--x0", o.x0, "Initial abscissa for --solve (defaults to the domain midpoint)");
  cmd.add_option("--y0", o.y0, "Initial y for --solve");
  cmd.add_option("--yp0", o.yp0, "Initial y' for --solve");
  cmd.add_option("--z0", o.z0, "Initial z for --solve");
  cmd.add_option("--zp0", o.zp0, "Initial z' for --solve");
  cmd.add_option("--w0", o.w0, "Initial w for --solve");
  cmd.add_option("--step", o.step, "RK4 step for --solve");
}

std::optional<Interval> parse_domain(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--domain expects a:b, got '" + text + "'");
  auto number = [&](const std::string& part) {
    char* end = nullptr;
    const double value = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(value)) {
      throw UsageError("bad number '" + part + "' in --domain");
    }
    return value;
  };
  const Interval d{number(text.substr(0, colon)), number(text.substr(colon + 1))};
  if (!(d.lo < d.hi)) throw UsageError("--domain needs a < b");
  return d;
}

struct BuiltCurve {
  GraphCurve curve;
  double alpha;        // residual/characterization alpha
  double c;            // first-integral constant
  Interval requested;
  bool truncated{false};
  double reference_x;  // where c is inferred for numeric curves
};

BuiltCurve build_curve(const CurveOptions& o) {
  const std::optional<Interval> domain = parse_domain(o.domain);
  const double check_alpha = o.check_alpha.value_or(o.alpha);

  if (o.solve) {
    const Interval d = domain.value_or(Interval{-1.0, 1.0});
    InitialData init{o.x0.value_or(d.midpoint()), o.y0, o.yp0, o.z0, o.zp0, o.w0};
    SolverConfig cfg;
    cfg.step = o.step;
    SolvedCatenary solved = solve_catenary(o.alpha, o.v, init, d, cfg);
    GraphCurve curve = o.reversed ? reversed_catenary(o.alpha, real_part(solved.curve), o.v)
                                  : solved.curve;
    const double c = infer_c(curve, check_alpha, init.x0);
    return {std::move(curve), check_alpha, c, d, solved.real.truncated, init.x0};
  }

  CatenaryParams p;
  p.alpha = o.alpha;
  p.c = o.c;
  p.m = o.m;
  p.R = o.R;
  p.v = o.v;
  p.d1 = o.d1;
  p.d2 = o.d2;
  p.d3 = o.d3;
  p.branch = o.branch == "minus" ? Branch::Minus : Branch::Plus;
  if (p.alpha != -1.0 && p.alpha != 0.0 && p.alpha != 1.0) {
    throw UsageError("closed forms exist only for alpha in {-1, 0, 1}; add --solve");
  }
  const std::optional<Interval> d =
      p.alpha == -1.0 ? domain : std::optional<Interval>(domain.value_or(Interval{-1.0, 1.0}));
  GraphCurve curve = closed_form_catenary(p, d);
  if (o.reversed) curve = reversed_catenary(p.alpha, real_part(curve), p.v);

  const double reference = curve.domain().midpoint();
  double c = p.alpha == -1.0 ? p.R : p.c;
  if (check_alpha != p.alpha) c = infer_c(curve, check_alpha, reference);
  return {std::move(curve), check_alpha, c, d.value_or(curve.domain()), false, reference};
}

Json params_json(const CurveOptions& o) {
  Json j;
  j["alpha"] = o.alpha;
  if (o.check_alpha) j["check_alpha"] = *o.check_alpha;
  if (o.solve) {
    j["solve"] = true;
    j["y0"] = o.y0;
    j["yp0"] = o.yp0;
    j["z0"] = o.z0;
    j["zp0"] = o.zp0;
    j["w0"] = o.w0;
    j["step"] = o.step;
    if (o.x0) j["x0"] = *o.x0;
  } else {
    j["c"] = o.c;
    j["m"] = o.m;
    j["R"] = o.R;
    j["d1"] = o.d1;
    j["d2"] = o.d2;
    j["d3"] = o.d3;
    j["branch"] = o.branch;
  }
  j["v"] = o.v;
  j["reversed"] = o.reversed;
  return j;
}

void warn_truncation(const BuiltCurve& b, std::ostream& err) {
  const Interval& a = b.curve.domain();
  err << "warning: solution truncated; achieved domain [" << format_double(a.lo) << ", "
      << format_double(a.hi) << "] of requested [" << format_double(b.requested.lo) << ", "
      << format_double(b.requested.hi) << "]\n";
}

// ---------------------------------------------------------------------------

struct GenerateOptions {
  CurveOptions curve;
  std::size_t samples{201};
  std::string format{"csv"};
};

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  const BuiltCurve b = build_curve(o.curve);
  const std::vector<double> grid = uniform_grid(b.curve.domain(), o.samples);
  const DirectionSpec u{o.curve.v};

  std::vector<OutputRecord> records;
  records.reserve(grid.size());
  for (double x : grid) {
    const Jet y = b.curve.y(x), w = b.curve.w(x), z = b.curve.z(x);
    const DualScalar kappa = curvature(b.curve, x).kappa;
    const DualScalar ch = characterization_residual(b.curve, b.alpha, u, x);
    records.push_back({x, y.value, w.value, z.value, y.d1, z.d1, kappa.re, kappa.du, ch.re, ch.du,
                       admissibility_residual(b.curve, x)});
  }

  if (o.format == "csv") {
    write_csv(out, records);
  } else {
    const ResidualReport report = residual_report(b.curve, b.alpha, u, b.c, grid);
    double multiplier_max = 0.0;
    for (double x : grid) {
      multiplier_max = std::max(multiplier_max, std::abs(multiplier_residual(b.curve, b.alpha, b.c, x)));
    }

    Json doc;
    doc["params"] = params_json(o.curve);
    doc["grid"] = grid;
    Json rows = Json::array();
    for (const OutputRecord& r : records) {
      rows.push_back({{"x", r.x}, {"y", r.y}, {"w", r.w}, {"z", r.z}, {"yp", r.yp}, {"zp", r.zp},
                      {"kappa_re", r.kappa_re}, {"kappa_du", r.kappa_du},
                      {"char_res_re", r.char_res_re}, {"char_res_du", r.char_res_du},
                      {"admis_res", r.admis_res}});
    }
    doc["records"] = std::move(rows);
    Json summary;
    summary["inferred_c"] = b.c;
    summary["requested_domain"] = {b.requested.lo, b.requested.hi};
    summary["achieved_domain"] = {b.curve.domain().lo, b.curve.domain().hi};
    summary["truncated"] = b.truncated;
    summary["admissibility_max"] = report.max_abs.admissibility;
    summary["el_real_max"] = report.max_abs.el_real;
    summary["el_dual_max"] = report.max_abs.el_dual;
    summary["first_integral_max"] = report.max_abs.first_integral;
    summary["multiplier_max"] = multiplier_max;
    summary["characterization_re_max"] = report.max_abs.characterization_re;
    summary["characterization_du_max"] = report.max_abs.characterization_du;
    doc["summary"] = std::move(summary);
    out << doc.dump(2) << "\n";
  }

  if (b.truncated) {
    warn_truncation(b, err);
    return kDomainTruncation;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  CurveOptions curve;
  std::size_t samples{201};
  std::optional<double> tol;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const BuiltCurve b = build_curve(o.curve);
  const double tol = o.tol.value_or(o.curve.solve ? kNumericTol : kClosedFormTol);
  const std::vector<double> grid = uniform_grid(b.curve.domain(), o.samples);
  const ResidualReport report = residual_report(b.curve, b.alpha, DirectionSpec{o.curve.v}, b.c, grid);
  const ResidualReport::MaxAbs& m = report.max_abs;

  auto line = [&](const char* name, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-22s %.6e\n", name, value);
    out << buf;
  };
  out << "residual               max_abs\n";
  line("admissibility", m.admissibility);
  line("el_real", m.el_real);
  line("el_dual", m.el_dual);
  line("first_integral", m.first_integral);
  line("characterization_re", m.characterization_re);
  line("characterization_du", m.characterization_du);

  const bool pass = m.worst() <= tol;
  out << "tolerance " << tol << ": " << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) return kVerificationFailure;
  if (b.truncated) {
    warn_truncation(b, err);
    return kDomainTruncation;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct EnergyOptions {
  CurveOptions curve;
  std::size_t panels{kDefaultPanels};
};

int cmd_energy(const EnergyOptions& o, std::ostream& out, std::ostream& err) {
  const BuiltCurve b = build_curve(o.curve);
  if (o.panels == 0) throw UsageError("--panels must be positive");
  const EnergyValue e = energy(b.curve, DirectionSpec{o.curve.v}, b.alpha, o.panels);
  out << format_double(e.e0) << " " << format_double(e.e1) << "\n";
  out << format_double(e.total.re) << " + " << format_double(e.total.du) << " eps\n";
  if (b.truncated) {
    warn_truncation(b, err);
    return kDomainTruncation;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VariationOptions {
  CurveOptions curve;
  std::size_t count{20};
  std::uint64_t seed{1};
  double tol{kVariationTol};
  double perturb{0.0};
  double rho_step{1e-4};
  std::size_t panels{kDefaultPanels};
};

int cmd_variation(const VariationOptions& o, std::ostream& out, std::ostream& err) {
  BuiltCurve b = build_curve(o.curve);
  if (o.panels < 4) throw UsageError("--panels must be at least 4");
  GraphCurve curve = b.curve;
  if (o.perturb != 0.0) {
    const Interval& d = curve.domain();
    const Bump bump{d.midpoint(), 0.5 * d.width()};
    curve = deform(curve, bump, [](double) { return Jet{}; }, o.perturb, o.panels);
  }

  const DirectionSpec u{o.curve.v};
  double max_re = 0.0, max_du = 0.0;
  std::size_t done = 0;
  std::uint64_t seed = o.seed;
  std::size_t reseeds = 0;
  while (done < o.count) {
    VariationField var;
    try {
      var = make_constrained_variation(curve, seed++, o.panels);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateVariation || ++reseeds > 10 * o.count + 10) throw;
      continue;
    }
    const DualScalar dv = first_variation(curve, var, u, b.alpha, o.rho_step, o.panels);
    max_re = std::max(max_re, std::abs(dv.re));
    max_du = std::max(max_du, std::abs(dv.du));
    if (std::isnan(dv.re) || std::isnan(dv.du)) max_re = max_du = std::nan("");
    ++done;
  }

  out << "variations " << o.count << "\n";
  out << "max_abs_real " << format_double(max_re) << "\n";
  out << "max_abs_dual " << format_double(max_du) << "\n";
  const bool pass = max_re <= o.tol && max_du <= o.tol;
  out << "tolerance " << o.tol << ": " << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) return kVerificationFailure;
  if (b.truncated) {
    warn_truncation(b, err);
    return kDomainTruncation;
  }
  return kSuccess;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << kCsvHeader << "\n";
  for (const OutputRecord& r : records) {
    const double fields[] = {r.x,        r.y,        r.w,           r.z,           r.yp,     r.zp,
                             r.kappa_re, r.kappa_du, r.char_res_re, r.char_res_du, r.admis_res};
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (i) out << ',';
      out << format_double(fields[i]);
    }
    out << "\n";
  }
}

std::vector<OutputRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("CSV header does not match the record layout");
  }
  std::vector<OutputRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double f[11];
    std::size_t count = 0;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      if (count == 11) throw std::runtime_error("too many CSV fields: " + line);
      char* end = nullptr;
      f[count] = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw std::runtime_error("bad CSV number '" + cell + "'");
      }
      ++count;
    }
    if (count != 11) throw std::runtime_error("too few CSV fields: " + line);
    records.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10]});
  }
  return records;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alpha-catenaries in the dual plane", "dualcat"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Sample a catenary as CSV or JSON");
  add_curve_options(*generate, gen.curve);
  generate->add_option("--samples", gen.samples, "Number of grid points")->check(CLI::Range(2, 10000000));
  generate->add_option("--format", gen.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check residuals against a tolerance");
  add_curve_options(*verify, ver.curve);
  verify->add_option("--samples", ver.samples, "Number of grid points")->check(CLI::Range(2, 10000000));
  verify->add_option("--tol", ver.tol, "Tolerance (default 1e-8 closed form, 1e-6 numeric)");

  EnergyOptions en;
  auto* energy_cmd = app.add_subcommand("energy", "Evaluate the potential alpha-energy");
  add_curve_options(*energy_cmd, en.curve);
  energy_cmd->add_option("--panels", en.panels, "Gauss-Legendre panels");

  VariationOptions va;
  auto* variation = app.add_subcommand("variation", "First variation under constrained deformations");
  add_curve_options(*variation, va.curve);
  variation->add_option("--count", va.count, "Number of seeded variations");
  variation->add_option("--seed", va.seed, "Seed of the first variation");
  variation->add_option("--tol", va.tol, "Tolerance on |E'| per dual component");
  variation->add_option("--perturb", va.perturb, "Amplitude of a bump added to y before testing");
  variation->add_option("--rho-step", va.rho_step, "Central-difference step in the deformation parameter");
  variation->add_option("--panels", va.panels, "Gauss-Legendre panels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*verify) return cmd_verify(ver, out, err);
    if (*energy_cmd) return cmd_energy(en, out, err);
    if (*variation) return cmd_variation(va, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dualcat::cli
