#include "flowbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "flowbound/numeric.hpp"
#include "flowbound/report.hpp"
#include "flowbound/verify.hpp"

namespace flowbound::cli {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw config::ConfigError(msg);
}

void write_output(const std::string& text, const OutputOptions& opts,
                  std::ostream& out) {
  out << text;
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path);
    if (!f) throw std::runtime_error("cannot write output file: " + opts.out_path);
    f << text;
  }
}

}  // namespace

int cmd_certify(const config::RunConfig& cfg, const OutputOptions& opts,
                std::ostream& out) {
  require(cfg.has_geometry, "certify requires the geometry block");
  require(cfg.has_fluid, "certify requires fluid.viscosity");
  require(cfg.has_inflow, "certify requires the inflow block");

  auto datum = config::make_inflow_datum(cfg);
  auto result = wellposedness::certify(cfg.geom, {cfg.viscosity}, datum,
                                       cfg.inflow.compat_tol);
  if (cfg.inflow.type == "sampled") result.grid_file = cfg.inflow.grid_file;

  write_output(report::certificate_json(result).dump(2) + "\n", opts, out);
  return result.cert.status == wellposedness::Status::Certified ? kExitCertified
                                                                : kExitNotCertified;
}

int cmd_forces(const config::RunConfig& cfg, const OutputOptions& opts,
               std::ostream& out) {
  require(cfg.has_geometry, "forces requires the geometry block");
  require(cfg.has_fluid, "forces requires fluid.viscosity");
  require(cfg.has_inflow && cfg.inflow.type == "analytic",
          "forces requires an analytic inflow block");

  const auto fc = forces::force_certificate(cfg.geom, {cfg.viscosity},
                                            cfg.inflow.amplitude, opts.grad_bound);
  write_output(report::force_json(fc).dump(2) + "\n", opts, out);
  return fc.certify.cert.status == wellposedness::Status::Certified
             ? kExitCertified
             : kExitNotCertified;
}

int cmd_sweep(const config::RunConfig& cfg, const OutputOptions& opts,
              std::ostream& out) {
  require(cfg.has_geometry, "sweep requires the geometry block");
  require(cfg.has_fluid, "sweep requires fluid.viscosity");
  require(cfg.has_inflow, "sweep requires the inflow block");
  require(cfg.sweep.present, "sweep requires the sweep block");
  const std::string& param = cfg.sweep.parameter;
  require(param != "amplitude" || cfg.inflow.type == "analytic",
          "amplitude sweeps require analytic inflow");

  // Sampled data are read once; only geometry/fluid/amplitude vary per row.
  const inflow::InflowDatum base_datum = config::make_inflow_datum(cfg);

  const int steps = cfg.sweep.steps;
  std::vector<std::string> rows(steps);
  auto fmt = report::format_double;

  numeric::parallel_for(static_cast<std::size_t>(steps), [&](std::size_t idx) {
    const double value =
        cfg.sweep.lo +
        (cfg.sweep.hi - cfg.sweep.lo) * static_cast<double>(idx) / (steps - 1);
    geometry::ChannelGeometry g = cfg.geom;
    double eta = cfg.viscosity;
    inflow::InflowDatum datum = base_datum;
    if (param == "amplitude")
      datum = inflow::AnalyticInflow{value};
    else if (param == "viscosity")
      eta = value;
    else if (param == "obstacle.volume")
      g.vol_K = value;
    else if (param == "box.a")
      g.a = value;

    std::ostringstream row;
    row << fmt(value);
    if (!geometry::validate(g).empty() || !(eta > 0.0) ||
        (param == "amplitude" && value < 0.0)) {
      row << ",,,,,,,,,invalid";
      rows[idx] = row.str();
      return;
    }
    try {
      const auto r = wellposedness::certify(g, {eta}, datum, cfg.inflow.compat_tol);
      const double grad_bound = opts.grad_bound == forces::GradBoundKind::Rough
                                    ? r.cert.grad_bound_rough
                                    : r.cert.grad_bound_sharp;
      const auto q = forces::q_norm_bounds(g);
      const double drag = forces::drag_lift_bound_general(eta, r.emb.j6_lb, grad_bound,
                                                          q.q1_l3, q.q1_h1);
      const double lift = forces::drag_lift_bound_general(eta, r.emb.j6_lb, grad_bound,
                                                          q.q3_l3, q.q3_h1);
      row << ',' << fmt(r.cert.phi) << ',' << fmt(r.cert.threshold) << ','
          << fmt(r.cert.margin) << ',' << fmt(r.cert.beta) << ','
          << fmt(r.cert.grad_bound_rough) << ',' << fmt(r.cert.grad_bound_sharp) << ','
          << fmt(drag) << ',' << fmt(lift) << ','
          << report::to_string(r.cert.status);
    } catch (const std::exception&) {
      row.str("");
      row << fmt(value) << ",,,,,,,,,invalid";
    }
    rows[idx] = row.str();
  });

  std::ostringstream csv;
  csv << "param,phi,threshold,margin,beta,grad_bound_rough,grad_bound_sharp,"
         "drag_bound,lift_bound,status\n";
  for (const auto& r : rows) csv << r << "\n";
  write_output(csv.str(), opts, out);
  return kExitCertified;
}

int cmd_verify(std::ostream& out) {
  try {
    const auto checks = verify::run_suite();
    return verify::print_report(checks, out) ? kExitCertified : kExitOracleFailure;
  } catch (const std::exception& e) {
    out << "verify: oracle failure: " << e.what() << "\n";
    return kExitOracleFailure;
  }
}

}  // namespace flowbound::cli
