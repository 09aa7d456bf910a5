#include "flowbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace flowbound::report {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::runtime_error("not a decimal number: `" + s + "`");
  return v;
}

std::string to_string(wellposedness::Status s) {
  return s == wellposedness::Status::Certified ? "Certified" : "NotCertified";
}

namespace {

json warnings_json(const std::vector<wellposedness::Warning>& warnings) {
  json arr = json::array();
  for (const auto& w : warnings) {
    json entry;
    entry["code"] = w.code;
    entry["message"] = w.message;
    for (const auto& [key, value] : w.data) entry[key] = format_double(value);
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace

json certificate_json(const wellposedness::CertifyResult& r) {
  json j;
  {
    json geom;
    geom["L"] = format_double(r.geom.L);
    geom["a"] = format_double(r.geom.a);
    geom["b"] = format_double(r.geom.b);
    geom["c"] = format_double(r.geom.c);
    geom["volume"] = format_double(r.geom.vol_K);
    json derived;
    derived["sigma"] = format_double(r.bogovskii.sigma);
    derived["gamma"] = format_double(r.bogovskii.gamma);
    derived["M"] = format_double(r.bogovskii.M);
    derived["conda"] = geometry::conda_check(r.geom);
    geom["derived"] = std::move(derived);
    j["geometry"] = std::move(geom);
  }
  j["fluid"] = json{{"viscosity", format_double(r.fluid.eta)}};
  {
    json in;
    if (std::holds_alternative<inflow::AnalyticInflow>(r.datum)) {
      in["type"] = "analytic";
      in["amplitude"] =
          format_double(std::get<inflow::AnalyticInflow>(r.datum).amplitude);
    } else {
      const auto& s = std::get<inflow::SampledInflow>(r.datum);
      in["type"] = "sampled";
      in["grid_file"] = r.grid_file;
      in["n_y"] = s.n_y;
      in["n_z"] = s.n_z;
    }
    in["compat_tol"] = format_double(r.compat_tol);
    json norms;
    norms["l2"] = format_double(r.norms.l2);
    norms["grad_l2"] = format_double(r.norms.grad_l2);
    norms["div_l2"] = format_double(r.norms.div_l2);
    in["norms"] = std::move(norms);
    j["inflow"] = std::move(in);
  }
  {
    json emb;
    emb["s2_lb"] = format_double(r.emb.s2_lb);
    emb["s3_lb"] = format_double(r.emb.s3_lb);
    emb["s6_lb"] = format_double(r.emb.s6_lb);
    emb["j2_lb"] = format_double(r.emb.j2_lb);
    emb["j6_lb"] = format_double(r.emb.j6_lb);
    emb["m"] = format_double(r.emb.m);
    emb["branch"] =
        r.emb.branch == geometry::MinBranch::CubeRoot ? "CubeRoot" : "Box";
    // These are certified lower bounds for the embedding constants, not the
    // constants themselves.
    emb["kind"] = "lower_bound";
    j["embedding_bounds"] = std::move(emb);
  }
  j["phi"] = format_double(r.cert.phi);
  j["threshold"] = format_double(r.cert.threshold);
  j["margin"] = format_double(r.cert.margin);
  j["beta"] = format_double(r.cert.beta);
  j["grad_bound_rough"] = format_double(r.cert.grad_bound_rough);
  j["grad_bound_sharp"] = format_double(r.cert.grad_bound_sharp);
  j["status"] = to_string(r.cert.status);
  j["warnings"] = warnings_json(r.cert.warnings);
  return j;
}

json force_json(const forces::ForceCertificate& fc) {
  json j;
  {
    json q;
    q["q1_l3"] = format_double(fc.bounds.q.q1_l3);
    q["q3_l3"] = format_double(fc.bounds.q.q3_l3);
    q["q1_h1"] = format_double(fc.bounds.q.q1_h1);
    q["q3_h1"] = format_double(fc.bounds.q.q3_h1);
    j["q_bounds"] = std::move(q);
  }
  j["grad_u_bound"] = format_double(fc.bounds.grad_u_bound);
  j["drag_bound"] = format_double(fc.bounds.drag_bound);
  j["lift_bound"] = format_double(fc.bounds.lift_bound);
  j["psi"] = format_double(fc.bounds.psi);
  j["warnings"] = warnings_json(fc.certify.cert.warnings);
  j["certificate"] = certificate_json(fc.certify);
  return j;
}

wellposedness::CertifyResult recertify_from_json(const json& j) {
  geometry::ChannelGeometry g;
  const auto& geom = j.at("geometry");
  g.L = parse_double(geom.at("L").get<std::string>());
  g.a = parse_double(geom.at("a").get<std::string>());
  g.b = parse_double(geom.at("b").get<std::string>());
  g.c = parse_double(geom.at("c").get<std::string>());
  g.vol_K = parse_double(geom.at("volume").get<std::string>());

  wellposedness::FluidParams fluid;
  fluid.eta = parse_double(j.at("fluid").at("viscosity").get<std::string>());

  const auto& in = j.at("inflow");
  const double compat_tol = parse_double(in.at("compat_tol").get<std::string>());
  const std::string type = in.at("type").get<std::string>();
  if (type == "analytic") {
    const double A = parse_double(in.at("amplitude").get<std::string>());
    return wellposedness::certify(g, fluid, inflow::AnalyticInflow{A}, compat_tol);
  }
  if (type == "sampled") {
    const std::string path = in.at("grid_file").get<std::string>();
    auto result = wellposedness::certify(
        g, fluid, inflow::read_sampled_csv(path, g), compat_tol);
    result.grid_file = path;
    return result;
  }
  throw std::runtime_error("unknown inflow type in certificate: `" + type + "`");
}

}  // namespace flowbound::report
