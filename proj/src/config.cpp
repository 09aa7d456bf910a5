#include "flowbound/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace flowbound::config {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  std::ostringstream out;
  out << path << ":" << line << ": " << msg;
  throw ConfigError(out.str());
}

struct RawEntry {
  std::string value;
  int line;
};

double to_number(const std::string& path, const RawEntry& e, const std::string& key) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    fail(path, e.line, "value of `" + key + "` is not a decimal number: `" + e.value + "`");
  return v;
}

int to_int(const std::string& path, const RawEntry& e, const std::string& key) {
  const double v = to_number(path, e, key);
  const int n = static_cast<int>(v);
  if (static_cast<double>(n) != v)
    fail(path, e.line, "value of `" + key + "` must be an integer");
  return n;
}

const char* const kKnownKeys[] = {
    "channel.L",        "box.a",           "box.b",
    "box.c",            "obstacle.volume", "fluid.viscosity",
    "inflow.type",      "inflow.amplitude", "inflow.grid_file",
    "inflow.compat_tol", "sweep.parameter", "sweep.lo",
    "sweep.hi",         "sweep.steps",     "output.path",
    "output.format"};

bool known_key(const std::string& key) {
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& path) {
  std::map<std::string, RawEntry> entries;
  std::istringstream in(text);
  std::string linebuf;
  int lineno = 0;
  while (std::getline(in, linebuf)) {
    ++lineno;
    const std::size_t hash = linebuf.find('#');
    if (hash != std::string::npos) linebuf.erase(hash);
    const std::string line = trim(linebuf);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(path, lineno, "expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(path, lineno, "empty key");
    if (value.empty()) fail(path, lineno, "empty value for `" + key + "`");
    if (!known_key(key)) fail(path, lineno, "unknown key `" + key + "`");
    if (entries.count(key))
      fail(path, lineno, "duplicate key `" + key + "` (first at line " +
                             std::to_string(entries[key].line) + ")");
    entries[key] = {value, lineno};
  }

  RunConfig cfg;
  auto has = [&](const char* k) { return entries.count(k) != 0; };
  auto num = [&](const char* k) { return to_number(path, entries.at(k), k); };

  const bool any_geom = has("channel.L") || has("box.a") || has("box.b") ||
                        has("box.c") || has("obstacle.volume");
  if (any_geom) {
    for (const char* k : {"channel.L", "box.a", "box.b", "box.c", "obstacle.volume"})
      if (!has(k)) fail(path, 0, std::string("geometry block incomplete: missing `") + k + "`");
    cfg.geom = {num("channel.L"), num("box.a"), num("box.b"), num("box.c"),
                num("obstacle.volume")};
    cfg.has_geometry = true;
  }
  if (has("fluid.viscosity")) {
    cfg.viscosity = num("fluid.viscosity");
    cfg.has_fluid = true;
  }
  if (has("inflow.type")) {
    cfg.inflow.type = entries.at("inflow.type").value;
    if (cfg.inflow.type != "analytic" && cfg.inflow.type != "sampled")
      fail(path, entries.at("inflow.type").line,
           "inflow.type must be `analytic` or `sampled`");
    if (cfg.inflow.type == "analytic") {
      if (!has("inflow.amplitude"))
        fail(path, entries.at("inflow.type").line,
             "analytic inflow requires `inflow.amplitude`");
      cfg.inflow.amplitude = num("inflow.amplitude");
    } else {
      if (!has("inflow.grid_file"))
        fail(path, entries.at("inflow.type").line,
             "sampled inflow requires `inflow.grid_file`");
      cfg.inflow.grid_file = entries.at("inflow.grid_file").value;
    }
    if (has("inflow.compat_tol")) cfg.inflow.compat_tol = num("inflow.compat_tol");
    cfg.has_inflow = true;
  }
  if (has("sweep.parameter")) {
    cfg.sweep.present = true;
    cfg.sweep.parameter = entries.at("sweep.parameter").value;
    const std::string& p = cfg.sweep.parameter;
    if (p != "amplitude" && p != "viscosity" && p != "obstacle.volume" && p != "box.a")
      fail(path, entries.at("sweep.parameter").line,
           "sweep.parameter must be one of amplitude, viscosity, obstacle.volume, box.a");
    for (const char* k : {"sweep.lo", "sweep.hi", "sweep.steps"})
      if (!has(k)) fail(path, entries.at("sweep.parameter").line,
                        std::string("sweep block incomplete: missing `") + k + "`");
    cfg.sweep.lo = num("sweep.lo");
    cfg.sweep.hi = num("sweep.hi");
    cfg.sweep.steps = to_int(path, entries.at("sweep.steps"), "sweep.steps");
    if (!(cfg.sweep.lo < cfg.sweep.hi))
      fail(path, entries.at("sweep.lo").line, "sweep.lo must be < sweep.hi");
    if (cfg.sweep.steps < 2)
      fail(path, entries.at("sweep.steps").line, "sweep.steps must be >= 2");
  }
  if (has("output.path")) cfg.output_path = entries.at("output.path").value;
  if (has("output.format")) {
    cfg.output_format = entries.at("output.format").value;
    if (cfg.output_format != "json" && cfg.output_format != "csv")
      fail(path, entries.at("output.format").line, "output.format must be json or csv");
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

inflow::InflowDatum make_inflow_datum(const RunConfig& cfg) {
  if (!cfg.has_inflow) throw ConfigError("config has no inflow block");
  if (cfg.inflow.type == "analytic")
    return inflow::AnalyticInflow{cfg.inflow.amplitude};
  if (!cfg.has_geometry)
    throw ConfigError("sampled inflow requires the geometry block");
  return inflow::read_sampled_csv(cfg.inflow.grid_file, cfg.geom);
}

}  // namespace flowbound::config
