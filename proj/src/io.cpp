#include "painleve/io.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace painleve {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw Error(ErrorKind::InvalidArgument, "not a finite number: '" + t + "'");
  return v;
}

long parse_long(std::string_view text) {
  const std::string t = trim(text);
  long v = 0;
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorKind::InvalidArgument, "not an integer: '" + t + "'");
  return v;
}

json cx(complex v) { return json::array({v.real(), v.imag()}); }

json config_json(const IntegratorConfig& c) {
  return {{"rtol", c.rtol},
          {"atol", c.atol},
          {"h_init", c.h_init},
          {"h_min", c.h_min},
          {"h_max", c.h_max},
          {"R_switch", c.R_switch},
          {"r_back", c.r_back},
          {"capture_radius", c.capture_radius},
          {"newton_tol", c.newton_tol},
          {"max_steps", c.max_steps},
          {"pole_path_tol", c.pole_path_tol},
          {"divergence_bound", c.divergence_bound}};
}

json pole_json(const PoleRecord& p) {
  return {{"z_star", cx(p.z_star)}, {"rho_index", p.rho.index()}, {"c", cx(p.c)},
          {"h", cx(p.h)},           {"k", cx(p.k)}};
}

json coeff_list(const std::vector<complex>& v) {
  json a = json::array();
  for (const complex c : v) a.push_back(cx(c));
  return a;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  if (text.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorKind::InvalidArgument, "complex value must be RE,IM: '" + std::string(text) + "'");
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::vector<complex> parse_path(std::string_view text) {
  std::vector<complex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (!trim(piece).empty()) out.push_back(parse_complex(piece));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

RunConfigFile parse_run_config(std::istream& in, const IntegratorConfig& defaults) {
  RunConfigFile rc;
  rc.config = defaults;
  IntegratorConfig& c = rc.config;
  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"alpha", [&](const std::string& v) { rc.alpha = parse_complex(v); }},
      {"beta", [&](const std::string& v) { rc.beta = parse_complex(v); }},
      {"q0", [&](const std::string& v) { rc.q0 = parse_complex(v); }},
      {"p0", [&](const std::string& v) { rc.p0 = parse_complex(v); }},
      {"path", [&](const std::string& v) { rc.path = parse_path(v); }},
      {"out", [&](const std::string& v) { rc.out = v; }},
      {"rtol", [&](const std::string& v) { c.rtol = parse_double(v); }},
      {"atol", [&](const std::string& v) { c.atol = parse_double(v); }},
      {"h_init", [&](const std::string& v) { c.h_init = parse_double(v); }},
      {"h_min", [&](const std::string& v) { c.h_min = parse_double(v); }},
      {"h_max", [&](const std::string& v) { c.h_max = parse_double(v); }},
      {"R_switch", [&](const std::string& v) { c.R_switch = parse_double(v); }},
      {"r_back", [&](const std::string& v) { c.r_back = parse_double(v); }},
      {"capture_radius", [&](const std::string& v) { c.capture_radius = parse_double(v); }},
      {"newton_tol", [&](const std::string& v) { c.newton_tol = parse_double(v); }},
      {"max_steps", [&](const std::string& v) { c.max_steps = parse_long(v); }},
      {"pole_path_tol", [&](const std::string& v) { c.pole_path_tol = parse_double(v); }},
      {"divergence_bound", [&](const std::string& v) { c.divergence_bound = parse_double(v); }},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw Error(ErrorKind::InvalidArgument, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(value);
  }
  return rc;
}

std::string trajectory_json(const Trajectory& traj, const std::vector<PoleRecord>& poles) {
  json meta = {{"version", kVersion},
               {"tableau", kTableauName},
               {"precision", to_string(traj.precision)},
               {"parameters", {{"alpha", cx(traj.params.alpha)}, {"beta", cx(traj.params.beta)}}},
               {"config", config_json(traj.config)}};
  json path = json::array();
  for (const complex w : traj.path.waypoints) path.push_back(cx(w));
  meta["path"] = path;

  json samples = json::array();
  for (const Sample& s : traj.samples)
    samples.push_back({{"z", cx(s.z)}, {"s", s.s}, {"chart", to_string(s.pt.chart)},
                       {"x", cx(s.pt.x)}, {"y", cx(s.pt.y)}});

  json events = json::array();
  for (const Event& e : traj.events) {
    json j = {{"kind", to_string(e.kind)}, {"z", cx(e.z)}, {"s", e.s}};
    switch (e.kind) {
      case EventKind::ChartSwitch:
        j["from"] = to_string(e.from);
        j["to"] = to_string(e.to);
        break;
      case EventKind::PoleCrossing:
        j["pole"] = *e.pole;
        j["record"] = pole_json(poles.at(*e.pole));
        break;
      case EventKind::BasePointProximity:
        if (e.near_pole) j["record"] = pole_json(*e.near_pole);
        j["message"] = e.message;
        break;
      case EventKind::Failure:
        j["message"] = e.message;
        break;
    }
    events.push_back(std::move(j));
  }
  json doc = {{"meta", meta}, {"samples", samples}, {"events", events}};
  return doc.dump(1) + "\n";
}

std::string pole_csv_row(const PoleRecord& p) {
  std::string s;
  for (double v : {p.z_star.real(), p.z_star.imag()}) s += format_double(v) + ",";
  s += std::to_string(p.rho.index());
  for (complex v : {p.c, p.h, p.k}) s += "," + format_double(v.real()) + "," + format_double(v.imag());
  return s;
}

std::string poles_csv(const std::vector<PoleRecord>& poles) {
  std::string s(kPoleCsvHeader);
  s += "\n";
  for (const PoleRecord& p : poles) s += pole_csv_row(p) + "\n";
  return s;
}

std::vector<PoleRecord> read_poles_csv(std::istream& in, const Parameters* prm) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kPoleCsvHeader)
    throw Error(ErrorKind::InvalidArgument, "pole file header mismatch");
  std::vector<PoleRecord> out;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw Error(ErrorKind::InvalidArgument, "pole row needs 9 fields");
    PoleRecord p;
    p.z_star = {parse_double(f[0]), parse_double(f[1])};
    p.rho = RhoBranch(static_cast<int>(parse_long(f[2])));
    p.c = {parse_double(f[3]), parse_double(f[4])};
    p.h = {parse_double(f[5]), parse_double(f[6])};
    p.k = {parse_double(f[7]), parse_double(f[8])};
    if (prm) {
      const complex rhs = hk_relation_rhs(p.z_star, p.rho, *prm);
      const double scale = 1.0 + std::abs(p.h) + std::abs(p.k) + std::abs(rhs);
      if (std::abs(p.rho.value() * p.h - p.k - rhs) > 1e-12 * scale)
        throw Error(ErrorKind::InvalidArgument, "pole row violates the h-k relation: " + line);
    }
    out.push_back(p);
  }
  return out;
}

std::string series_json(const TaylorPair& t) {
  json j = {{"kind", "taylor"},
            {"z_star", cx(t.z_star)},
            {"rho_index", t.rho.index()},
            {"parameter", {{"name", "c"}, {"value", cx(t.c)}}},
            {"order", t.order},
            {"first_index", 0},
            {"coefficients", {{"a", coeff_list(t.a_coeffs)}, {"b", coeff_list(t.b_coeffs)}}}};
  return j.dump();
}

std::string series_json(const LaurentPair& l) {
  json j = {{"kind", "laurent"},
            {"z_star", cx(l.z_star)},
            {"rho_index", l.rho.index()},
            {"parameter", {{"name", "h"}, {"value", cx(l.h)}}},
            {"k", cx(l.k)},
            {"order", l.order},
            {"first_index", -1},
            {"coefficients", {{"q", coeff_list(l.q_coeffs)}, {"p", coeff_list(l.p_coeffs)}}}};
  return j.dump();
}

std::string residual_csv(const std::vector<ResidualReport>& rows) {
  std::string s = "name,max_abs,sample_count,scale\n";
  for (const ResidualReport& r : rows)
    s += r.name + "," + format_double(r.max_abs) + "," + std::to_string(r.sample_count) + "," +
         format_double(r.scale) + "\n";
  return s;
}

}  // namespace painleve
