#include "vpdg/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace vpdg::cli {

ConfigError::ConfigError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string fmt(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

double to_double(const std::string& v, int line, const std::string& key) {
  double x = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size() || !std::isfinite(x))
    throw ConfigError(line, "'" + key + "' expects a number, got '" + v + "'");
  return x;
}

int to_int(const std::string& v, int line, const std::string& key) {
  int x = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError(line, "'" + key + "' expects an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& v, int line, const std::string& key) {
  const std::string s = lower(v);
  if (s == "on" || s == "true" || s == "yes" || s == "1") return true;
  if (s == "off" || s == "false" || s == "no" || s == "0") return false;
  throw ConfigError(line, "'" + key + "' expects on/off, got '" + v + "'");
}

std::vector<double> to_list(const std::string& v, int line, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(to_double(item, line, key));
  }
  return out;
}

// Raw key/value pairs per section, remembering the line each came from.
struct Entry {
  std::string value;
  int line;
};
using Sections = std::map<std::string, std::map<std::string, Entry>>;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"scenario", {"name", "amplitude", "k", "drive_amplitude", "drive_omega"}},
      {"mesh", {"nx", "nv", "vc", "length"}},
      {"basis", {"family", "degree"}},
      {"time", {"cfl", "t_end", "diag_every", "snapshot_times"}},
      {"limiter", {"enabled"}},
      {"output", {"directory"}},
      {"run", {"threads"}},
  };
  return keys;
}

void put(Sections& s, const std::string& section, const std::string& key, const std::string& value, int line) {
  const auto& keys = known_keys();
  const auto sec = keys.find(section);
  if (sec == keys.end()) throw ConfigError(line, "unknown section [" + section + "]");
  if (!sec->second.count(key)) throw ConfigError(line, "unknown key '" + key + "' in section [" + section + "]");
  auto& slot = s[section];
  if (slot.count(key)) throw ConfigError(line, "duplicate key '" + key + "' in section [" + section + "]");
  slot[key] = {value, line};
}

RunConfig resolve(const Sections& s) {
  auto get = [&](const std::string& sec, const std::string& key) -> const Entry* {
    const auto a = s.find(sec);
    if (a == s.end()) return nullptr;
    const auto b = a->second.find(key);
    return b == a->second.end() ? nullptr : &b->second;
  };

  RunConfig c;
  const Entry* name = get("scenario", "name");
  if (!name) throw ConfigError(0, "missing required key 'name' in section [scenario]");
  Scenario sc;
  try {
    sc = make_scenario(name->value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(name->line, e.what());
  }
  c.scenario = sc.name;

  c.amplitude = sc.amplitude;
  if (const Entry* e = get("scenario", "amplitude")) c.amplitude = to_double(e->value, e->line, "amplitude");
  c.k = sc.k;
  if (const Entry* e = get("scenario", "k")) {
    c.k = to_double(e->value, e->line, "k");
    if (!(c.k > 0.0)) throw ConfigError(e->line, "k must be positive");
  }
  for (const char* key : {"drive_amplitude", "drive_omega"}) {
    const Entry* e = get("scenario", key);
    if (e && !sc.drive) throw ConfigError(e->line, std::string("'") + key + "' applies to driven scenarios only");
  }
  if (sc.drive) {
    c.drive_amplitude = sc.drive->A_m;
    c.drive_omega = sc.drive->omega;
    if (const Entry* e = get("scenario", "drive_amplitude"))
      c.drive_amplitude = to_double(e->value, e->line, "drive_amplitude");
    if (const Entry* e = get("scenario", "drive_omega")) c.drive_omega = to_double(e->value, e->line, "drive_omega");
  }

  c.nx = sc.default_nx;
  c.nv = sc.default_nv;
  c.vc = sc.vc;
  c.length = get("scenario", "k") ? 2.0 * std::numbers::pi / c.k : sc.length;
  if (const Entry* e = get("mesh", "nx")) {
    c.nx = to_int(e->value, e->line, "nx");
    if (c.nx < 1) throw ConfigError(e->line, "nx must be at least 1");
  }
  if (const Entry* e = get("mesh", "nv")) {
    c.nv = to_int(e->value, e->line, "nv");
    if (c.nv < 2) throw ConfigError(e->line, "nv must be at least 2");
    if (c.nv % 2 != 0) throw ConfigError(e->line, "nv must be even");
  }
  if (const Entry* e = get("mesh", "vc")) {
    c.vc = to_double(e->value, e->line, "vc");
    if (!(c.vc > 0.0)) throw ConfigError(e->line, "vc must be positive");
  }
  if (const Entry* e = get("mesh", "length")) {
    c.length = to_double(e->value, e->line, "length");
    if (!(c.length > 0.0)) throw ConfigError(e->line, "length must be positive");
  }

  c.family = sc.default_family;
  c.degree = sc.default_degree;
  if (const Entry* e = get("basis", "family")) {
    const std::string f = lower(e->value);
    if (f == "q" || f == "tensor") {
      c.family = Family::TensorQ;
    } else if (f == "p" || f == "total") {
      c.family = Family::TotalDegreeP;
    } else {
      throw ConfigError(e->line, "family must be Q or P, got '" + e->value + "'");
    }
  }
  if (const Entry* e = get("basis", "degree")) {
    c.degree = to_int(e->value, e->line, "degree");
    if (c.degree < 0 || c.degree > kMaxDegree) throw ConfigError(e->line, "degree must be between 0 and 3");
  }

  c.t_end = sc.default_t_end;
  if (const Entry* e = get("time", "cfl")) {
    c.cfl = to_double(e->value, e->line, "cfl");
    if (!(c.cfl > 0.0)) throw ConfigError(e->line, "cfl must be positive");
  }
  if (const Entry* e = get("time", "t_end")) {
    c.t_end = to_double(e->value, e->line, "t_end");
    if (c.t_end < 0.0) throw ConfigError(e->line, "t_end must be non-negative");
  }
  if (const Entry* e = get("time", "diag_every")) {
    c.diag_every = to_double(e->value, e->line, "diag_every");
    if (c.diag_every < 0.0) throw ConfigError(e->line, "diag_every must be non-negative");
  }
  c.snapshot_times = {0.0, c.t_end};
  if (const Entry* e = get("time", "snapshot_times")) {
    c.snapshot_times = to_list(e->value, e->line, "snapshot_times");
    for (double t : c.snapshot_times)
      if (t < 0.0) throw ConfigError(e->line, "snapshot times must be non-negative");
  }
  std::sort(c.snapshot_times.begin(), c.snapshot_times.end());
  c.snapshot_times.erase(std::unique(c.snapshot_times.begin(), c.snapshot_times.end()), c.snapshot_times.end());

  c.limiter = sc.default_limiter;
  if (const Entry* e = get("limiter", "enabled")) c.limiter = to_bool(e->value, e->line, "enabled");
  if (const Entry* e = get("output", "directory")) {
    if (e->value.empty()) throw ConfigError(e->line, "output directory must not be empty");
    c.output_dir = e->value;
  }
  if (const Entry* e = get("run", "threads")) {
    c.threads = to_int(e->value, e->line, "threads");
    if (c.threads < 0) throw ConfigError(e->line, "threads must be non-negative");
  }
  return c;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  Sections s;
  std::stringstream in(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string l = raw;
    const auto hash = l.find_first_of("#;");
    if (hash != std::string::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ConfigError(line, "malformed section header '" + l + "'");
      section = lower(trim(l.substr(1, l.size() - 2)));
      if (!known_keys().count(section)) throw ConfigError(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value', got '" + l + "'");
    if (section.empty()) throw ConfigError(line, "key outside of any section");
    const std::string key = lower(trim(l.substr(0, eq)));
    const std::string value = trim(l.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");
    put(s, section, key, value, line);
  }
  return resolve(s);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(0, std::string("invalid JSON: ") + e.what());
    }
    return from_json(j.contains("config") ? j.at("config") : j);
  }
  return parse_config(ss.str());
}

std::string to_ini(const RunConfig& c) {
  std::ostringstream o;
  o << "[scenario]\nname = " << c.scenario << "\namplitude = " << fmt(c.amplitude) << "\nk = " << fmt(c.k) << '\n';
  if (c.drive_amplitude) o << "drive_amplitude = " << fmt(*c.drive_amplitude) << '\n';
  if (c.drive_omega) o << "drive_omega = " << fmt(*c.drive_omega) << '\n';
  o << "\n[mesh]\nnx = " << c.nx << "\nnv = " << c.nv << "\nvc = " << fmt(c.vc) << "\nlength = " << fmt(c.length)
    << '\n';
  o << "\n[basis]\nfamily = " << (c.family == Family::TensorQ ? "Q" : "P") << "\ndegree = " << c.degree << '\n';
  o << "\n[time]\ncfl = " << fmt(c.cfl) << "\nt_end = " << fmt(c.t_end) << "\ndiag_every = " << fmt(c.diag_every)
    << "\nsnapshot_times = " << join(c.snapshot_times) << '\n';
  o << "\n[limiter]\nenabled = " << (c.limiter ? "on" : "off") << '\n';
  o << "\n[output]\ndirectory = " << c.output_dir << '\n';
  o << "\n[run]\nthreads = " << c.threads << '\n';
  return o.str();
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["scenario"]["name"] = c.scenario;
  j["scenario"]["amplitude"] = c.amplitude;
  j["scenario"]["k"] = c.k;
  if (c.drive_amplitude) j["scenario"]["drive_amplitude"] = *c.drive_amplitude;
  if (c.drive_omega) j["scenario"]["drive_omega"] = *c.drive_omega;
  j["mesh"] = {{"nx", c.nx}, {"nv", c.nv}, {"vc", c.vc}, {"length", c.length}};
  j["basis"] = {{"family", c.family == Family::TensorQ ? "Q" : "P"}, {"degree", c.degree}};
  j["time"] = {{"cfl", c.cfl}, {"t_end", c.t_end}, {"diag_every", c.diag_every}, {"snapshot_times", c.snapshot_times}};
  j["limiter"] = {{"enabled", c.limiter}};
  j["output"] = {{"directory", c.output_dir}};
  j["run"] = {{"threads", c.threads}};
  return j;
}

RunConfig from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError(0, "configuration must be a JSON object");
  Sections s;
  for (const auto& [section, body] : j.items()) {
    if (!body.is_object()) throw ConfigError(0, "section '" + section + "' must be an object");
    for (const auto& [key, value] : body.items()) {
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_boolean()) {
        text = value.get<bool>() ? "on" : "off";
      } else if (value.is_array()) {
        std::vector<double> v;
        for (const auto& x : value) {
          if (!x.is_number()) throw ConfigError(0, "'" + key + "' must hold numbers");
          v.push_back(x.get<double>());
        }
        text = join(v);
      } else if (value.is_number_integer()) {
        text = std::to_string(value.get<long long>());
      } else if (value.is_number()) {
        text = fmt(value.get<double>());
      } else {
        throw ConfigError(0, "unsupported value for '" + key + "'");
      }
      put(s, section, key, text, 0);
    }
  }
  return resolve(s);
}

Scenario resolve_scenario(const RunConfig& c) {
  Scenario sc = make_scenario(c.scenario);
  sc.amplitude = c.amplitude;
  sc.k = c.k;
  sc.length = c.length;
  sc.vc = c.vc;
  if (sc.drive) {
    sc.drive->k = c.k;
    if (c.drive_amplitude) sc.drive->A_m = *c.drive_amplitude;
    if (c.drive_omega) sc.drive->omega = *c.drive_omega;
  }
  return sc;
}

}  // namespace vpdg::cli
