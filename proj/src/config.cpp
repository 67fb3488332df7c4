#include "rotwave/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rotwave/errors.hpp"

namespace rotwave {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "domain.L",          "domain.n",        "domain.bc",
      "time.dt",           "time.T",          "time.sample_every",
      "potential.family",  "potential.V0",    "potential.alpha",
      "data.family",       "data.amplitude",  "data.radius",
      "data.sigma",        "data.k",          "data.u1",
      "flags.antiderivative_check",
      "output.csv_path",   "output.svg_path", "output.report_path",
      "sweep.V0",          "sweep.alpha",     "sweep.baseline",
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  const char* begin = v.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ConfigError(line, "key '" + key + "': '" + v + "' is not a number");
  }
  return x;
}

int parse_int(const std::string& v, int line, const std::string& key) {
  const char* begin = v.c_str();
  char* end = nullptr;
  const long x = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ConfigError(line, "key '" + key + "': '" + v + "' is not an integer");
  }
  return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(line, "key '" + key + "': '" + v + "' is not a boolean");
}

std::vector<double> parse_list(const std::string& v, int line,
                               const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ConfigError(line, "key '" + key + "': empty list element");
    }
    out.push_back(parse_double(item, line, key));
  }
  if (out.empty()) {
    throw ConfigError(line, "key '" + key + "': empty list");
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)

  std::stringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "expected 'key = value'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");
    if (!known_keys().contains(key)) {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
    if (kv.count(key)) {
      throw ConfigError(line, "duplicate key '" + key + "' (first on line " +
                                  std::to_string(kv[key].second) + ")");
    }
    kv[key] = {value, line};
  }

  for (const char* req :
       {"domain.L", "domain.n", "time.dt", "time.T", "potential.family",
        "potential.V0", "potential.alpha", "data.family"}) {
    if (!kv.count(req)) {
      throw ConfigError(0, std::string("missing required key '") + req + "'");
    }
  }

  RunConfig c;
  auto has = [&](const char* k) { return kv.count(k) != 0; };
  auto val = [&](const char* k) { return kv[k].first; };
  auto ln = [&](const char* k) { return kv[k].second; };

  c.L = parse_double(val("domain.L"), ln("domain.L"), "domain.L");
  c.n = parse_int(val("domain.n"), ln("domain.n"), "domain.n");
  if (has("domain.bc")) {
    const std::string b = val("domain.bc");
    if (b == "dirichlet") {
      c.bc = Bc::dirichlet;
    } else if (b == "periodic") {
      c.bc = Bc::periodic;
    } else {
      throw ConfigError(ln("domain.bc"),
                        "domain.bc must be dirichlet or periodic, got '" + b +
                            "'");
    }
  }
  c.dt = parse_double(val("time.dt"), ln("time.dt"), "time.dt");
  c.T = parse_double(val("time.T"), ln("time.T"), "time.T");
  if (has("time.sample_every")) {
    c.sample_every = parse_int(val("time.sample_every"),
                               ln("time.sample_every"), "time.sample_every");
  }

  {
    const std::string f = val("potential.family");
    if (f == "algebraic") {
      c.potential.family = PotentialFamily::algebraic;
    } else if (f == "constant") {
      c.potential.family = PotentialFamily::constant;
    } else if (f == "gaussian") {
      c.potential.family = PotentialFamily::gaussian;
    } else {
      throw ConfigError(ln("potential.family"),
                        "potential.family must be algebraic, constant, or "
                        "gaussian, got '" + f + "'");
    }
  }
  c.potential.v0 =
      parse_double(val("potential.V0"), ln("potential.V0"), "potential.V0");
  c.potential.alpha = parse_double(val("potential.alpha"),
                                   ln("potential.alpha"), "potential.alpha");

  {
    const std::string f = val("data.family");
    if (f == "bump") {
      c.data.family = DataFamily::bump;
    } else if (f == "gaussian") {
      c.data.family = DataFamily::gaussian;
    } else if (f == "zero") {
      c.data.family = DataFamily::zero;
    } else if (f == "fourier-mode") {
      c.data.family = DataFamily::fourier_mode;
    } else {
      throw ConfigError(ln("data.family"),
                        "data.family must be bump, gaussian, zero, or "
                        "fourier-mode, got '" + f + "'");
    }
  }
  if (has("data.amplitude")) {
    c.data.amplitude =
        parse_double(val("data.amplitude"), ln("data.amplitude"),
                     "data.amplitude");
  }
  if (has("data.radius")) {
    c.data.radius =
        parse_double(val("data.radius"), ln("data.radius"), "data.radius");
  }
  if (has("data.sigma")) {
    c.data.sigma =
        parse_double(val("data.sigma"), ln("data.sigma"), "data.sigma");
  }
  if (has("data.k")) {
    c.data.k = parse_double(val("data.k"), ln("data.k"), "data.k");
  }
  if (has("data.u1")) {
    const std::string f = val("data.u1");
    if (f == "zero") {
      c.data.u1 = U1Family::zero;
    } else if (f == "gaussian-derivative") {
      c.data.u1 = U1Family::gaussian_derivative;
    } else {
      throw ConfigError(ln("data.u1"),
                        "data.u1 must be zero or gaussian-derivative, got '" +
                            f + "'");
    }
  }
  if (has("flags.antiderivative_check")) {
    c.antiderivative_check =
        parse_bool(val("flags.antiderivative_check"),
                   ln("flags.antiderivative_check"),
                   "flags.antiderivative_check");
  }
  if (has("output.csv_path")) c.csv_path = val("output.csv_path");
  if (has("output.svg_path")) c.svg_path = val("output.svg_path");
  if (has("output.report_path")) c.report_path = val("output.report_path");
  if (has("sweep.V0")) {
    c.sweep.v0 = parse_list(val("sweep.V0"), ln("sweep.V0"), "sweep.V0");
  }
  if (has("sweep.alpha")) {
    c.sweep.alpha =
        parse_list(val("sweep.alpha"), ln("sweep.alpha"), "sweep.alpha");
  }
  if (has("sweep.baseline")) {
    c.sweep.baseline = parse_bool(val("sweep.baseline"), ln("sweep.baseline"),
                                  "sweep.baseline");
  }

  if (!(c.L > 0.0)) throw ConfigError(ln("domain.L"), "domain.L must be > 0");
  if (c.n < 3) throw ConfigError(ln("domain.n"), "domain.n must be >= 3");
  if (!(c.dt > 0.0)) throw ConfigError(ln("time.dt"), "time.dt must be > 0");
  if (!(c.T > 0.0)) throw ConfigError(ln("time.T"), "time.T must be > 0");
  if (c.sample_every < 1) {
    throw ConfigError(ln("time.sample_every"),
                      "time.sample_every must be >= 1");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("error reading config file '" + path + "'");
  return parse_config_text(ss.str());
}

}  // namespace rotwave
