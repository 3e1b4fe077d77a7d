#include "paprsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace paprsim {
namespace {

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("invalid integer for key '" + key + "': '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("invalid unsigned integer for key '" + key + "': '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("invalid number for key '" + key + "': '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw config_error("invalid boolean for key '" + key + "': '" + value + "'");
}

std::vector<Method> parse_methods(const std::string& value) {
  std::vector<Method> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Method m = method_from_name(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw config_error("key 'methods' selects no method");
  // Canonical order keeps output columns stable regardless of spelling order.
  std::vector<Method> canonical;
  for (Method m : {Method::none, Method::clip, Method::slm, Method::pts})
    if (std::find(out.begin(), out.end(), m) != out.end()) canonical.push_back(m);
  return canonical;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

int default_n_used(int n) {
  if (n == 512) return 301;
  if (n == 1024) return 601;
  int v = static_cast<int>(std::lround(n * 301.0 / 512.0));
  if (v % 2 == 0) v += 1;
  return std::clamp(v, 1, n);
}

CarrierMap SimConfig::carrier_map() const {
  return layout == CarrierLayout::centered ? CarrierMap::centered(n, n_used)
                                           : CarrierMap::inorder(n, n_used);
}

std::vector<double> SimConfig::threshold_grid() const {
  std::vector<double> grid;
  const double eps = threshold_step * 1e-9;
  for (int i = 0;; ++i) {
    const double t = threshold_start + i * threshold_step;
    if (t > threshold_stop + eps) break;
    grid.push_back(t);
  }
  return grid;
}

SimConfig load_config(const ConfigEntries& entries) {
  SimConfig cfg;
  bool n_used_given = false;
  bool cr_db_given = false;
  bool cr_linear_given = false;
  double cr_linear = 0.0;

  for (const auto& [key, value] : entries) {
    if (key == "n") {
      cfg.n = static_cast<int>(parse_int(key, value));
    } else if (key == "n-used") {
      cfg.n_used = static_cast<int>(parse_int(key, value));
      n_used_given = true;
    } else if (key == "oversample") {
      cfg.oversampling = static_cast<int>(parse_int(key, value));
    } else if (key == "n-tx") {
      cfg.n_tx = static_cast<int>(parse_int(key, value));
    } else if (key == "n-rx") {
      cfg.n_rx = static_cast<int>(parse_int(key, value));
    } else if (key == "methods") {
      cfg.methods = parse_methods(value);
    } else if (key == "cr-db") {
      cfg.clip.cr_db = parse_double(key, value);
      cr_db_given = true;
    } else if (key == "cr-linear") {
      cr_linear = parse_double(key, value);
      cr_linear_given = true;
    } else if (key == "clip-iterations") {
      cfg.clip.iterations = static_cast<int>(parse_int(key, value));
    } else if (key == "slm-routes") {
      cfg.slm_routes = static_cast<int>(parse_int(key, value));
    } else if (key == "pts-subblocks") {
      cfg.pts.v_count = static_cast<int>(parse_int(key, value));
    } else if (key == "pts-scheme") {
      if (value == "adjacent")
        cfg.pts.scheme = PtsScheme::adjacent;
      else if (value == "interleaved")
        cfg.pts.scheme = PtsScheme::interleaved;
      else
        throw config_error("invalid value for key 'pts-scheme': '" + value + "'");
    } else if (key == "pts-strategy") {
      if (value == "exhaustive")
        cfg.pts.strategy = PtsStrategy::exhaustive;
      else if (value == "greedy")
        cfg.pts.strategy = PtsStrategy::greedy;
      else
        throw config_error("invalid value for key 'pts-strategy': '" + value + "'");
    } else if (key == "symbols") {
      cfg.n_symbols = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
      cfg.seed = parse_u64(key, value);
    } else if (key == "thresholds") {
      std::stringstream ss(value);
      std::string a, b, c;
      if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw config_error("invalid value for key 'thresholds': '" + value +
                           "' (expected start:step:stop)");
      cfg.threshold_start = parse_double(key, a);
      cfg.threshold_step = parse_double(key, b);
      cfg.threshold_stop = parse_double(key, c);
    } else if (key == "carrier-layout") {
      if (value == "centered")
        cfg.layout = CarrierLayout::centered;
      else if (value == "inorder")
        cfg.layout = CarrierLayout::inorder;
      else
        throw config_error("invalid value for key 'carrier-layout': '" + value + "'");
    } else if (key == "rx-ccdf") {
      cfg.rx_ccdf = parse_bool(key, value);
    } else if (key == "noise-power") {
      cfg.noise_power = parse_double(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_int(key, value));
    } else if (key == "format") {
      if (value != "csv" && value != "json")
        throw config_error("invalid value for key 'format': '" + value + "'");
      cfg.format = value;
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw config_error("unknown configuration key '" + key + "'");
    }
  }

  if (cr_db_given && cr_linear_given)
    throw config_error("keys 'cr-db' and 'cr-linear' are mutually exclusive");
  if (cr_linear_given) {
    if (!(cr_linear > 0.0))
      throw config_error("invalid value for key 'cr-linear': must be > 0");
    cfg.clip.cr_db = 20.0 * std::log10(cr_linear);
    cfg.cr_given_linear = true;
  }
  if (!n_used_given) cfg.n_used = default_n_used(cfg.n);

  validate(cfg);
  return cfg;
}

void validate(const SimConfig& cfg) {
  if (cfg.n < 2 || !is_power_of_two(static_cast<std::size_t>(cfg.n)))
    throw config_error("key 'n': subcarrier count must be a power of two >= 2, got " +
                       std::to_string(cfg.n));
  if (cfg.n_used < 1 || cfg.n_used > cfg.n)
    throw config_error("key 'n-used': must be in [1, n], got " + std::to_string(cfg.n_used));
  if (cfg.oversampling < 1)
    throw config_error("key 'oversample': must be >= 1, got " +
                       std::to_string(cfg.oversampling));
  if (cfg.n_tx != 1 && cfg.n_tx != 2)
    throw config_error("key 'n-tx': this chain supports 1 or 2 transmit antennas, got " +
                       std::to_string(cfg.n_tx));
  if (cfg.n_rx < 1 || cfg.n_rx > 8)
    throw config_error("key 'n-rx': must be in [1, 8], got " + std::to_string(cfg.n_rx));
  if (cfg.methods.empty()) throw config_error("key 'methods': must select at least one method");
  if (cfg.clip.iterations < 0)
    throw config_error("key 'clip-iterations': must be >= 0");
  if (cfg.slm_routes < 1) throw config_error("key 'slm-routes': must be >= 1");
  if (cfg.pts.v_count < 1) throw config_error("key 'pts-subblocks': must be >= 1");
  if (cfg.pts.v_count > cfg.n_used)
    throw config_error("key 'pts-subblocks': " + std::to_string(cfg.pts.v_count) +
                       " exceeds used subcarriers " + std::to_string(cfg.n_used));
  if (cfg.n_symbols < 1) throw config_error("key 'symbols': must be >= 1");
  if (!(cfg.threshold_step > 0.0))
    throw config_error("key 'thresholds': step must be > 0");
  if (cfg.threshold_stop < cfg.threshold_start)
    throw config_error("key 'thresholds': stop must be >= start");
  if (cfg.noise_power < 0.0) throw config_error("key 'noise-power': must be >= 0");
  if (cfg.threads < 1 || cfg.threads > 256)
    throw config_error("key 'threads': must be in [1, 256]");
}

ConfigEntries parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file '" + path + "'");
  ConfigEntries entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw config_error("config file '" + path + "' line " + std::to_string(line_no) +
                         ": expected key=value");
    entries.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  return entries;
}

SimConfig load_config_file(const std::string& path, const ConfigEntries& overrides) {
  ConfigEntries entries = parse_config_file(path);
  entries.insert(entries.end(), overrides.begin(), overrides.end());
  return load_config(entries);
}

ConfigEntries config_entries(const SimConfig& cfg) {
  ConfigEntries e;
  e.emplace_back("n", std::to_string(cfg.n));
  e.emplace_back("n-used", std::to_string(cfg.n_used));
  e.emplace_back("oversample", std::to_string(cfg.oversampling));
  e.emplace_back("n-tx", std::to_string(cfg.n_tx));
  e.emplace_back("n-rx", std::to_string(cfg.n_rx));
  std::string methods;
  for (Method m : cfg.methods) {
    if (!methods.empty()) methods += ',';
    methods += method_name(m);
  }
  e.emplace_back("methods", methods);
  e.emplace_back("cr-db", fmt_double(cfg.clip.cr_db));
  e.emplace_back("clip-iterations", std::to_string(cfg.clip.iterations));
  e.emplace_back("slm-routes", std::to_string(cfg.slm_routes));
  e.emplace_back("pts-subblocks", std::to_string(cfg.pts.v_count));
  e.emplace_back("pts-scheme",
                 cfg.pts.scheme == PtsScheme::adjacent ? "adjacent" : "interleaved");
  e.emplace_back("pts-strategy",
                 cfg.pts.strategy == PtsStrategy::greedy ? "greedy" : "exhaustive");
  e.emplace_back("symbols", std::to_string(cfg.n_symbols));
  e.emplace_back("seed", std::to_string(cfg.seed));
  e.emplace_back("thresholds", fmt_double(cfg.threshold_start) + ":" +
                                   fmt_double(cfg.threshold_step) + ":" +
                                   fmt_double(cfg.threshold_stop));
  e.emplace_back("carrier-layout",
                 cfg.layout == CarrierLayout::centered ? "centered" : "inorder");
  e.emplace_back("rx-ccdf", cfg.rx_ccdf ? "true" : "false");
  e.emplace_back("noise-power", fmt_double(cfg.noise_power));
  e.emplace_back("threads", std::to_string(cfg.threads));
  e.emplace_back("format", cfg.format);
  e.emplace_back("out", cfg.out);
  return e;
}

}  // namespace paprsim
