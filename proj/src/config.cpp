#include "inquest/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "inquest/errors.hpp"
#include "inquest/rng.hpp"

namespace inquest {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& key,
                       const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ", key '" + key +
                    "': " + what);
}

double parse_double(std::size_t line, const std::string& key,
                    const std::string& value) {
  const char* begin = value.data();
  const char* end = begin + value.size();
  double out = 0.0;
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(line, key, "expected a number, got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_u64(std::size_t line, const std::string& key,
                        const std::string& value) {
  const char* begin = value.data();
  const char* end = begin + value.size();
  std::uint64_t out = 0;
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(line, key, "expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

std::size_t parse_count(std::size_t line, const std::string& key,
                        const std::string& value) {
  return static_cast<std::size_t>(parse_u64(line, key, value));
}

void apply_key(RunConfig& cfg, std::size_t line, const std::string& key,
               const std::string& value, bool& truth_explicit_seen) {
  if (key == "field.x_min") {
    cfg.field.x_min = parse_double(line, key, value);
  } else if (key == "field.x_max") {
    cfg.field.x_max = parse_double(line, key, value);
  } else if (key == "field.y_min") {
    cfg.field.y_min = parse_double(line, key, value);
  } else if (key == "field.y_max") {
    cfg.field.y_max = parse_double(line, key, value);
  } else if (key == "grid.nx") {
    cfg.grid_nx = parse_count(line, key, value);
  } else if (key == "grid.ny") {
    cfg.grid_ny = parse_count(line, key, value);
  } else if (key == "grid.nr") {
    cfg.grid_nr = parse_count(line, key, value);
  } else if (key == "grid.r_min") {
    cfg.grid_r_min = parse_double(line, key, value);
  } else if (key == "grid.r_max") {
    cfg.grid_r_max = parse_double(line, key, value);
  } else if (key == "map.nx") {
    cfg.map_nx = parse_count(line, key, value);
  } else if (key == "map.ny") {
    cfg.map_ny = parse_count(line, key, value);
  } else if (key == "sensor.kind") {
    if (value == "ideal") {
      cfg.sensor.kind = SensorKind::ideal_point;
    } else if (value == "disk") {
      cfg.sensor.kind = SensorKind::disk_footprint;
    } else {
      fail(line, key, "expected 'ideal' or 'disk', got '" + value + "'");
    }
  } else if (key == "sensor.flip_probability") {
    cfg.sensor.flip_probability = parse_double(line, key, value);
  } else if (key == "sensor.footprint_radius") {
    cfg.sensor.footprint_radius = parse_double(line, key, value);
  } else if (key == "sensor.noise_sigma") {
    cfg.sensor.noise_sigma = parse_double(line, key, value);
  } else if (key == "policy.kind") {
    try {
      cfg.policy.kind = policy_from_name(value);
    } catch (const ConfigError& e) {
      fail(line, key, e.what());
    }
  } else if (key == "policy.restarts") {
    cfg.policy.restarts = parse_count(line, key, value);
  } else if (key == "stop.max_rounds") {
    cfg.stop.max_rounds = parse_count(line, key, value);
  } else if (key == "stop.entropy_threshold") {
    cfg.stop.entropy_threshold = parse_double(line, key, value);
  } else if (key == "mode.kind") {
    if (value == "exact") {
      cfg.mode.kind = PredictionMode::Kind::exact;
    } else if (value == "sampled") {
      cfg.mode.kind = PredictionMode::Kind::sampled;
    } else {
      fail(line, key, "expected 'exact' or 'sampled', got '" + value + "'");
    }
  } else if (key == "mode.samples") {
    cfg.mode.samples = parse_count(line, key, value);
  } else if (key == "seed") {
    cfg.master_seed = parse_u64(line, key, value);
  } else if (key == "truth.kind") {
    if (value == "random") {
      cfg.truth_random = true;
    } else if (value == "explicit") {
      cfg.truth_random = false;
    } else {
      fail(line, key, "expected 'random' or 'explicit', got '" + value + "'");
    }
  } else if (key == "truth.x") {
    cfg.truth.x = parse_double(line, key, value);
    truth_explicit_seen = true;
  } else if (key == "truth.y") {
    cfg.truth.y = parse_double(line, key, value);
    truth_explicit_seen = true;
  } else if (key == "truth.r") {
    cfg.truth.r = parse_double(line, key, value);
    truth_explicit_seen = true;
  } else {
    fail(line, key, "unknown key");
  }
}

}  // namespace

std::shared_ptr<const StateGrid> RunConfig::make_state_grid() const {
  return std::make_shared<const StateGrid>(StateGrid::regular(
      field, grid_nx, grid_ny, grid_nr, grid_r_min, grid_r_max));
}

MapGrid RunConfig::make_map_grid() const {
  return MapGrid::regular(field, map_nx, map_ny);
}

CircleState RunConfig::resolve_truth(const StateGrid& grid) const {
  if (!truth_random) return truth;
  Rng rng(derive_seed(master_seed, kSeedSlotTruth));
  return grid.state(rng.next_index(grid.size()));
}

void RunConfig::validate() const {
  validate_field(field);
  if (grid_nx == 0 || grid_ny == 0 || grid_nr == 0) {
    throw ValidationError("grid.nx, grid.ny, grid.nr must all be >= 1");
  }
  if (!(grid_r_min > 0.0)) {
    throw ValidationError("grid.r_min must be positive");
  }
  if (grid_nr > 1 && !(grid_r_max > grid_r_min)) {
    throw ValidationError("grid.r_max must exceed grid.r_min when "
                          "grid.nr > 1");
  }
  if (map_nx == 0 || map_ny == 0) {
    throw ValidationError("map.nx and map.ny must be >= 1");
  }
  validate_sensor(sensor);
  validate_policy(policy);
  validate_stop_rule(stop);
  if (mode.is_sampled() && mode.samples == 0) {
    throw ValidationError("mode.samples must be >= 1");
  }
  if (!truth_random) {
    validate_circle(truth, field);
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  bool truth_explicit_seen = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": missing key");
    }
    if (value.empty()) {
      fail(lineno, key, "missing value");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": duplicate key '" + key + "'");
    }
    apply_key(cfg, lineno, key, value, truth_explicit_seen);
  }
  if (truth_explicit_seen && cfg.truth_random) {
    throw ConfigError(
        "truth.x/truth.y/truth.r require 'truth.kind = explicit'");
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace inquest
