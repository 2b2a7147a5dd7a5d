#pragma once

// Run configuration and the key=value config-file parser.

#include <cstdint>
#include <memory>
#include <string>

#include "inquest/collab.hpp"
#include "inquest/design.hpp"
#include "inquest/inference.hpp"
#include "inquest/world.hpp"

namespace inquest {

// Everything a run needs. Defaults describe the standard scenario:
// 100x100 field, 50x50x10 hypothesis grid with radii 3..12, 50x50 map
// grid, ideal sensor with 2% flip noise, sequential-greedy policy,
// exact prediction mode, stop at 0.1 bits or 25 rounds.
struct RunConfig {
  FieldBounds field;

  std::size_t grid_nx = 50;
  std::size_t grid_ny = 50;
  std::size_t grid_nr = 10;
  double grid_r_min = 3.0;
  double grid_r_max = 12.0;

  std::size_t map_nx = 50;
  std::size_t map_ny = 50;

  SensorModel sensor;
  Policy policy;
  StopRule stop;
  PredictionMode mode;

  std::uint64_t master_seed = 1;

  // Truth is either drawn uniformly from the hypothesis grid states
  // (random) or given explicitly.
  bool truth_random = true;
  CircleState truth{50.0, 50.0, 7.0};

  std::shared_ptr<const StateGrid> make_state_grid() const;
  MapGrid make_map_grid() const;
  // Explicit truth as configured, or a state drawn uniformly from the
  // grid (seeded from the master seed) when truth is random.
  CircleState resolve_truth(const StateGrid& grid) const;

  // Throws ValidationError / ConfigError naming the offending field.
  void validate() const;
};

// Parses the documented key = value format (one pair per line, '#'
// comments, dotted key names). Unknown keys, duplicate keys, and
// malformed values raise ConfigError with line and key context. Missing
// keys take defaults; an empty document yields the default config.
RunConfig parse_config(const std::string& text);

// parse_config over the file's contents; ConfigError when unreadable.
RunConfig load_config_file(const std::string& path);

}  // namespace inquest
