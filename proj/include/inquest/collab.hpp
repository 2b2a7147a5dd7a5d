#pragma once

// Two-agent measurement episodes: per-round pair selection, simulated
// measurements, posterior updates, and logging.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "inquest/design.hpp"
#include "inquest/inference.hpp"
#include "inquest/world.hpp"

namespace inquest {

struct RunConfig;  // defined in config.hpp

enum class PolicyKind {
  independent,
  sequential_greedy,
  joint_exhaustive,
  joint_search,
};

std::string policy_name(PolicyKind kind);
PolicyKind policy_from_name(const std::string& name);  // ConfigError if unknown

struct Policy {
  PolicyKind kind = PolicyKind::sequential_greedy;
  std::size_t restarts = 20;  // joint_search only; >= 1
};

void validate_policy(const Policy& p);

struct StopRule {
  std::size_t max_rounds = 25;      // >= 1
  double entropy_threshold = 0.1;   // bits, >= 0
};

void validate_stop_rule(const StopRule& s);

// One round of an episode.
struct RoundRecord {
  std::size_t round = 0;  // 1-based
  MeasurementLocation e1;
  MeasurementLocation e2;
  double obs1 = 0.0;
  double obs2 = 0.0;
  double pair_joint_entropy_bits = 0.0;
  double pair_mutual_information_bits = 0.0;
  double posterior_entropy_bits = 0.0;  // after both updates
  CircleState map_estimate;
  double center_error = 0.0;  // Euclidean distance to truth center
  double radius_error = 0.0;  // |r_map - r_truth|
};

struct EpisodeLog {
  std::vector<RoundRecord> rounds;
};

struct EpisodeResult {
  CircleState truth;
  EpisodeLog log;
  GridPosterior final_posterior;
  bool reached_threshold = false;
};

// Selects a pair per the policy, simulates both measurements with
// independent per-agent noise streams derived from round_seed, applies
// both updates (agent 1 then agent 2), and returns the new posterior
// plus the round record. Propagates ContradictionError from the updates.
std::pair<GridPosterior, RoundRecord> run_round(
    const GridPosterior& p, const CircleState& truth, const SensorModel& s,
    const Policy& policy, const MapGrid& map, const PredictionMode& mode,
    std::uint64_t round_seed, std::size_t round_index);

// Runs rounds until posterior entropy <= stop.entropy_threshold or
// stop.max_rounds is reached. Deterministic function of the config
// (including its master seed). On ContradictionError, rethrows with the
// failing round index in the message.
EpisodeResult run_episode(const RunConfig& config);

// Per-policy aggregate over a list of master seeds.
struct PolicySummary {
  std::string policy;
  std::size_t episodes = 0;
  // Episodes that never reach the threshold count max_rounds rounds.
  double mean_rounds_to_threshold = 0.0;
  double mean_pair_mi_bits = 0.0;
  double mean_pair_joint_entropy_bits = 0.0;
  std::size_t reached_threshold_count = 0;
};

std::vector<PolicySummary> compare_policies(
    const RunConfig& config, const std::vector<std::uint64_t>& seeds,
    const std::vector<Policy>& policies);

// JSON-lines: one object per round with fixed field names (see README).
void write_episode_jsonl(const EpisodeLog& log, std::ostream& out);
// CSV: header policy,episodes,mean_rounds_to_threshold,mean_pair_mi_bits,
// mean_pair_joint_entropy_bits,episodes_reaching_threshold, one row per
// summary.
void write_compare_csv(const std::vector<PolicySummary>& summaries,
                       std::ostream& out);

}  // namespace inquest
