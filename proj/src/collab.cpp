#include "inquest/collab.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "inquest/config.hpp"
#include "inquest/errors.hpp"
#include "inquest/rng.hpp"

namespace inquest {

namespace {

SelectedPair select_pair(const GridPosterior& p, const SensorModel& s,
                         const Policy& policy, const MapGrid& map,
                         const PredictionMode& mode,
                         std::uint64_t search_seed) {
  switch (policy.kind) {
    case PolicyKind::independent:
      return select_independent(p, s, map, mode);
    case PolicyKind::sequential_greedy:
      return select_sequential_greedy(p, s, map, mode);
    case PolicyKind::joint_exhaustive:
      return select_joint_exhaustive(p, s, map, mode);
    case PolicyKind::joint_search:
      return hill_climb_pair_search(p, s, map, mode, policy.restarts,
                                    search_seed);
  }
  throw ValidationError("unknown policy kind");
}

}  // namespace

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::independent:
      return "independent";
    case PolicyKind::sequential_greedy:
      return "sequential-greedy";
    case PolicyKind::joint_exhaustive:
      return "joint-exhaustive";
    case PolicyKind::joint_search:
      return "joint-search";
  }
  return "unknown";
}

PolicyKind policy_from_name(const std::string& name) {
  if (name == "independent") return PolicyKind::independent;
  if (name == "sequential-greedy") return PolicyKind::sequential_greedy;
  if (name == "joint-exhaustive") return PolicyKind::joint_exhaustive;
  if (name == "joint-search") return PolicyKind::joint_search;
  throw ConfigError("unknown policy '" + name +
                    "' (expected independent, sequential-greedy, "
                    "joint-exhaustive, or joint-search)");
}

void validate_policy(const Policy& p) {
  if (p.kind == PolicyKind::joint_search && p.restarts == 0) {
    throw ValidationError("joint-search policy needs restarts >= 1");
  }
}

void validate_stop_rule(const StopRule& s) {
  if (s.max_rounds == 0) {
    throw ValidationError("stop rule needs max_rounds >= 1");
  }
  if (!(s.entropy_threshold >= 0.0)) {
    throw ValidationError("stop rule entropy threshold must be >= 0");
  }
}

std::pair<GridPosterior, RoundRecord> run_round(
    const GridPosterior& p, const CircleState& truth, const SensorModel& s,
    const Policy& policy, const MapGrid& map, const PredictionMode& mode,
    std::uint64_t round_seed, std::size_t round_index) {
  validate_policy(policy);
  PredictionMode round_mode = mode;
  if (mode.is_sampled()) {
    round_mode.seed = derive_seed(round_seed, kSeedSlotSampler);
  }

  const SelectedPair pair = select_pair(
      p, s, policy, map, round_mode, derive_seed(round_seed, kSeedSlotSearch));

  Rng noise1(derive_seed(round_seed, kSeedSlotAgent1));
  Rng noise2(derive_seed(round_seed, kSeedSlotAgent2));
  const double obs1 = simulate_measurement(truth, pair.m1, s, noise1);
  const double obs2 = simulate_measurement(truth, pair.m2, s, noise2);

  RoundRecord rec;
  rec.round = round_index;
  rec.e1 = pair.m1;
  rec.e2 = pair.m2;
  rec.obs1 = obs1;
  rec.obs2 = obs2;
  rec.pair_joint_entropy_bits =
      joint_entropy_at(p, pair.m1, pair.m2, s, round_mode);
  rec.pair_mutual_information_bits =
      mutual_information_at(p, pair.m1, pair.m2, s, round_mode);

  GridPosterior updated = bayes_update(p, pair.m1, obs1, s);
  updated = bayes_update(updated, pair.m2, obs2, s);

  rec.posterior_entropy_bits = posterior_entropy(updated);
  rec.map_estimate = map_estimate(updated);
  const double dx = rec.map_estimate.x - truth.x;
  const double dy = rec.map_estimate.y - truth.y;
  rec.center_error = std::sqrt(dx * dx + dy * dy);
  rec.radius_error = std::abs(rec.map_estimate.r - truth.r);
  return {std::move(updated), rec};
}

EpisodeResult run_episode(const RunConfig& config) {
  config.validate();
  auto grid = config.make_state_grid();
  const MapGrid map = config.make_map_grid();
  const CircleState truth = config.resolve_truth(*grid);

  EpisodeResult result;
  result.truth = truth;
  GridPosterior posterior = init_prior(grid);
  result.reached_threshold =
      posterior_entropy(posterior) <= config.stop.entropy_threshold;

  for (std::size_t round = 1;
       !result.reached_threshold && round <= config.stop.max_rounds;
       ++round) {
    const std::uint64_t round_seed = derive_seed(config.master_seed, round);
    try {
      auto [next, rec] = run_round(posterior, truth, config.sensor,
                                   config.policy, map, config.mode,
                                   round_seed, round);
      posterior = std::move(next);
      result.log.rounds.push_back(rec);
      if (rec.posterior_entropy_bits <= config.stop.entropy_threshold) {
        result.reached_threshold = true;
      }
    } catch (const ContradictionError& e) {
      throw ContradictionError("round " + std::to_string(round) + ": " +
                               e.what());
    }
  }
  result.final_posterior = std::move(posterior);
  return result;
}

std::vector<PolicySummary> compare_policies(
    const RunConfig& config, const std::vector<std::uint64_t>& seeds,
    const std::vector<Policy>& policies) {
  if (seeds.empty()) {
    throw ValidationError("policy comparison needs at least one seed");
  }
  if (policies.empty()) {
    throw ValidationError("policy comparison needs at least one policy");
  }
  std::vector<PolicySummary> out;
  out.reserve(policies.size());
  for (const Policy& policy : policies) {
    PolicySummary summary;
    summary.policy = policy_name(policy.kind);
    summary.episodes = seeds.size();
    double rounds_total = 0.0;
    double mi_total = 0.0;
    double je_total = 0.0;
    std::size_t round_count = 0;
    for (std::uint64_t seed : seeds) {
      RunConfig cfg = config;
      cfg.policy = policy;
      cfg.master_seed = seed;
      const EpisodeResult res = run_episode(cfg);
      rounds_total += res.reached_threshold
                          ? static_cast<double>(res.log.rounds.size())
                          : static_cast<double>(cfg.stop.max_rounds);
      if (res.reached_threshold) ++summary.reached_threshold_count;
      for (const RoundRecord& rec : res.log.rounds) {
        mi_total += rec.pair_mutual_information_bits;
        je_total += rec.pair_joint_entropy_bits;
        ++round_count;
      }
    }
    summary.mean_rounds_to_threshold =
        rounds_total / static_cast<double>(seeds.size());
    if (round_count > 0) {
      summary.mean_pair_mi_bits =
          mi_total / static_cast<double>(round_count);
      summary.mean_pair_joint_entropy_bits =
          je_total / static_cast<double>(round_count);
    }
    out.push_back(std::move(summary));
  }
  return out;
}

void write_episode_jsonl(const EpisodeLog& log, std::ostream& out) {
  for (const RoundRecord& rec : log.rounds) {
    nlohmann::json j;
    j["round"] = rec.round;
    j["e1"] = {{"x", rec.e1.x}, {"y", rec.e1.y}};
    j["e2"] = {{"x", rec.e2.x}, {"y", rec.e2.y}};
    j["obs1"] = rec.obs1;
    j["obs2"] = rec.obs2;
    j["pair_joint_entropy_bits"] = rec.pair_joint_entropy_bits;
    j["pair_mutual_information_bits"] = rec.pair_mutual_information_bits;
    j["posterior_entropy_bits"] = rec.posterior_entropy_bits;
    j["map"] = {{"x", rec.map_estimate.x},
                {"y", rec.map_estimate.y},
                {"r", rec.map_estimate.r}};
    j["center_error"] = rec.center_error;
    j["radius_error"] = rec.radius_error;
    out << j.dump() << "\n";
  }
}

void write_compare_csv(const std::vector<PolicySummary>& summaries,
                       std::ostream& out) {
  out << "policy,episodes,mean_rounds_to_threshold,mean_pair_mi_bits,"
         "mean_pair_joint_entropy_bits,episodes_reaching_threshold\n";
  char buf[256];
  for (const PolicySummary& s : summaries) {
    std::snprintf(buf, sizeof buf, "%s,%zu,%.17g,%.17g,%.17g,%zu\n",
                  s.policy.c_str(), s.episodes, s.mean_rounds_to_threshold,
                  s.mean_pair_mi_bits, s.mean_pair_joint_entropy_bits,
                  s.reached_threshold_count);
    out << buf;
  }
}

}  // namespace inquest
