#include "inquest/cli_app.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "inquest/collab.hpp"
#include "inquest/config.hpp"
#include "inquest/design.hpp"
#include "inquest/errors.hpp"
#include "inquest/inference.hpp"
#include "inquest/rng.hpp"

namespace fs = std::filesystem;

namespace inquest {

namespace {

// Success outputs are never partially written: the content goes to a
// sibling temp file first and is renamed into place.
void atomic_write(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw Error("failed writing " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::uint64_t parse_seed_token(const std::string& token) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  std::uint64_t v = 0;
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ConfigError("bad seed '" + token + "'");
  }
  return v;
}

// Comma-separated seeds; each entry is a single value or an inclusive
// range a..b.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const std::size_t b = token.find_first_not_of(" \t");
    const std::size_t e = token.find_last_not_of(" \t");
    token = b == std::string::npos ? "" : token.substr(b, e - b + 1);
    if (!token.empty()) {
      const std::size_t dots = token.find("..");
      if (dots == std::string::npos) {
        seeds.push_back(parse_seed_token(token));
      } else {
        const std::uint64_t lo = parse_seed_token(token.substr(0, dots));
        const std::uint64_t hi = parse_seed_token(token.substr(dots + 2));
        if (hi < lo) {
          throw ConfigError("descending seed range '" + token + "'");
        }
        if (hi - lo >= 1000000) {
          throw ConfigError("seed range '" + token + "' is too large");
        }
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
      }
    }
    pos = comma + 1;
  }
  if (seeds.empty()) {
    throw ConfigError("no seeds given (use --seeds, e.g. --seeds 1..20)");
  }
  return seeds;
}

MeasurementLocation parse_e1(const std::string& text,
                             const FieldBounds& field) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("--e1 expects 'x,y', got '" + text + "'");
  }
  auto parse_part = [&](const std::string& part) {
    const char* begin = part.data();
    const char* end = begin + part.size();
    double v = 0.0;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end) {
      throw ConfigError("--e1 expects 'x,y', got '" + text + "'");
    }
    return v;
  };
  MeasurementLocation m{parse_part(text.substr(0, comma)),
                        parse_part(text.substr(comma + 1))};
  validate_location(m, field);
  return m;
}

int do_run(const RunConfig& cfg, const fs::path& out_dir) {
  const EpisodeResult res = run_episode(cfg);
  fs::create_directories(out_dir);
  std::ostringstream log;
  write_episode_jsonl(res.log, log);
  atomic_write(out_dir / "episode.jsonl", log.str());
  std::ostringstream posterior;
  write_posterior_csv(res.final_posterior, posterior);
  atomic_write(out_dir / "posterior.csv", posterior.str());

  const double h = res.log.rounds.empty()
                       ? posterior_entropy(res.final_posterior)
                       : res.log.rounds.back().posterior_entropy_bits;
  std::printf(
      "episode: rounds=%zu reached_threshold=%s posterior_entropy=%.6f "
      "bits\n",
      res.log.rounds.size(), res.reached_threshold ? "true" : "false", h);
  const CircleState best = map_estimate(res.final_posterior);
  std::printf("map estimate: x=%.6g y=%.6g r=%.6g (truth x=%.6g y=%.6g "
              "r=%.6g)\n",
              best.x, best.y, best.r, res.truth.x, res.truth.y, res.truth.r);
  std::printf("wrote %s and %s\n",
              (out_dir / "episode.jsonl").string().c_str(),
              (out_dir / "posterior.csv").string().c_str());
  return 0;
}

void write_map_files(const EntropyMap& map, const fs::path& out_dir,
                     const std::string& stem) {
  std::ostringstream csv;
  write_map_csv(map, csv);
  atomic_write(out_dir / (stem + ".csv"), csv.str());
  std::ostringstream pgm;
  write_map_pgm(map, pgm);
  atomic_write(out_dir / (stem + ".pgm"), pgm.str());
  std::printf("wrote %s.csv and %s.pgm in %s\n", stem.c_str(), stem.c_str(),
              out_dir.string().c_str());
}

int do_map(const RunConfig& cfg, const fs::path& out_dir, bool have_e1,
           const std::string& e1_text) {
  auto grid = cfg.make_state_grid();
  const MapGrid map = cfg.make_map_grid();
  const GridPosterior prior = init_prior(grid);
  PredictionMode mode = cfg.mode;
  if (mode.is_sampled()) {
    mode.seed = derive_seed(cfg.master_seed, kSeedSlotSampler);
  }
  fs::create_directories(out_dir);
  if (!have_e1) {
    write_map_files(entropy_map(prior, cfg.sensor, map, mode), out_dir,
                    "entropy_map");
    return 0;
  }
  const MeasurementLocation e1 = parse_e1(e1_text, cfg.field);
  write_map_files(joint_entropy_map(prior, cfg.sensor, e1, map, mode),
                  out_dir, "joint_entropy_map");
  write_map_files(mutual_information_map(prior, cfg.sensor, e1, map, mode),
                  out_dir, "mutual_information_map");
  return 0;
}

int do_compare(const RunConfig& cfg, const fs::path& out_dir,
               const std::string& seeds_text, bool policy_overridden) {
  const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);
  std::vector<Policy> policies;
  if (policy_overridden) {
    policies.push_back(cfg.policy);
  } else {
    for (PolicyKind kind :
         {PolicyKind::independent, PolicyKind::sequential_greedy,
          PolicyKind::joint_exhaustive, PolicyKind::joint_search}) {
      policies.push_back(Policy{kind, cfg.policy.restarts});
    }
  }
  const std::vector<PolicySummary> summaries =
      compare_policies(cfg, seeds, policies);
  fs::create_directories(out_dir);
  std::ostringstream csv;
  write_compare_csv(summaries, csv);
  atomic_write(out_dir / "compare.csv", csv.str());
  for (const PolicySummary& s : summaries) {
    std::printf("%-18s episodes=%zu mean_rounds=%.3f mean_mi=%.4f "
                "mean_joint_entropy=%.4f reached=%zu\n",
                s.policy.c_str(), s.episodes, s.mean_rounds_to_threshold,
                s.mean_pair_mi_bits, s.mean_pair_joint_entropy_bits,
                s.reached_threshold_count);
  }
  std::printf("wrote %s\n", (out_dir / "compare.csv").string().c_str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Two-agent measurement selection by maximum joint entropy"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::string policy_name_arg;
  std::string e1_text;
  std::string seeds_text;
  std::uint64_t seed_arg = 0;

  CLI::App* run_cmd = app.add_subcommand(
      "run", "Run one episode; writes episode.jsonl and posterior.csv");
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Write entropy maps (joint/MI maps with --e1) as CSV and PGM");
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Compare selection policies across seeds; writes "
                 "compare.csv");

  for (CLI::App* cmd : {run_cmd, map_cmd, compare_cmd}) {
    cmd->add_option("--config", config_path,
                    "Config file (key = value lines; missing keys take "
                    "defaults)");
    cmd->add_option("--out", out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--seed", seed_arg, "Master seed (overrides config)");
  }
  run_cmd->add_option("--policy", policy_name_arg,
                      "Selection policy (overrides config)");
  compare_cmd->add_option("--policy", policy_name_arg,
                          "Compare only this policy (default: all)");
  map_cmd->add_option("--e1", e1_text,
                      "Fixed first measurement 'x,y'; switches output to "
                      "joint-entropy and mutual-information maps");
  compare_cmd
      ->add_option("--seeds", seeds_text,
                   "Seeds: comma-separated values and/or a..b ranges")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig cfg =
        config_path.empty() ? RunConfig{} : load_config_file(config_path);
    CLI::App* active = run_cmd->parsed()   ? run_cmd
                       : map_cmd->parsed() ? map_cmd
                                           : compare_cmd;
    if (active->count("--seed") > 0) {
      cfg.master_seed = seed_arg;
    }
    const CLI::Option* policy_opt = active->get_option_no_throw("--policy");
    const bool policy_overridden =
        policy_opt != nullptr && policy_opt->count() > 0;
    if (policy_overridden) {
      cfg.policy.kind = policy_from_name(policy_name_arg);
    }
    cfg.validate();

    const fs::path out(out_dir);
    if (run_cmd->parsed()) return do_run(cfg, out);
    if (map_cmd->parsed()) {
      return do_map(cfg, out, map_cmd->count("--e1") > 0, e1_text);
    }
    return do_compare(cfg, out, seeds_text, policy_overridden);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace inquest
