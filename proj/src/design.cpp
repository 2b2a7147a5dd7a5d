#include "inquest/design.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inquest/errors.hpp"
#include "inquest/inquiry.hpp"
#include "inquest/kernels.hpp"
#include "inquest/rng.hpp"

namespace inquest {

namespace {

void check_map_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) {
    throw ValidationError(std::string("map axis ") + name + " is empty");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw ValidationError(std::string("map axis ") + name +
                            " must be strictly increasing");
    }
  }
}

inline double hterm(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Entropy in bits of an already-normalized bin vector (no validation);
// the same 0 log 0 := 0 accumulation shannon_entropy performs.
double hbits(const std::vector<double>& bins) {
  double h = 0.0;
  for (double v : bins) h += hterm(v);
  return h < 0.0 ? 0.0 : h;
}

// --- unchecked canonical accumulation --------------------------------------
// These loops define the reference arithmetic: ascending state order, one
// plain accumulator per bin, zero-mass states skipped (adding +0.0 is an
// exact no-op). The public operations validate and then defer here.

std::vector<std::size_t> mode_sample_indices(const GridPosterior& p,
                                             const PredictionMode& mode) {
  if (mode.samples == 0) {
    throw ValidationError("sampled prediction mode needs >= 1 samples");
  }
  Rng rng(mode.seed);
  return draw_sample_indices(p, mode.samples, rng);
}

OutcomeDistribution outcome_unchecked(const GridPosterior& p,
                                      const MeasurementLocation& m,
                                      const SensorModel& s,
                                      const PredictionMode& mode) {
  OutcomeDistribution out;
  out.bins.assign(outcome_bin_count(s), 0.0);
  const StateGrid& g = *p.grid;
  if (!mode.is_sampled()) {
    for (std::size_t i = 0; i < p.mass.size(); ++i) {
      if (p.mass[i] == 0.0) continue;
      out.bins[outcome_bin(predict(g.state(i), m, s), s)] += p.mass[i];
    }
  } else {
    const auto idxs = mode_sample_indices(p, mode);
    const double w = 1.0 / static_cast<double>(mode.samples);
    for (std::size_t idx : idxs) {
      out.bins[outcome_bin(predict(g.state(idx), m, s), s)] += w;
    }
  }
  return out;
}

JointOutcomeDistribution joint_unchecked(const GridPosterior& p,
                                         const MeasurementLocation& m1,
                                         const MeasurementLocation& m2,
                                         const SensorModel& s,
                                         const PredictionMode& mode) {
  const std::size_t b = outcome_bin_count(s);
  JointOutcomeDistribution out;
  out.bins1 = b;
  out.bins2 = b;
  out.table.assign(b * b, 0.0);
  const StateGrid& g = *p.grid;
  if (!mode.is_sampled()) {
    for (std::size_t i = 0; i < p.mass.size(); ++i) {
      if (p.mass[i] == 0.0) continue;
      const CircleState c = g.state(i);
      const std::size_t b1 = outcome_bin(predict(c, m1, s), s);
      const std::size_t b2 = outcome_bin(predict(c, m2, s), s);
      out.table[b1 * b + b2] += p.mass[i];
    }
  } else {
    const auto idxs = mode_sample_indices(p, mode);
    const double w = 1.0 / static_cast<double>(mode.samples);
    for (std::size_t idx : idxs) {
      const CircleState c = g.state(idx);
      const std::size_t b1 = outcome_bin(predict(c, m1, s), s);
      const std::size_t b2 = outcome_bin(predict(c, m2, s), s);
      out.table[b1 * b + b2] += w;
    }
  }
  return out;
}

double entropy_at_unchecked(const GridPosterior& p,
                            const MeasurementLocation& m,
                            const SensorModel& s, const PredictionMode& mode) {
  return hbits(outcome_unchecked(p, m, s, mode).bins);
}

double joint_entropy_at_unchecked(const GridPosterior& p,
                                  const MeasurementLocation& m1,
                                  const MeasurementLocation& m2,
                                  const SensorModel& s,
                                  const PredictionMode& mode) {
  return hbits(joint_unchecked(p, m1, m2, s, mode).table);
}

void validate_design_inputs(const GridPosterior& p, const SensorModel& s) {
  validate_posterior(p);
  validate_sensor(s);
}

// --- exhaustive pair selection ---------------------------------------------

// Batch engines compute every pair's joint entropy with vectorized or
// bit-count arithmetic whose roundoff can differ from the canonical loops
// by far less than this margin. Every pair within the margin of the batch
// maximum is re-evaluated canonically, so the final argmax always agrees
// with a plain exhaustive scan.
constexpr double kTieMargin = 1e-9;

struct CandidateSet {
  double best = -1.0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> items;
  std::vector<double> values;

  void add(double v, std::uint32_t i, std::uint32_t j) {
    if (v > best) best = v;
    if (v >= best - kTieMargin) {
      items.emplace_back(i, j);
      values.push_back(v);
      if (items.size() > 65536) prune();
    }
  }

  void prune() {
    std::size_t keep = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (values[k] >= best - kTieMargin) {
        items[keep] = items[k];
        values[keep] = values[k];
        ++keep;
      }
    }
    items.resize(keep);
    values.resize(keep);
  }

  // Lexicographically sorted (i, j) pairs within the margin of the max.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> finalize() {
    prune();
    std::sort(items.begin(), items.end());
    return std::move(items);
  }
};

// Mass-positive states compacted into kernel-friendly arrays.
struct Support {
  std::vector<double> cx, cy, r2, mass;
  bool uniform = false;  // all positive masses share one bit pattern
  double unit = 0.0;     // that common mass when uniform

  std::size_t size() const { return mass.size(); }
};

Support extract_support(const GridPosterior& p) {
  const StateGrid& g = *p.grid;
  Support s;
  s.cx.reserve(p.mass.size());
  s.cy.reserve(p.mass.size());
  s.r2.reserve(p.mass.size());
  s.mass.reserve(p.mass.size());
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] == 0.0) continue;
    s.cx.push_back(g.cx()[i]);
    s.cy.push_back(g.cy()[i]);
    s.r2.push_back(g.r2()[i]);
    s.mass.push_back(p.mass[i]);
  }
  s.uniform = !s.mass.empty();
  s.unit = s.mass.empty() ? 0.0 : s.mass.front();
  for (double v : s.mass) {
    if (v != s.unit) {
      s.uniform = false;
      break;
    }
  }
  return s;
}

inline double h4(double a, double b, double c, double d) {
  return hterm(a) + hterm(b) + hterm(c) + hterm(d);
}

// Uniform-support engine: each pair's outcome table is determined by hit
// counts, so joint entropies come from bitset intersections.
void scan_pairs_popcount(const Support& sup, const std::vector<double>& mx,
                         const std::vector<double>& my, CandidateSet& cands) {
  const std::size_t l = mx.size();
  const std::size_t n = sup.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(l * words, 0);
  std::vector<std::uint32_t> cnt(l, 0);
  for (std::size_t li = 0; li < l; ++li) {
    std::uint64_t* row = rows.data() + li * words;
    std::uint32_t c = 0;
    for (std::size_t si = 0; si < n; ++si) {
      const double dx = sup.cx[si] - mx[li];
      const double dy = sup.cy[si] - my[li];
      if (dx * dx + dy * dy <= sup.r2[si]) {
        row[si >> 6] |= 1ull << (si & 63);
        ++c;
      }
    }
    cnt[li] = c;
  }
  const double u = sup.unit;
  const double total_cnt = static_cast<double>(n);
  for (std::size_t i = 0; i < l; ++i) {
    const std::uint64_t* ri = rows.data() + i * words;
    for (std::size_t j = i; j < l; ++j) {
      const std::uint64_t* rj = rows.data() + j * words;
      std::uint64_t both = 0;
      for (std::size_t w = 0; w < words; ++w) {
        both += static_cast<std::uint64_t>(__builtin_popcountll(ri[w] & rj[w]));
      }
      const double cij = static_cast<double>(both);
      const double ci = static_cast<double>(cnt[i]);
      const double cj = static_cast<double>(cnt[j]);
      const double pa = cij * u;
      const double pb = (ci - cij) * u;
      const double pc = (cj - cij) * u;
      const double pd = (total_cnt - ci - cj + cij) * u;
      cands.add(h4(pa, pb, pc, pd), static_cast<std::uint32_t>(i),
                static_cast<std::uint32_t>(j));
    }
  }
}

// General ideal-sensor engine: tiled Gram products of mass-weighted
// indicator rows give each pair's both-white mass; marginal white masses
// and the total supply the other three cells.
void scan_pairs_gram(const Support& sup, const std::vector<double>& mx,
                     const std::vector<double>& my, CandidateSet& cands) {
  const std::size_t l = mx.size();
  const std::size_t n = sup.size();
  constexpr std::size_t kTile = 128;

  std::vector<double> ind_scratch(n), w_scratch(n);
  std::vector<double> white(l);
  for (std::size_t li = 0; li < l; ++li) {
    white[li] = kernels::circle_hit_rows(sup.cx.data(), sup.cy.data(),
                                         sup.r2.data(), sup.mass.data(), n,
                                         mx[li], my[li], ind_scratch.data(),
                                         w_scratch.data());
  }
  const double total = kernels::sum(sup.mass.data(), n);

  std::vector<double> a_ind(kTile * n), a_weighted(kTile * n);
  std::vector<double> b_ind(kTile * n);
  std::vector<const double*> a_rows(kTile), b_rows(kTile);
  std::vector<double> block(kTile * kTile);

  auto materialize = [&](std::size_t lo, std::size_t count, double* ind_buf,
                         double* weighted_buf) {
    for (std::size_t k = 0; k < count; ++k) {
      kernels::circle_hit_rows(sup.cx.data(), sup.cy.data(), sup.r2.data(),
                               sup.mass.data(), n, mx[lo + k], my[lo + k],
                               ind_buf + k * n,
                               weighted_buf ? weighted_buf + k * n
                                            : w_scratch.data());
    }
  };

  for (std::size_t ta = 0; ta < l; ta += kTile) {
    const std::size_t ca = std::min(kTile, l - ta);
    materialize(ta, ca, a_ind.data(), a_weighted.data());
    for (std::size_t k = 0; k < ca; ++k) a_rows[k] = a_weighted.data() + k * n;
    for (std::size_t tb = ta; tb < l; tb += kTile) {
      const std::size_t cb = std::min(kTile, l - tb);
      const double* ind_base = nullptr;
      if (tb == ta) {
        ind_base = a_ind.data();
      } else {
        materialize(tb, cb, b_ind.data(), nullptr);
        ind_base = b_ind.data();
      }
      for (std::size_t k = 0; k < cb; ++k) b_rows[k] = ind_base + k * n;
      kernels::gram_block(a_rows.data(), ca, b_rows.data(), cb, n,
                          block.data());
      for (std::size_t bi = 0; bi < ca; ++bi) {
        const std::size_t i = ta + bi;
        const std::size_t j0 = tb == ta ? bi : 0;  // lower triangle only
        for (std::size_t bj = j0; bj < cb; ++bj) {
          const std::size_t j = tb + bj;
          const double pa = std::max(0.0, block[bi * cb + bj]);
          const double pb = std::max(0.0, white[i] - pa);
          const double pc = std::max(0.0, white[j] - pa);
          const double pd = std::max(0.0, total - white[i] - white[j] + pa);
          cands.add(h4(pa, pb, pc, pd), static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(j));
        }
      }
    }
  }
}

// Batch engines only run for the exact-mode ideal sensor, so the
// canonical re-evaluation of the shortlisted pairs can work from the
// mass-positive states alone: each bin receives the same additions in
// the same ascending order the full canonical loop performs (zero-mass
// states never touch an accumulator), so every value is bitwise equal
// to joint_entropy_at on the same pair. A flat landscape can shortlist
// every pair, which makes the compact scan matter.
SelectedPair finish_from_candidates(
    const GridPosterior& p, const MapGrid& map,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cands) {
  const StateGrid& g = *p.grid;
  std::vector<CircleState> states;
  std::vector<double> mass;
  states.reserve(p.mass.size());
  mass.reserve(p.mass.size());
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] == 0.0) continue;
    states.push_back(g.state(i));
    mass.push_back(p.mass[i]);
  }
  double best = -1.0;
  std::size_t bi = 0, bj = 0;
  bool first = true;
  for (const auto& [i, j] : cands) {
    const MeasurementLocation m1 = map.location(i);
    const MeasurementLocation m2 = map.location(j);
    double t[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < states.size(); ++k) {
      const std::size_t b1 = contains(states[k], m1) ? 1 : 0;
      const std::size_t b2 = contains(states[k], m2) ? 1 : 0;
      t[b1 * 2 + b2] += mass[k];
    }
    double v = hterm(t[0]) + hterm(t[1]) + hterm(t[2]) + hterm(t[3]);
    if (v < 0.0) v = 0.0;
    if (first || v > best) {
      best = v;
      bi = i;
      bj = j;
      first = false;
    }
  }
  return SelectedPair{bi, bj, map.location(bi), map.location(bj)};
}

}  // namespace

MapGrid MapGrid::regular(const FieldBounds& field, std::size_t nx,
                         std::size_t ny) {
  validate_field(field);
  if (nx == 0 || ny == 0) {
    throw ValidationError("map grid dimensions must be >= 1");
  }
  MapGrid m;
  m.xs_.reserve(nx);
  const double dx = (field.x_max - field.x_min) / static_cast<double>(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    m.xs_.push_back(field.x_min + (static_cast<double>(i) + 0.5) * dx);
  }
  m.ys_.reserve(ny);
  const double dy = (field.y_max - field.y_min) / static_cast<double>(ny);
  for (std::size_t i = 0; i < ny; ++i) {
    m.ys_.push_back(field.y_min + (static_cast<double>(i) + 0.5) * dy);
  }
  return m;
}

MapGrid MapGrid::from_axes(std::vector<double> xs, std::vector<double> ys) {
  check_map_axis(xs, "x");
  check_map_axis(ys, "y");
  MapGrid m;
  m.xs_ = std::move(xs);
  m.ys_ = std::move(ys);
  return m;
}

std::size_t outcome_bin_count(const SensorModel& s) {
  return s.kind == SensorKind::ideal_point ? 2 : kDiskBins;
}

std::size_t outcome_bin(double predicted, const SensorModel& s) {
  if (s.kind == SensorKind::ideal_point) {
    return predicted >= 0.5 ? 1 : 0;
  }
  if (!(predicted > 0.0)) return 0;
  const std::size_t b =
      static_cast<std::size_t>(predicted * static_cast<double>(kDiskBins));
  return std::min(b, kDiskBins - 1);
}

OutcomeDistribution outcome_distribution(const GridPosterior& p,
                                         const MeasurementLocation& m,
                                         const SensorModel& s,
                                         const PredictionMode& mode) {
  validate_design_inputs(p, s);
  return outcome_unchecked(p, m, s, mode);
}

JointOutcomeDistribution joint_outcome_distribution(
    const GridPosterior& p, const MeasurementLocation& m1,
    const MeasurementLocation& m2, const SensorModel& s,
    const PredictionMode& mode) {
  validate_design_inputs(p, s);
  return joint_unchecked(p, m1, m2, s, mode);
}

double entropy_at(const GridPosterior& p, const MeasurementLocation& m,
                  const SensorModel& s, const PredictionMode& mode) {
  validate_design_inputs(p, s);
  return entropy_at_unchecked(p, m, s, mode);
}

double joint_entropy_at(const GridPosterior& p, const MeasurementLocation& m1,
                        const MeasurementLocation& m2, const SensorModel& s,
                        const PredictionMode& mode) {
  validate_design_inputs(p, s);
  return joint_entropy_at_unchecked(p, m1, m2, s, mode);
}

double mutual_information_at(const GridPosterior& p,
                             const MeasurementLocation& m1,
                             const MeasurementLocation& m2,
                             const SensorModel& s,
                             const PredictionMode& mode) {
  validate_design_inputs(p, s);
  const double mi = entropy_at_unchecked(p, m1, s, mode) +
                    entropy_at_unchecked(p, m2, s, mode) -
                    joint_entropy_at_unchecked(p, m1, m2, s, mode);
  return mi > 0.0 ? mi : 0.0;
}

EntropyMap entropy_map(const GridPosterior& p, const SensorModel& s,
                       const MapGrid& map, const PredictionMode& mode) {
  validate_design_inputs(p, s);
  EntropyMap out{map, std::vector<double>(map.size())};
  for (std::size_t i = 0; i < map.size(); ++i) {
    out.value[i] = entropy_at_unchecked(p, map.location(i), s, mode);
  }
  return out;
}

EntropyMap joint_entropy_map(const GridPosterior& p, const SensorModel& s,
                             const MeasurementLocation& m1_fixed,
                             const MapGrid& map, const PredictionMode& mode) {
  validate_design_inputs(p, s);
  EntropyMap out{map, std::vector<double>(map.size())};
  for (std::size_t i = 0; i < map.size(); ++i) {
    out.value[i] =
        joint_entropy_at_unchecked(p, m1_fixed, map.location(i), s, mode);
  }
  return out;
}

EntropyMap mutual_information_map(const GridPosterior& p,
                                  const SensorModel& s,
                                  const MeasurementLocation& m1_fixed,
                                  const MapGrid& map,
                                  const PredictionMode& mode) {
  validate_design_inputs(p, s);
  EntropyMap out{map, std::vector<double>(map.size())};
  const double h1 = entropy_at_unchecked(p, m1_fixed, s, mode);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const MeasurementLocation m = map.location(i);
    const double mi = h1 + entropy_at_unchecked(p, m, s, mode) -
                      joint_entropy_at_unchecked(p, m1_fixed, m, s, mode);
    out.value[i] = mi > 0.0 ? mi : 0.0;
  }
  return out;
}

SelectedPair select_independent(const GridPosterior& p, const SensorModel& s,
                                const MapGrid& map,
                                const PredictionMode& mode) {
  const EntropyMap em = entropy_map(p, s, map, mode);
  std::size_t i1 = 0;
  for (std::size_t i = 1; i < em.value.size(); ++i) {
    if (em.value[i] > em.value[i1]) i1 = i;
  }
  std::size_t i2 = i1;
  for (std::size_t i = 0; i < em.value.size(); ++i) {
    if (i != i1 && em.value[i] == em.value[i1]) {
      i2 = i;
      break;
    }
  }
  return SelectedPair{i1, i2, map.location(i1), map.location(i2)};
}

SelectedPair select_sequential_greedy(const GridPosterior& p,
                                      const SensorModel& s,
                                      const MapGrid& map,
                                      const PredictionMode& mode) {
  validate_design_inputs(p, s);
  std::size_t i1 = 0;
  double h1 = -1.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double v = entropy_at_unchecked(p, map.location(i), s, mode);
    if (v > h1) {
      h1 = v;
      i1 = i;
    }
  }
  const MeasurementLocation e1 = map.location(i1);
  std::size_t i2 = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const double v = joint_entropy_at_unchecked(p, e1, map.location(i), s,
                                                mode);
    if (v > best) {
      best = v;
      i2 = i;
    }
  }
  return SelectedPair{i1, i2, e1, map.location(i2)};
}

SelectedPair select_joint_exhaustive(const GridPosterior& p,
                                     const SensorModel& s, const MapGrid& map,
                                     const PredictionMode& mode) {
  validate_design_inputs(p, s);
  const std::size_t l = map.size();

  // Joint entropy is symmetric, so scanning i <= j and reporting (i, j)
  // also yields the lexicographically first maximizer over ordered pairs.
  const bool batch_ok =
      s.kind == SensorKind::ideal_point && !mode.is_sampled() && l >= 2;
  if (batch_ok) {
    Support sup = extract_support(p);
    std::vector<double> mx(l), my(l);
    for (std::size_t i = 0; i < l; ++i) {
      const MeasurementLocation m = map.location(i);
      mx[i] = m.x;
      my[i] = m.y;
    }
    CandidateSet cands;
    if (sup.uniform) {
      scan_pairs_popcount(sup, mx, my, cands);
    } else {
      scan_pairs_gram(sup, mx, my, cands);
    }
    return finish_from_candidates(p, map, cands.finalize());
  }

  double best = -1.0;
  std::size_t bi = 0, bj = 0;
  bool first = true;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i; j < l; ++j) {
      const double v = joint_entropy_at_unchecked(p, map.location(i),
                                                  map.location(j), s, mode);
      if (first || v > best) {
        best = v;
        bi = i;
        bj = j;
        first = false;
      }
    }
  }
  return SelectedPair{bi, bj, map.location(bi), map.location(bj)};
}

SelectedPair hill_climb_pair_search(const GridPosterior& p,
                                    const SensorModel& s, const MapGrid& map,
                                    const PredictionMode& mode,
                                    std::size_t restarts,
                                    std::uint64_t seed) {
  validate_design_inputs(p, s);
  if (restarts == 0) {
    throw ValidationError("hill climb needs restarts >= 1");
  }
  const std::size_t l = map.size();
  const std::size_t nx = map.nx();

  std::unordered_map<std::uint64_t, double> memo;
  auto eval = [&](std::size_t i, std::size_t j) {
    const std::uint64_t lo = std::min(i, j);
    const std::uint64_t hi = std::max(i, j);
    const std::uint64_t key = (lo << 32) | hi;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const double v = joint_entropy_at_unchecked(p, map.location(lo),
                                                map.location(hi), s, mode);
    memo.emplace(key, v);
    return v;
  };

  // Moore neighborhood: one endpoint steps to one of its 8 lattice
  // neighbors per move.
  static constexpr int kOffsets[8][2] = {{-1, -1}, {0, -1}, {1, -1},
                                         {-1, 0},  {1, 0},  {-1, 1},
                                         {0, 1},   {1, 1}};

  Rng rng(seed);
  double best_val = -1.0;
  std::size_t best_i = 0, best_j = 0;
  bool have_best = false;

  for (std::size_t r = 0; r < restarts; ++r) {
    std::size_t i = rng.next_index(l);
    std::size_t j = rng.next_index(l);
    double cur = eval(i, j);
    for (;;) {
      double move_val = cur;
      std::size_t move_i = i, move_j = j;
      bool moved = false;
      for (int endpoint = 0; endpoint < 2; ++endpoint) {
        const std::size_t base = endpoint == 0 ? i : j;
        const std::size_t bx = base % nx;
        const std::size_t by = base / nx;
        for (const auto& off : kOffsets) {
          const std::ptrdiff_t cx = static_cast<std::ptrdiff_t>(bx) + off[0];
          const std::ptrdiff_t cy = static_cast<std::ptrdiff_t>(by) + off[1];
          if (cx < 0 || cy < 0 ||
              cx >= static_cast<std::ptrdiff_t>(nx) ||
              cy >= static_cast<std::ptrdiff_t>(map.ny())) {
            continue;
          }
          const std::size_t cand = static_cast<std::size_t>(cy) * nx +
                                   static_cast<std::size_t>(cx);
          const std::size_t ci = endpoint == 0 ? cand : i;
          const std::size_t cj = endpoint == 0 ? j : cand;
          const double v = eval(ci, cj);
          if (v > move_val) {
            move_val = v;
            move_i = ci;
            move_j = cj;
            moved = true;
          }
        }
      }
      if (!moved) break;
      i = move_i;
      j = move_j;
      cur = move_val;
    }
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    if (!have_best || cur > best_val ||
        (cur == best_val &&
         std::make_pair(lo, hi) < std::make_pair(best_i, best_j))) {
      best_val = cur;
      best_i = lo;
      best_j = hi;
      have_best = true;
    }
  }
  return SelectedPair{best_i, best_j, map.location(best_i),
                      map.location(best_j)};
}

void write_map_csv(const EntropyMap& map, std::ostream& out) {
  out << "x,y,value\n";
  char buf[128];
  for (std::size_t i = 0; i < map.value.size(); ++i) {
    const MeasurementLocation m = map.grid.location(i);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", m.x, m.y,
                  map.value[i]);
    out << buf;
  }
}

void write_map_pgm(const EntropyMap& map, std::ostream& out) {
  const std::size_t nx = map.grid.nx();
  const std::size_t ny = map.grid.ny();
  double maxv = 0.0;
  for (double v : map.value) maxv = std::max(maxv, v);
  out << "P5\n" << nx << " " << ny << "\n255\n";
  std::vector<char> row(nx);
  for (std::size_t iy = ny; iy-- > 0;) {  // top row first = max y
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double v = map.value[iy * nx + ix];
      long byte = maxv > 0.0 ? std::lround(255.0 * v / maxv) : 0;
      byte = std::min(255l, std::max(0l, byte));
      row[ix] = static_cast<char>(static_cast<unsigned char>(byte));
    }
    out.write(row.data(), static_cast<std::streamsize>(nx));
  }
}

}  // namespace inquest
