#pragma once

// Predicted-outcome distributions, entropy / joint-entropy / mutual-
// information maps over candidate measurement locations, and measurement
// pair selection by maximum joint entropy.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "inquest/inference.hpp"
#include "inquest/world.hpp"

namespace inquest {

// Candidate measurement locations: a cell-centered lattice over the
// field. Location index (ix, iy) flattens to iy * nx + ix.
class MapGrid {
 public:
  static MapGrid regular(const FieldBounds& field, std::size_t nx,
                         std::size_t ny);
  static MapGrid from_axes(std::vector<double> xs, std::vector<double> ys);

  std::size_t size() const { return xs_.size() * ys_.size(); }
  std::size_t nx() const { return xs_.size(); }
  std::size_t ny() const { return ys_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

  std::size_t index_of(std::size_t ix, std::size_t iy) const {
    return iy * xs_.size() + ix;
  }
  MeasurementLocation location(std::size_t idx) const {
    return MeasurementLocation{xs_[idx % xs_.size()], ys_[idx / xs_.size()]};
  }

 private:
  MapGrid() = default;
  std::vector<double> xs_, ys_;
};

// How predicted-outcome distributions are formed: exact posterior-weighted
// binning over all grid states, or a histogram of n posterior samples.
struct PredictionMode {
  enum class Kind { exact, sampled };
  Kind kind = Kind::exact;
  std::size_t samples = 45;
  std::uint64_t seed = 0;

  static PredictionMode exact() { return PredictionMode{}; }
  static PredictionMode sampled(std::size_t n, std::uint64_t seed) {
    return PredictionMode{Kind::sampled, n, seed};
  }
  bool is_sampled() const { return kind == Kind::sampled; }
};

// Number of histogram bins per location: 2 for the ideal sensor
// (black, white), 16 uniform bins over [0, 1] for the disk sensor.
inline constexpr std::size_t kDiskBins = 16;
std::size_t outcome_bin_count(const SensorModel& s);
std::size_t outcome_bin(double predicted, const SensorModel& s);

// Probabilities over predicted-intensity bins at one location.
struct OutcomeDistribution {
  std::vector<double> bins;
};

// Probabilities over bin pairs for two locations; table[i * bins2 + j] is
// the probability of (bin i at m1, bin j at m2). For the ideal sensor the
// four entries are Pr(both white), Pr(white, black), Pr(black, white),
// Pr(both black) reading the white bin as index 1.
struct JointOutcomeDistribution {
  std::size_t bins1 = 0;
  std::size_t bins2 = 0;
  std::vector<double> table;

  double at(std::size_t i, std::size_t j) const {
    return table[i * bins2 + j];
  }
};

// Per-location values (bits) over a MapGrid, indexed like the grid.
struct EntropyMap {
  MapGrid grid;
  std::vector<double> value;
};

OutcomeDistribution outcome_distribution(const GridPosterior& p,
                                         const MeasurementLocation& m,
                                         const SensorModel& s,
                                         const PredictionMode& mode);
JointOutcomeDistribution joint_outcome_distribution(
    const GridPosterior& p, const MeasurementLocation& m1,
    const MeasurementLocation& m2, const SensorModel& s,
    const PredictionMode& mode);

double entropy_at(const GridPosterior& p, const MeasurementLocation& m,
                  const SensorModel& s, const PredictionMode& mode);
double joint_entropy_at(const GridPosterior& p, const MeasurementLocation& m1,
                        const MeasurementLocation& m2, const SensorModel& s,
                        const PredictionMode& mode);
// H(m1) + H(m2) - H(m1, m2), clamped at 0 to absorb floating-point
// cancellation.
double mutual_information_at(const GridPosterior& p,
                             const MeasurementLocation& m1,
                             const MeasurementLocation& m2,
                             const SensorModel& s, const PredictionMode& mode);

EntropyMap entropy_map(const GridPosterior& p, const SensorModel& s,
                       const MapGrid& map, const PredictionMode& mode);
// joint_entropy_at(m1_fixed, m) for every map location m.
EntropyMap joint_entropy_map(const GridPosterior& p, const SensorModel& s,
                             const MeasurementLocation& m1_fixed,
                             const MapGrid& map, const PredictionMode& mode);
// mutual_information_at(m1_fixed, m) for every map location m.
EntropyMap mutual_information_map(const GridPosterior& p,
                                  const SensorModel& s,
                                  const MeasurementLocation& m1_fixed,
                                  const MapGrid& map,
                                  const PredictionMode& mode);

// A selected measurement pair; i1/i2 index the map grid.
struct SelectedPair {
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  MeasurementLocation m1;
  MeasurementLocation m2;
};

// Baseline: both agents take the argmax of the single-location entropy
// map. Unique peak: both pick it. Ties: lowest map index for agent 1,
// second-lowest tied index (if any) for agent 2.
SelectedPair select_independent(const GridPosterior& p, const SensorModel& s,
                                const MapGrid& map,
                                const PredictionMode& mode);

// E1 = entropy-map argmax (lowest index on ties); E2 = argmax over the
// map of joint_entropy_at(E1, .), lowest index on ties.
SelectedPair select_sequential_greedy(const GridPosterior& p,
                                      const SensorModel& s,
                                      const MapGrid& map,
                                      const PredictionMode& mode);

// Argmax of joint_entropy_at over all ordered location pairs;
// lexicographic (i1, i2) tie-breaking.
SelectedPair select_joint_exhaustive(const GridPosterior& p,
                                     const SensorModel& s, const MapGrid& map,
                                     const PredictionMode& mode);

// Multi-start steepest-ascent search over the pair space: each move
// shifts one endpoint to one of its 8 lattice neighbors (both coordinate
// steps and diagonals); restarts start from seeded random pairs.
// Deterministic given seed. restarts >= 1 or ValidationError.
SelectedPair hill_climb_pair_search(const GridPosterior& p,
                                    const SensorModel& s, const MapGrid& map,
                                    const PredictionMode& mode,
                                    std::size_t restarts, std::uint64_t seed);

// CSV: header x,y,value, one row per location in map-index order.
void write_map_csv(const EntropyMap& map, std::ostream& out);
// 8-bit binary PGM (P5), each byte round(255 * value / max-over-map)
// (all zeros when the max is 0), rows written top row = max y.
void write_map_pgm(const EntropyMap& map, std::ostream& out);

}  // namespace inquest
