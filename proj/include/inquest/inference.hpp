#pragma once

// Bayesian posterior over a finite grid of circle hypotheses.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "inquest/rng.hpp"
#include "inquest/world.hpp"

namespace inquest {

// Cartesian product of x-centers, y-centers, and radii. State index
// (ix, iy, ir) flattens to (ix * ny + iy) * nr + ir. Flat per-state
// coordinate arrays are kept alongside the axes for kernel-friendly
// iteration.
class StateGrid {
 public:
  // Cell-centered nx x ny lattice over the field, radii evenly spaced
  // from r_min to r_max inclusive (nr == 1 uses r_min).
  static StateGrid regular(const FieldBounds& field, std::size_t nx,
                           std::size_t ny, std::size_t nr, double r_min,
                           double r_max);
  // Explicit axes; each must be non-empty and strictly increasing, radii
  // positive. Throws ValidationError otherwise.
  static StateGrid from_axes(std::vector<double> xs, std::vector<double> ys,
                             std::vector<double> rs);

  std::size_t size() const { return cx_.size(); }
  std::size_t nx() const { return xs_.size(); }
  std::size_t ny() const { return ys_.size(); }
  std::size_t nr() const { return rs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  const std::vector<double>& rs() const { return rs_; }

  std::size_t index_of(std::size_t ix, std::size_t iy, std::size_t ir) const {
    return (ix * ys_.size() + iy) * rs_.size() + ir;
  }
  CircleState state(std::size_t idx) const {
    return CircleState{cx_[idx], cy_[idx], r_[idx]};
  }

  const double* cx() const { return cx_.data(); }
  const double* cy() const { return cy_.data(); }
  const double* r() const { return r_.data(); }
  const double* r2() const { return r2_.data(); }

 private:
  StateGrid() = default;
  void build_flat();

  std::vector<double> xs_, ys_, rs_;
  std::vector<double> cx_, cy_, r_, r2_;
};

// Throws ValidationError when any grid state violates circle invariants
// for the given field.
void validate_grid_in_field(const StateGrid& grid, const FieldBounds& f);

// Normalized probability mass over the grid states. Immutable snapshot:
// updates produce new values sharing the grid.
struct GridPosterior {
  std::shared_ptr<const StateGrid> grid;
  std::vector<double> mass;

  std::size_t size() const { return mass.size(); }
};

// Throws ValidationError on negative mass, size mismatch, or mass sum
// outside 1 +/- 1e-9.
void validate_posterior(const GridPosterior& p);

// Uniform mass 1/N over all N states.
GridPosterior init_prior(std::shared_ptr<const StateGrid> grid);

// Multiplies each state's mass by the likelihood of obs at m under the
// sensor model, then renormalizes. Ideal sensor: obs is binarized at 0.5;
// likelihood 1 - eps on match, eps on mismatch. Disk sensor: censored
// Gaussian around the state's predicted intensity (density inside (0,1),
// cumulative lumps at the 0/1 boundaries; sigma == 0 degenerates to an
// indicator with 1e-12 tolerance). Throws ContradictionError when the
// total evidence is zero.
GridPosterior bayes_update(const GridPosterior& p,
                           const MeasurementLocation& m, double obs,
                           const SensorModel& s);

// Entropy of the mass vector, in bits.
double posterior_entropy(const GridPosterior& p);

// n independent draws proportional to mass; deterministic given rng.
std::vector<CircleState> draw_samples(const GridPosterior& p, std::size_t n,
                                      Rng& rng);
std::vector<std::size_t> draw_sample_indices(const GridPosterior& p,
                                             std::size_t n, Rng& rng);

// State of maximal mass; ties broken by lowest grid index.
std::size_t map_estimate_index(const GridPosterior& p);
CircleState map_estimate(const GridPosterior& p);

// CSV snapshot: header x_o,y_o,r_o,mass, one row per state in grid order.
void write_posterior_csv(const GridPosterior& p, std::ostream& out);

}  // namespace inquest
