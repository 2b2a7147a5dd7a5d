#include "inquest/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

#include "inquest/errors.hpp"
#include "inquest/kernels.hpp"

namespace inquest {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) {
    throw ValidationError(std::string("grid axis ") + name + " is empty");
  }
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw ValidationError(std::string("grid axis ") + name +
                            " must be strictly increasing");
    }
  }
}

// Censored-Gaussian likelihood of an observed intensity given the
// noiseless prediction: Gaussian density inside (0, 1), cumulative lumps
// at the clamped boundaries, indicator when sigma is 0.
double disk_likelihood(double obs, double pred, double sigma) {
  if (sigma == 0.0) {
    return std::abs(obs - pred) <= 1e-12 ? 1.0 : 0.0;
  }
  auto cdf = [](double z) { return 0.5 * std::erfc(-z / kSqrt2); };
  if (obs <= 0.0) {
    return cdf((0.0 - pred) / sigma);
  }
  if (obs >= 1.0) {
    return 1.0 - cdf((1.0 - pred) / sigma);
  }
  const double z = (obs - pred) / sigma;
  return kInvSqrt2Pi * std::exp(-0.5 * z * z) / sigma;
}

}  // namespace

StateGrid StateGrid::regular(const FieldBounds& field, std::size_t nx,
                             std::size_t ny, std::size_t nr, double r_min,
                             double r_max) {
  validate_field(field);
  if (nx == 0 || ny == 0 || nr == 0) {
    throw ValidationError("state grid dimensions must all be >= 1");
  }
  if (!(r_min > 0.0)) {
    throw ValidationError("state grid r_min must be positive");
  }
  if (nr > 1 && !(r_max > r_min)) {
    throw ValidationError("state grid needs r_max > r_min when nr > 1");
  }
  StateGrid g;
  g.xs_.reserve(nx);
  const double dx = (field.x_max - field.x_min) / static_cast<double>(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    g.xs_.push_back(field.x_min + (static_cast<double>(i) + 0.5) * dx);
  }
  g.ys_.reserve(ny);
  const double dy = (field.y_max - field.y_min) / static_cast<double>(ny);
  for (std::size_t i = 0; i < ny; ++i) {
    g.ys_.push_back(field.y_min + (static_cast<double>(i) + 0.5) * dy);
  }
  g.rs_.reserve(nr);
  if (nr == 1) {
    g.rs_.push_back(r_min);
  } else {
    const double dr = (r_max - r_min) / static_cast<double>(nr - 1);
    for (std::size_t i = 0; i < nr; ++i) {
      g.rs_.push_back(i + 1 == nr ? r_max
                                  : r_min + static_cast<double>(i) * dr);
    }
  }
  g.build_flat();
  return g;
}

StateGrid StateGrid::from_axes(std::vector<double> xs, std::vector<double> ys,
                               std::vector<double> rs) {
  check_axis(xs, "x");
  check_axis(ys, "y");
  check_axis(rs, "r");
  if (!(rs.front() > 0.0)) {
    throw ValidationError("grid radii must all be positive");
  }
  StateGrid g;
  g.xs_ = std::move(xs);
  g.ys_ = std::move(ys);
  g.rs_ = std::move(rs);
  g.build_flat();
  return g;
}

void StateGrid::build_flat() {
  const std::size_t n = xs_.size() * ys_.size() * rs_.size();
  cx_.reserve(n);
  cy_.reserve(n);
  r_.reserve(n);
  r2_.reserve(n);
  for (double x : xs_) {
    for (double y : ys_) {
      for (double r : rs_) {
        cx_.push_back(x);
        cy_.push_back(y);
        r_.push_back(r);
        r2_.push_back(r * r);
      }
    }
  }
}

void validate_grid_in_field(const StateGrid& grid, const FieldBounds& f) {
  validate_field(f);
  for (double x : grid.xs()) {
    if (x < f.x_min || x > f.x_max) {
      throw ValidationError("grid x-center " + std::to_string(x) +
                            " outside field bounds");
    }
  }
  for (double y : grid.ys()) {
    if (y < f.y_min || y > f.y_max) {
      throw ValidationError("grid y-center " + std::to_string(y) +
                            " outside field bounds");
    }
  }
}

void validate_posterior(const GridPosterior& p) {
  if (!p.grid) {
    throw ValidationError("posterior has no grid");
  }
  if (p.mass.size() != p.grid->size()) {
    throw ValidationError("posterior mass count " +
                          std::to_string(p.mass.size()) +
                          " does not match grid size " +
                          std::to_string(p.grid->size()));
  }
  double sum = 0.0;
  for (double v : p.mass) {
    if (!(v >= 0.0)) {
      throw ValidationError("posterior mass is negative or NaN");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("posterior mass sums to " + std::to_string(sum) +
                          ", expected 1");
  }
}

GridPosterior init_prior(std::shared_ptr<const StateGrid> grid) {
  if (!grid || grid->size() == 0) {
    throw ValidationError("prior needs a non-empty grid");
  }
  GridPosterior p;
  p.mass.assign(grid->size(), 1.0 / static_cast<double>(grid->size()));
  p.grid = std::move(grid);
  return p;
}

GridPosterior bayes_update(const GridPosterior& p,
                           const MeasurementLocation& m, double obs,
                           const SensorModel& s) {
  validate_posterior(p);
  validate_sensor(s);
  const StateGrid& g = *p.grid;
  const std::size_t n = p.mass.size();
  GridPosterior out{p.grid, p.mass};

  if (s.kind == SensorKind::ideal_point) {
    const bool obs_white = obs >= 0.5;
    const double eps = s.flip_probability;
    const double l_contain = obs_white ? 1.0 - eps : eps;
    const double l_outside = obs_white ? eps : 1.0 - eps;
    std::vector<double> ind(n), scratch(n);
    kernels::circle_hit_rows(g.cx(), g.cy(), g.r2(), p.mass.data(), n, m.x,
                             m.y, ind.data(), scratch.data());
    kernels::blend_scale(out.mass.data(), ind.data(), n, l_outside,
                         l_contain);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double pred = predict(g.state(i), m, s);
      out.mass[i] *= disk_likelihood(obs, pred, s.noise_sigma);
    }
  }

  const double evidence = kernels::sum(out.mass.data(), n);
  if (!(evidence > 0.0)) {
    throw ContradictionError(
        "observation has zero evidence under every hypothesis");
  }
  for (std::size_t i = 0; i < n; ++i) out.mass[i] /= evidence;
  return out;
}

double posterior_entropy(const GridPosterior& p) {
  double h = 0.0;
  for (double v : p.mass) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h < 0.0 ? 0.0 : h;
}

std::vector<std::size_t> draw_sample_indices(const GridPosterior& p,
                                             std::size_t n, Rng& rng) {
  if (n == 0) {
    throw ValidationError("sample count must be >= 1");
  }
  validate_posterior(p);
  std::vector<double> cum(p.mass.size());
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    acc += p.mass[i];
    cum[i] = acc;
    if (p.mass[i] > 0.0) last_positive = i;
  }
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = rng.next_double() * acc;
    std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (idx > last_positive) idx = last_positive;
    out.push_back(idx);
  }
  return out;
}

std::vector<CircleState> draw_samples(const GridPosterior& p, std::size_t n,
                                      Rng& rng) {
  std::vector<CircleState> out;
  out.reserve(n);
  for (std::size_t idx : draw_sample_indices(p, n, rng)) {
    out.push_back(p.grid->state(idx));
  }
  return out;
}

std::size_t map_estimate_index(const GridPosterior& p) {
  validate_posterior(p);
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.mass.size(); ++i) {
    if (p.mass[i] > p.mass[best]) best = i;
  }
  return best;
}

CircleState map_estimate(const GridPosterior& p) {
  return p.grid->state(map_estimate_index(p));
}

void write_posterior_csv(const GridPosterior& p, std::ostream& out) {
  out << "x_o,y_o,r_o,mass\n";
  char buf[160];
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const CircleState c = p.grid->state(i);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", c.x, c.y,
                  c.r, p.mass[i]);
    out << buf;
  }
}

}  // namespace inquest
