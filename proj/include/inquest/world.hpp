#pragma once

// The hidden circle, sensor models, and ground-truth measurement
// simulation.

#include <cstdint>

#include "inquest/rng.hpp"

namespace inquest {

// Axis-aligned rectangular field all circles and measurements live in.
struct FieldBounds {
  double x_min = 0.0;
  double x_max = 100.0;
  double y_min = 0.0;
  double y_max = 100.0;

  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
};

// Throws ValidationError when min >= max on either axis.
void validate_field(const FieldBounds& f);

// One hypothesis (or the ground truth) for the hidden circle.
struct CircleState {
  double x = 0.0;
  double y = 0.0;
  double r = 1.0;
};

// Throws ValidationError when r <= 0 or the center lies outside the field.
void validate_circle(const CircleState& c, const FieldBounds& f);

// A candidate sensing point on the field.
struct MeasurementLocation {
  double x = 0.0;
  double y = 0.0;
};

void validate_location(const MeasurementLocation& m, const FieldBounds& f);

enum class SensorKind { ideal_point, disk_footprint };

// ideal_point: binary black/white reading of the point under the sensor,
// corrupted by flipping with probability flip_probability.
// disk_footprint: continuous intensity equal to the fraction of a disk of
// footprint_radius overlapped by the circle, corrupted by additive
// Gaussian noise with noise_sigma, clamped to [0, 1].
struct SensorModel {
  SensorKind kind = SensorKind::ideal_point;
  double flip_probability = 0.02;  // ideal: in [0, 0.5)
  double footprint_radius = 1.0;   // disk: > 0
  double noise_sigma = 0.05;       // disk: >= 0
};

void validate_sensor(const SensorModel& s);

// True iff the location lies inside or on the circle:
// (x_e - x_o)^2 + (y_e - y_o)^2 <= r_o^2.
bool contains(const CircleState& c, const MeasurementLocation& m);

// Area of the intersection of two circles with radii r1, r2 whose centers
// are d apart (exact lens formula; handles disjoint and contained cases).
double circle_overlap_area(double d, double r1, double r2);

// Noiseless predicted intensity in [0, 1].
// ideal: contains ? 1.0 : 0.0.
// disk: overlap area of the footprint disk at m with the circle, divided
// by the footprint area.
double predict(const CircleState& c, const MeasurementLocation& m,
               const SensorModel& s);

// Simulated noisy reading against ground truth; deterministic given the
// rng state. ideal: predict flipped with probability flip_probability.
// disk: predict + Gaussian(0, noise_sigma), clamped to [0, 1].
double simulate_measurement(const CircleState& truth,
                            const MeasurementLocation& m,
                            const SensorModel& s, Rng& rng);

}  // namespace inquest
