#include "inquest/world.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "inquest/errors.hpp"

namespace inquest {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

void validate_field(const FieldBounds& f) {
  if (!(f.x_min < f.x_max) || !(f.y_min < f.y_max)) {
    throw ValidationError("field bounds must satisfy x_min < x_max and "
                          "y_min < y_max");
  }
}

void validate_circle(const CircleState& c, const FieldBounds& f) {
  if (!(c.r > 0.0)) {
    throw ValidationError("circle radius must be positive, got " +
                          std::to_string(c.r));
  }
  if (!f.contains(c.x, c.y)) {
    throw ValidationError("circle center (" + std::to_string(c.x) + ", " +
                          std::to_string(c.y) + ") outside field bounds");
  }
}

void validate_location(const MeasurementLocation& m, const FieldBounds& f) {
  if (!f.contains(m.x, m.y)) {
    throw ValidationError("measurement location (" + std::to_string(m.x) +
                          ", " + std::to_string(m.y) +
                          ") outside field bounds");
  }
}

void validate_sensor(const SensorModel& s) {
  if (s.kind == SensorKind::ideal_point) {
    if (!(s.flip_probability >= 0.0 && s.flip_probability < 0.5)) {
      throw ValidationError("ideal sensor flip probability must be in "
                            "[0, 0.5), got " +
                            std::to_string(s.flip_probability));
    }
  } else {
    if (!(s.footprint_radius > 0.0)) {
      throw ValidationError("disk sensor footprint radius must be positive");
    }
    if (!(s.noise_sigma >= 0.0)) {
      throw ValidationError("disk sensor noise sigma must be >= 0");
    }
  }
}

bool contains(const CircleState& c, const MeasurementLocation& m) {
  const double dx = m.x - c.x;
  const double dy = m.y - c.y;
  return dx * dx + dy * dy <= c.r * c.r;
}

double circle_overlap_area(double d, double r1, double r2) {
  if (d >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return kPi * rmin * rmin;
  // Lens area: two circular segments joined at the chord.
  const double d2 = d * d;
  const double a1 = std::acos(
      std::clamp((d2 + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0));
  const double a2 = std::acos(
      std::clamp((d2 + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0));
  // Grouped so the value is bitwise-symmetric in (r1, r2): each pair of
  // factors commutes, and the sum/difference building blocks are shared.
  const double rsum = r1 + r2;
  const double rdiff = r1 - r2;
  const double k = ((rsum - d) * (rsum + d)) * ((d + rdiff) * (d - rdiff));
  return r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * std::sqrt(std::max(0.0, k));
}

double predict(const CircleState& c, const MeasurementLocation& m,
               const SensorModel& s) {
  if (s.kind == SensorKind::ideal_point) {
    return contains(c, m) ? 1.0 : 0.0;
  }
  const double dx = m.x - c.x;
  const double dy = m.y - c.y;
  const double d = std::sqrt(dx * dx + dy * dy);
  const double fp = s.footprint_radius;
  const double overlap = circle_overlap_area(d, fp, c.r);
  return clamp01(overlap / (kPi * fp * fp));
}

double simulate_measurement(const CircleState& truth,
                            const MeasurementLocation& m,
                            const SensorModel& s, Rng& rng) {
  const double v = predict(truth, m, s);
  if (s.kind == SensorKind::ideal_point) {
    const bool flip = rng.next_double() < s.flip_probability;
    return flip ? 1.0 - v : v;
  }
  return clamp01(v + s.noise_sigma * rng.next_gaussian());
}

}  // namespace inquest
