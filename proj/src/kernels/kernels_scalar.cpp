#include "inquest/kernels.hpp"

namespace inquest::kernels::scalar {

double sum(const double* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i];
  return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scale(double* v, std::size_t n, double s) {
  for (std::size_t i = 0; i < n; ++i) v[i] *= s;
}

void blend_scale(double* m, const double* ind, std::size_t n,
                 double l0, double l1) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] *= ind[i] != 0.0 ? l1 : l0;
  }
}

double circle_hit_rows(const double* cx, const double* cy, const double* r2,
                       const double* mass, std::size_t n,
                       double mx, double my, double* ind, double* weighted) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = cx[i] - mx;
    const double dy = cy[i] - my;
    const bool hit = dx * dx + dy * dy <= r2[i];
    ind[i] = hit ? 1.0 : 0.0;
    weighted[i] = hit ? mass[i] : 0.0;
    acc += weighted[i];
  }
  return acc;
}

void gram_block(const double* const* rows_a, std::size_t rows,
                const double* const* rows_b, std::size_t cols,
                std::size_t n, double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* a = rows_a[i];
    for (std::size_t j = 0; j < cols; ++j) {
      out[i * cols + j] = dot(a, rows_b[j], n);
    }
  }
}

}  // namespace inquest::kernels::scalar
