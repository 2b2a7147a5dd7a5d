#include "inquest/kernels.hpp"

#include "inquest/errors.hpp"
#include "kernels_internal.hpp"

namespace inquest::kernels {

namespace {

Backend detect_best() {
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

Backend& backend_slot() {
  static Backend b = detect_best();
  return b;
}

}  // namespace

bool avx2_available() {
#if defined(INQUEST_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return backend_slot(); }

std::string backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) {
    throw ValidationError("avx2 backend requested but not available");
  }
  backend_slot() = b;
}

double sum(const double* v, std::size_t n) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::sum(v, n);
#endif
  return scalar::sum(v, n);
}

double dot(const double* a, const double* b, std::size_t n) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::dot(a, b, n);
#endif
  return scalar::dot(a, b, n);
}

void scale(double* v, std::size_t n, double s) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    avx2::scale(v, n, s);
    return;
  }
#endif
  scalar::scale(v, n, s);
}

void blend_scale(double* m, const double* ind, std::size_t n,
                 double l0, double l1) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    avx2::blend_scale(m, ind, n, l0, l1);
    return;
  }
#endif
  scalar::blend_scale(m, ind, n, l0, l1);
}

double circle_hit_rows(const double* cx, const double* cy, const double* r2,
                       const double* mass, std::size_t n,
                       double mx, double my, double* ind, double* weighted) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    return avx2::circle_hit_rows(cx, cy, r2, mass, n, mx, my, ind, weighted);
  }
#endif
  return scalar::circle_hit_rows(cx, cy, r2, mass, n, mx, my, ind, weighted);
}

void gram_block(const double* const* rows_a, std::size_t rows,
                const double* const* rows_b, std::size_t cols,
                std::size_t n, double* out) {
#if defined(INQUEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    avx2::gram_block(rows_a, rows, rows_b, cols, n, out);
    return;
  }
#endif
  scalar::gram_block(rows_a, rows, rows_b, cols, n, out);
}

}  // namespace inquest::kernels
