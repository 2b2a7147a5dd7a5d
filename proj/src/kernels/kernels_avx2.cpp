#if defined(INQUEST_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace inquest::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double sum(const double* v, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(v + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(v + i + 4));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += v[i];
  return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scale(double* v, std::size_t n, double s) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), vs));
  }
  for (; i < n; ++i) v[i] *= s;
}

void blend_scale(double* m, const double* ind, std::size_t n,
                 double l0, double l1) {
  const __m256d v0 = _mm256_set1_pd(l0);
  const __m256d v1 = _mm256_set1_pd(l1);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vi = _mm256_loadu_pd(ind + i);
    const __m256d mask = _mm256_cmp_pd(vi, zero, _CMP_NEQ_OQ);
    const __m256d factor = _mm256_blendv_pd(v0, v1, mask);
    _mm256_storeu_pd(m + i, _mm256_mul_pd(_mm256_loadu_pd(m + i), factor));
  }
  for (; i < n; ++i) m[i] *= ind[i] != 0.0 ? l1 : l0;
}

double circle_hit_rows(const double* cx, const double* cy, const double* r2,
                       const double* mass, std::size_t n,
                       double mx, double my, double* ind, double* weighted) {
  // The squared distance is computed as mul, mul, add (no FMA) so the
  // boundary comparison matches the scalar kernel bit for bit.
  const __m256d vmx = _mm256_set1_pd(mx);
  const __m256d vmy = _mm256_set1_pd(my);
  const __m256d ones = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(cx + i), vmx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(cy + i), vmy);
    const __m256d d2 =
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d mask = _mm256_cmp_pd(d2, _mm256_loadu_pd(r2 + i),
                                       _CMP_LE_OQ);
    const __m256d vi = _mm256_and_pd(mask, ones);
    const __m256d vw = _mm256_and_pd(mask, _mm256_loadu_pd(mass + i));
    _mm256_storeu_pd(ind + i, vi);
    _mm256_storeu_pd(weighted + i, vw);
    acc = _mm256_add_pd(acc, vw);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    const double dx = cx[i] - mx;
    const double dy = cy[i] - my;
    const bool hit = dx * dx + dy * dy <= r2[i];
    ind[i] = hit ? 1.0 : 0.0;
    weighted[i] = hit ? mass[i] : 0.0;
    total += weighted[i];
  }
  return total;
}

void gram_block(const double* const* rows_a, std::size_t rows,
                const double* const* rows_b, std::size_t cols,
                std::size_t n, double* out) {
  // 2x4 register tile: two a-rows against four b-rows per pass.
  std::size_t i = 0;
  for (; i + 2 <= rows; i += 2) {
    const double* a0 = rows_a[i];
    const double* a1 = rows_a[i + 1];
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      const double* b0 = rows_b[j];
      const double* b1 = rows_b[j + 1];
      const double* b2 = rows_b[j + 2];
      const double* b3 = rows_b[j + 3];
      __m256d c00 = _mm256_setzero_pd(), c01 = _mm256_setzero_pd();
      __m256d c02 = _mm256_setzero_pd(), c03 = _mm256_setzero_pd();
      __m256d c10 = _mm256_setzero_pd(), c11 = _mm256_setzero_pd();
      __m256d c12 = _mm256_setzero_pd(), c13 = _mm256_setzero_pd();
      std::size_t s = 0;
      for (; s + 4 <= n; s += 4) {
        const __m256d va0 = _mm256_loadu_pd(a0 + s);
        const __m256d va1 = _mm256_loadu_pd(a1 + s);
        const __m256d vb0 = _mm256_loadu_pd(b0 + s);
        const __m256d vb1 = _mm256_loadu_pd(b1 + s);
        const __m256d vb2 = _mm256_loadu_pd(b2 + s);
        const __m256d vb3 = _mm256_loadu_pd(b3 + s);
        c00 = _mm256_fmadd_pd(va0, vb0, c00);
        c01 = _mm256_fmadd_pd(va0, vb1, c01);
        c02 = _mm256_fmadd_pd(va0, vb2, c02);
        c03 = _mm256_fmadd_pd(va0, vb3, c03);
        c10 = _mm256_fmadd_pd(va1, vb0, c10);
        c11 = _mm256_fmadd_pd(va1, vb1, c11);
        c12 = _mm256_fmadd_pd(va1, vb2, c12);
        c13 = _mm256_fmadd_pd(va1, vb3, c13);
      }
      double d00 = hsum(c00), d01 = hsum(c01), d02 = hsum(c02),
             d03 = hsum(c03);
      double d10 = hsum(c10), d11 = hsum(c11), d12 = hsum(c12),
             d13 = hsum(c13);
      for (; s < n; ++s) {
        d00 += a0[s] * b0[s];
        d01 += a0[s] * b1[s];
        d02 += a0[s] * b2[s];
        d03 += a0[s] * b3[s];
        d10 += a1[s] * b0[s];
        d11 += a1[s] * b1[s];
        d12 += a1[s] * b2[s];
        d13 += a1[s] * b3[s];
      }
      out[i * cols + j] = d00;
      out[i * cols + j + 1] = d01;
      out[i * cols + j + 2] = d02;
      out[i * cols + j + 3] = d03;
      out[(i + 1) * cols + j] = d10;
      out[(i + 1) * cols + j + 1] = d11;
      out[(i + 1) * cols + j + 2] = d12;
      out[(i + 1) * cols + j + 3] = d13;
    }
    for (; j < cols; ++j) {
      out[i * cols + j] = dot(a0, rows_b[j], n);
      out[(i + 1) * cols + j] = dot(a1, rows_b[j], n);
    }
  }
  for (; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[i * cols + j] = dot(rows_a[i], rows_b[j], n);
    }
  }
}

}  // namespace inquest::kernels::avx2

#endif  // INQUEST_HAVE_AVX2
