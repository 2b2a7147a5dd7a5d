#pragma once

// Declarations shared between the dispatcher and the AVX2 translation
// unit (the only file compiled with AVX2 flags).

#include <cstddef>

#if defined(INQUEST_HAVE_AVX2)
namespace inquest::kernels::avx2 {

double sum(const double* v, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void scale(double* v, std::size_t n, double s);
void blend_scale(double* m, const double* ind, std::size_t n,
                 double l0, double l1);
double circle_hit_rows(const double* cx, const double* cy, const double* r2,
                       const double* mass, std::size_t n,
                       double mx, double my, double* ind, double* weighted);
void gram_block(const double* const* rows_a, std::size_t rows,
                const double* const* rows_b, std::size_t cols,
                std::size_t n, double* out);

}  // namespace inquest::kernels::avx2
#endif
