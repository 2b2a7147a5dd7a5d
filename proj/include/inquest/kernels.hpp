#pragma once

// Hot-loop numeric kernels with a scalar reference implementation and an
// AVX2 variant selected at runtime. The scalar versions are the semantic
// ground truth; the AVX2 versions must agree to tight relative tolerance
// (FMA contraction reorders roundoff, so equality is not bitwise).

#include <cstddef>
#include <string>

namespace inquest::kernels {

enum class Backend { scalar, avx2 };

// Which backend dispatched calls currently use.
Backend active_backend();
std::string backend_name(Backend b);

// Force a backend. Requesting avx2 on hardware without it throws
// ValidationError. Intended for tests and benchmarks; the default is the
// best available backend.
void set_backend(Backend b);

// True when the CPU supports the AVX2 variant (and it was compiled in).
bool avx2_available();

// --- dispatched entry points ----------------------------------------------

// Sum of v[0..n).
double sum(const double* v, std::size_t n);

// Dot product of a and b.
double dot(const double* a, const double* b, std::size_t n);

// v[i] *= s.
void scale(double* v, std::size_t n, double s);

// m[i] *= (ind[i] != 0.0 ? l1 : l0). The factor is selected, not
// arithmetically blended, so each product is a single rounding.
void blend_scale(double* m, const double* ind, std::size_t n,
                 double l0, double l1);

// For each state s in [0, n): hit = ((cx[s]-mx)^2 + (cy[s]-my)^2 <= r2[s]);
// writes ind[s] = hit ? 1.0 : 0.0 and weighted[s] = hit ? mass[s] : 0.0,
// and returns the sum of weighted.
double circle_hit_rows(const double* cx, const double* cy, const double* r2,
                       const double* mass, std::size_t n,
                       double mx, double my,
                       double* ind, double* weighted);

// Gram block: out[i*cols + j] = dot(rows_a[i], rows_b[j]) for
// i in [0, rows), j in [0, cols); every row pointer addresses n doubles.
// Batches pairwise co-occurrence masses.
void gram_block(const double* const* rows_a, std::size_t rows,
                const double* const* rows_b, std::size_t cols,
                std::size_t n, double* out);

// --- scalar reference (always available, for equivalence tests) -----------

namespace scalar {
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
}  // namespace scalar

}  // namespace inquest::kernels
