#include <immintrin.h>

#include <cmath>

#include "seqspace/simd/kernels.hpp"

namespace seqspace::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

double max_abs(const double* x, std::size_t n) {
  __m256d m0 = _mm256_setzero_pd();
  __m256d m1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    m0 = _mm256_max_pd(m0, abs_pd(_mm256_loadu_pd(x + i)));
    m1 = _mm256_max_pd(m1, abs_pd(_mm256_loadu_pd(x + i + 4)));
  }
  m0 = _mm256_max_pd(m0, m1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m0);
  double m = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

double sum_abs(const double* x, std::size_t n) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_add_pd(s0, abs_pd(_mm256_loadu_pd(x + i)));
    s1 = _mm256_add_pd(s1, abs_pd(_mm256_loadu_pd(x + i + 4)));
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_sq(const double* x, std::size_t n) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d a = _mm256_loadu_pd(x + i);
    __m256d b = _mm256_loadu_pd(x + i + 4);
    s0 = _mm256_fmadd_pd(a, a, s0);
    s1 = _mm256_fmadd_pd(b, b, s1);
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), s1);
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), r);
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void repeat(const double* x, std::size_t n, std::size_t m, double* out) {
  if (m == 2) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      // (x0, x1) -> (x0, x0, x1, x1)
      __m128d v = _mm_loadu_pd(x + i);
      __m256d w = _mm256_permute4x64_pd(_mm256_castpd128_pd256(v), 0x50);
      _mm256_storeu_pd(out + 2 * i, w);
    }
    for (; i < n; ++i) out[2 * i] = out[2 * i + 1] = x[i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d v = _mm256_set1_pd(x[i]);
    double* dst = out + i * m;
    std::size_t r = 0;
    for (; r + 4 <= m; r += 4) _mm256_storeu_pd(dst + r, v);
    for (; r < m; ++r) dst[r] = x[i];
  }
}

void block_mean(const double* x, std::size_t n_blocks, std::size_t m, double* out) {
  const double inv = 1.0 / static_cast<double>(m);
  if (m == 2) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n_blocks; i += 4) {
      __m256d a = _mm256_loadu_pd(x + 2 * i);
      __m256d b = _mm256_loadu_pd(x + 2 * i + 4);
      // hadd gives (a0+a1, b0+b1, a2+a3, b2+b3); reorder to block order.
      __m256d h = _mm256_hadd_pd(a, b);
      h = _mm256_permute4x64_pd(h, 0xD8);
      _mm256_storeu_pd(out + i, _mm256_mul_pd(h, half));
    }
    for (; i < n_blocks; ++i) out[i] = (x[2 * i] + x[2 * i + 1]) * 0.5;
    return;
  }
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const double* src = x + i * m;
    __m256d s = _mm256_setzero_pd();
    std::size_t r = 0;
    for (; r + 4 <= m; r += 4) s = _mm256_add_pd(s, _mm256_loadu_pd(src + r));
    double t = hsum(s);
    for (; r < m; ++r) t += src[r];
    out[i] = t * inv;
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::avx2, max_abs, sum_abs, sum_sq, dot, axpby, repeat, block_mean};
  return &table;
}

}  // namespace seqspace::simd
