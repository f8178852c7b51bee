#include <cmath>

#include "seqspace/simd/kernels.hpp"

namespace seqspace::simd {
namespace {

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

double sum_abs(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_sq(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void repeat(const double* x, std::size_t n, std::size_t m, double* out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r) out[i * m + r] = x[i];
}

void block_mean(const double* x, std::size_t n_blocks, std::size_t m, double* out) {
  for (std::size_t i = 0; i < n_blocks; ++i) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += x[i * m + r];
    out[i] = s / static_cast<double>(m);
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, max_abs, sum_abs, sum_sq, dot, axpby, repeat, block_mean};
  return table;
}

}  // namespace seqspace::simd
