#pragma once

// Dense inner loops used by the norm and operator code. Each kernel has a
// scalar reference implementation; an AVX2 variant is selected at runtime when
// the CPU supports it. Setting SEQSPACE_SIMD=scalar forces the reference path.

#include <cstddef>

namespace seqspace::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  double (*max_abs)(const double* x, std::size_t n);
  double (*sum_abs)(const double* x, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y <- a*x + b*y
  void (*axpby)(double a, const double* x, double b, double* y, std::size_t n);
  // out[i*m + r] = x[i] for r < m
  void (*repeat)(const double* x, std::size_t n, std::size_t m, double* out);
  // out[i] = mean(x[i*m .. i*m+m-1]) over n_blocks full blocks
  void (*block_mean)(const double* x, std::size_t n_blocks, std::size_t m, double* out);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant is not compiled in.
const KernelTable* avx2_kernels();

/// Whether the running CPU can execute the AVX2 table.
bool cpu_has_avx2();

/// Table chosen at first use (env override honoured).
const KernelTable& active();

/// Test hook: pin the active table. Falls back to scalar when unavailable.
void force_isa(Isa isa);

const char* isa_name(Isa isa);

}  // namespace seqspace::simd
