#include <atomic>
#include <cstdlib>
#include <string_view>

#include "seqspace/simd/kernels.hpp"

namespace seqspace::simd {

#ifndef SEQSPACE_WITH_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(SEQSPACE_WITH_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const KernelTable* pick_default() {
  if (const char* env = std::getenv("SEQSPACE_SIMD"); env && std::string_view(env) == "scalar")
    return &scalar_kernels();
  if (cpu_has_avx2() && avx2_kernels()) return avx2_kernels();
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void force_isa(Isa isa) {
  const KernelTable* t = &scalar_kernels();
  if (isa == Isa::avx2 && cpu_has_avx2() && avx2_kernels()) t = avx2_kernels();
  slot().store(t, std::memory_order_release);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace seqspace::simd
