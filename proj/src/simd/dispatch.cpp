#include "tormhd/simd/kernels.hpp"

#include "kernels_detail.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace tormhd::simd {

namespace {

using namespace detail;

const KernelTable kScalar{"scalar",      mul_scalar, mul_sub_scalar, axpy_scalar,
                          square_accumulate_scalar,  scale_complex_scalar,
                          dot_scalar,    dot3_scalar, max_abs_scalar, sum_abs_pow_scalar};

#if defined(TORMHD_HAVE_AVX2)
const KernelTable kAvx2{"avx2",      mul_avx2, mul_sub_avx2, axpy_avx2,
                        square_accumulate_avx2, scale_complex_avx2,
                        dot_avx2,    dot3_avx2, max_abs_avx2, sum_abs_pow_avx2};
#endif

bool cpu_has_avx2() {
#if defined(TORMHD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best_table() {
  if (const KernelTable* t = avx2_kernels()) return t;
  return &kScalar;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("TORMHD_SIMD")) {
    const std::string name(env);
    if (name == "scalar") return &kScalar;
    if (name == "avx2" && avx2_kernels() != nullptr) return avx2_kernels();
  }
  return best_table();
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(TORMHD_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& kernels() { return *active().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const KernelTable* t = nullptr;
  if (name == "scalar") t = &kScalar;
  else if (name == "avx2") t = avx2_kernels();
  else if (name == "auto") t = best_table();
  if (t == nullptr) return false;
  active().store(t, std::memory_order_release);
  return true;
}

std::vector<std::string_view> available_kernels() {
  std::vector<std::string_view> names{kScalar.name};
  if (const KernelTable* t = avx2_kernels()) names.push_back(t->name);
  return names;
}

}  // namespace tormhd::simd
