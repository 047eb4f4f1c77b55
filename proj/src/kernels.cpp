#include "locomani/kernels.hpp"

#include <cstdlib>

namespace locomani::kern {

DotFn dot = dot_ref;
MatvecBiasFn matvec_bias = matvec_bias_ref;

namespace {
Isa g_active = Isa::kScalar;
}

bool cpu_supports_avx2() {
#if defined(LOCOMANI_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return g_active; }

const char* active_isa_name() {
  switch (g_active) {
    case Isa::kAvx2: return "avx2";
    case Isa::kScalar: break;
  }
  return "scalar";
}

bool select_isa(std::string_view name) {
  if (name == "scalar") {
    dot = dot_ref;
    matvec_bias = matvec_bias_ref;
    g_active = Isa::kScalar;
    return true;
  }
  if (name == "avx2") {
#if defined(LOCOMANI_HAVE_AVX2)
    if (cpu_supports_avx2()) {
      dot = dot_avx2;
      matvec_bias = matvec_bias_avx2;
      g_active = Isa::kAvx2;
      return true;
    }
#endif
    return false;
  }
  if (name == "auto") {
    if (select_isa("avx2")) return true;
    return select_isa("scalar");
  }
  return false;
}

namespace {
// Bind the best kernels before main(); LOCOMANI_KERNELS overrides.
const bool g_init = [] {
  const char* forced = std::getenv("LOCOMANI_KERNELS");
  if (forced != nullptr && select_isa(forced)) return true;
  return select_isa("auto");
}();
}

}  // namespace locomani::kern
