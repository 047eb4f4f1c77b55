#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels behind the policy-network forward pass.
// Scalar reference implementations are always built; an AVX2+FMA variant is
// compiled when the toolchain supports it and selected at runtime via CPUID.
// Selection can be forced with the LOCOMANI_KERNELS environment variable
// ("scalar", "avx2", "auto") or select_isa().
//
// Variants are equivalence-tested against the reference to 1e-12: summation
// order differs between lanes, so bit equality is not promised across ISAs,
// but any single selected ISA is fully deterministic.

namespace locomani::kern {

enum class Isa { kScalar, kAvx2 };

using DotFn = double (*)(const double* a, const double* b, std::size_t n);
// y = W x + b with W row-major (rows x cols).
using MatvecBiasFn = void (*)(const double* w, const double* x, const double* b,
                              double* y, std::size_t rows, std::size_t cols);

extern DotFn dot;
extern MatvecBiasFn matvec_bias;

double dot_ref(const double* a, const double* b, std::size_t n);
void matvec_bias_ref(const double* w, const double* x, const double* b,
                     double* y, std::size_t rows, std::size_t cols);

#if defined(LOCOMANI_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
void matvec_bias_avx2(const double* w, const double* x, const double* b,
                      double* y, std::size_t rows, std::size_t cols);
#endif

bool cpu_supports_avx2();

Isa active_isa();
const char* active_isa_name();

/// Rebinds the kernel pointers. "auto" picks the best supported ISA.
/// Returns false (and leaves the binding unchanged) for an unknown name or an
/// ISA this build/CPU cannot run.
bool select_isa(std::string_view name);

}  // namespace locomani::kern
