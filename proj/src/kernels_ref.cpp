#include "locomani/kernels.hpp"

namespace locomani::kern {

double dot_ref(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void matvec_bias_ref(const double* w, const double* x, const double* b,
                     double* y, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = b[r] + dot_ref(w + r * cols, x, cols);
  }
}

}  // namespace locomani::kern
