#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the numerical modules.  Every kernel
// exists as a portable scalar reference and, on x86-64, an AVX2/FMA variant.
// The active set is chosen once at runtime from CPU capabilities and can be
// forced with POLYTF_SIMD=scalar|avx2.

namespace polytf::kernels {

struct Ops {
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]*b[i]*c[i]  (weighted inner products)
  double (*dot3)(const double* a, const double* b, const double* c,
                 std::size_t n);
  // plane rotation: x <- c*x - s*y, y <- s*x + c*y (applied elementwise)
  void (*rot)(double* x, double* y, std::size_t n, double c, double s);
  // three-term recurrence step over a batch of abscissae:
  //   nxt[i] = ((x[i] - a) * cur[i] - b_lo * prv[i]) * inv_b_hi
  void (*recurrence_step)(const double* x, const double* prv,
                          const double* cur, double* nxt, std::size_t n,
                          double a, double b_lo, double inv_b_hi);
  const char* name;
};

const Ops& scalar();
const Ops* avx2();    // nullptr when the CPU or build lacks AVX2+FMA
const Ops& active();  // runtime selection, POLYTF_SIMD overrides

inline double dot(const double* a, const double* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline double dot3(const double* a, const double* b, const double* c,
                   std::size_t n) {
  return active().dot3(a, b, c, n);
}
inline void rot(double* x, double* y, std::size_t n, double c, double s) {
  active().rot(x, y, n, c, s);
}
inline void recurrence_step(const double* x, const double* prv,
                            const double* cur, double* nxt, std::size_t n,
                            double a, double b_lo, double inv_b_hi) {
  active().recurrence_step(x, prv, cur, nxt, n, a, b_lo, inv_b_hi);
}

}  // namespace polytf::kernels
