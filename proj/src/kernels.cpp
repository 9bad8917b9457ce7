#include "polytf/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace polytf::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_scalar(const double* a, const double* b, const double* c,
                   std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

void rot_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = x[i];
    x[i] = c * t - s * y[i];
    y[i] = s * t + c * y[i];
  }
}

void step_scalar(const double* x, const double* prv, const double* cur,
                 double* nxt, std::size_t n, double a, double b_lo,
                 double inv_b_hi) {
  for (std::size_t i = 0; i < n; ++i)
    nxt[i] = ((x[i] - a) * cur[i] - b_lo * prv[i]) * inv_b_hi;
}

const Ops& select() {
  static const Ops* chosen = [] {
    const char* force = std::getenv("POLYTF_SIMD");
    if (force != nullptr) {
      if (std::strcmp(force, "scalar") == 0) return &scalar();
      if (std::strcmp(force, "avx2") == 0 && avx2() != nullptr) return avx2();
    }
    if (const Ops* v = avx2()) return v;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace

const Ops& scalar() {
  static const Ops ops{dot_scalar, dot3_scalar, rot_scalar, step_scalar,
                       "scalar"};
  return ops;
}

const Ops& active() { return select(); }

}  // namespace polytf::kernels
