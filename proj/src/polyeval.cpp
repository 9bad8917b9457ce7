#include "polytf/polyeval.hpp"

#include <cmath>

#include "polytf/kernels.hpp"

namespace polytf {

std::vector<double> eval_orthonormal(const RecurrenceSource& source, int n,
                                     double x) {
  if (n < 0) throw DomainError("eval_orthonormal requires n >= 0");
  std::vector<double> p(static_cast<size_t>(n) + 1);
  p[0] = 1.0 / source.b(0);
  if (n >= 1) p[1] = (x - source.a(0)) * p[0] / source.b(1);
  for (int l = 1; l < n; ++l)
    p[l + 1] =
        ((x - source.a(l)) * p[l] - source.b(l) * p[l - 1]) / source.b(l + 1);
  return p;
}

std::vector<double> eval_associated(const RecurrenceSource& source, int m,
                                    int count, double x) {
  if (m < 1) throw DomainError("eval_associated requires m >= 1");
  // The shifted source has b(0) = 1, so the orthonormal recurrence starts
  // at p_0 = 1, which is exactly the associated normalization.
  return eval_orthonormal(source.shifted(m), count, x);
}

std::vector<double> eval_orthonormal_table(const RecurrenceSource& source,
                                           int n, std::span<const double> xs) {
  if (n < 0) throw DomainError("eval_orthonormal_table requires n >= 0");
  const size_t cols = xs.size();
  std::vector<double> table((static_cast<size_t>(n) + 1) * cols);
  double* row0 = table.data();
  const double p0 = 1.0 / source.b(0);
  for (size_t i = 0; i < cols; ++i) row0[i] = p0;
  if (n >= 1) {
    double* row1 = table.data() + cols;
    const double a0 = source.a(0);
    const double inv_b1 = 1.0 / source.b(1);
    for (size_t i = 0; i < cols; ++i) row1[i] = (xs[i] - a0) * p0 * inv_b1;
  }
  for (int l = 1; l < n; ++l) {
    const double* prv = table.data() + static_cast<size_t>(l - 1) * cols;
    const double* cur = table.data() + static_cast<size_t>(l) * cols;
    double* nxt = table.data() + static_cast<size_t>(l + 1) * cols;
    kernels::recurrence_step(xs.data(), prv, cur, nxt, cols, source.a(l),
                             source.b(l), 1.0 / source.b(l + 1));
  }
  return table;
}

std::vector<double> eval_combination(const RecurrenceSource& source, int base,
                                     std::span<const double> coeffs,
                                     std::span<const double> xs) {
  if (base < 0) throw DomainError("eval_combination requires base >= 0");
  if (coeffs.empty()) throw DomainError("eval_combination: empty coefficients");
  const int top = base + static_cast<int>(coeffs.size()) - 1;
  const size_t cols = xs.size();
  // rolling recurrence rows; only the combination is accumulated
  std::vector<double> prv(cols, 0.0), cur(cols), nxt(cols), g(cols, 0.0);
  const auto add = [&](int l) {
    if (l < base) return;
    const double c = coeffs[static_cast<size_t>(l - base)];
    if (c == 0.0) return;
    for (size_t i = 0; i < cols; ++i) g[i] += c * cur[i];
  };
  const double p0 = 1.0 / source.b(0);
  std::fill(cur.begin(), cur.end(), p0);
  add(0);
  for (int l = 0; l < top; ++l) {
    if (l == 0) {
      const double a0 = source.a(0);
      const double inv_b1 = 1.0 / source.b(1);
      for (size_t i = 0; i < cols; ++i) nxt[i] = (xs[i] - a0) * p0 * inv_b1;
    } else {
      kernels::recurrence_step(xs.data(), prv.data(), cur.data(), nxt.data(),
                               cols, source.a(l), source.b(l),
                               1.0 / source.b(l + 1));
    }
    prv.swap(cur);
    cur.swap(nxt);
    add(l + 1);
  }
  return g;
}

double cd_kernel(const RecurrenceSource& source, int n, double x, double y) {
  if (n < 0) throw DomainError("cd_kernel requires n >= 0");
  const auto px = eval_orthonormal(source, n, x);
  if (x == y) return kernels::dot(px.data(), px.data(), px.size());
  const auto py = eval_orthonormal(source, n, y);
  return kernels::dot(px.data(), py.data(), px.size());
}

double cd_kernel_ratio(const RecurrenceSource& source, int n, double x,
                       double y) {
  if (n < 0) throw DomainError("cd_kernel_ratio requires n >= 0");
  if (x == y) throw DomainError("cd_kernel_ratio requires x != y");
  const auto px = eval_orthonormal(source, n + 1, x);
  const auto py = eval_orthonormal(source, n + 1, y);
  const size_t t = static_cast<size_t>(n);
  return source.b(n + 1) * (px[t + 1] * py[t] - px[t] * py[t + 1]) / (x - y);
}

}  // namespace polytf
