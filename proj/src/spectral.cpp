#include "polytf/spectral.hpp"

#include <cmath>
#include <string>

#include "polytf/kernels.hpp"
#include "polytf/polyeval.hpp"

namespace polytf {

namespace {

void check_k(const SlepianBasis& basis, int k) {
  if (k < 1 || k > basis.dim())
    throw DomainError("psi index k = " + std::to_string(k) +
                      " outside 1.." + std::to_string(basis.dim()));
}

}  // namespace

SlepianBasis slepian_basis(const RecurrenceSource& source, int m, int n,
                           double tol) {
  const JacobiMatrix J = build_jacobi(source, m, n);
  EigenDecomposition eig = eigendecompose(J, tol);
  const int dim = n - m + 1;

  SlepianBasis basis{source, m, n, std::move(eig.eigenvalues),
                     std::move(eig.vectors), {}, {}};
  basis.kappa.resize(static_cast<size_t>(dim));
  basis.p_last.resize(static_cast<size_t>(dim));

  const RecurrenceSource sh = source.shifted(m);
  for (int k = 0; k < dim; ++k) {
    const std::vector<double> rec =
        eval_orthonormal(sh, dim - 1, basis.eigenvalues[static_cast<size_t>(k)]);
    const double norm2 = kernels::dot(rec.data(), rec.data(), rec.size());
    const double kappa = 1.0 / std::sqrt(norm2);
    basis.kappa[static_cast<size_t>(k)] = kappa;
    basis.p_last[static_cast<size_t>(k)] = rec.back();
    // solver eigenvectors are the source of truth; the recurrence vector
    // must reproduce their first component
    const double v0 = basis.coeff(0, k + 1);
    if (std::abs(v0 - kappa * rec.front()) > 1e-8)
      throw NumericalError(
          "slepian_basis: recurrence vector disagrees with eigenvector (k=" +
          std::to_string(k + 1) + ", delta=" +
          std::to_string(std::abs(v0 - kappa * rec.front())) + ")");
  }
  return basis;
}

double eval_psi_series(const SlepianBasis& basis, int k, double x) {
  check_k(basis, k);
  const std::vector<double> p = eval_orthonormal(basis.source, basis.n, x);
  return kernels::dot(basis.column(k), p.data() + basis.m,
                      static_cast<size_t>(basis.dim()));
}

std::vector<double> eval_psi_series_batch(const SlepianBasis& basis, int k,
                                          std::span<const double> xs) {
  check_k(basis, k);
  return eval_combination(basis.source, basis.m,
                          std::span<const double>(basis.column(k),
                                                  static_cast<size_t>(
                                                      basis.dim())),
                          xs);
}

double eval_psi_explicit(const SlepianBasis& basis, int k, double x) {
  check_k(basis, k);
  const double xk = basis.eigenvalues[static_cast<size_t>(k - 1)];
  if (std::abs(x - xk) < 1e-6 * (1.0 + std::abs(xk)))
    return eval_psi_series(basis, k, x);

  const RecurrenceSource& src = basis.source;
  const int n = basis.n;
  const int m = basis.m;
  const double kappa = basis.kappa[static_cast<size_t>(k - 1)];
  const double plast = basis.p_last[static_cast<size_t>(k - 1)];
  const std::vector<double> p = eval_orthonormal(src, n + 1, x);
  double numerator = src.b(n + 1) * p[static_cast<size_t>(n + 1)] * plast;
  if (m >= 1) numerator += src.b(m) * p[static_cast<size_t>(m - 1)];
  return kappa * numerator / (x - xk);
}

FunctionRep psi_as_function(const SlepianBasis& basis, int k) {
  check_k(basis, k);
  return FunctionRep{basis.source, basis.m,
                     std::vector<double>(basis.column(k),
                                         basis.column(k) + basis.dim())};
}

}  // namespace polytf
