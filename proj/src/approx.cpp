#include "polytf/approx.hpp"

#include <algorithm>
#include <cmath>

#include "polytf/kernels.hpp"
#include "polytf/localization.hpp"

namespace polytf {

namespace {
constexpr double kEndpointTol = 1e-12;
}

FunctionRep shift_to_associated(const FunctionRep& f, int m) {
  if (m < 0) throw DomainError("shift_to_associated requires m >= 0");
  if (f.coeffs.empty())
    throw DomainError("shift_to_associated: empty representation");
  FunctionRep out{f.source.shifted(m), 0, {}};
  if (f.m0 >= m) {
    out.m0 = f.m0 - m;
    out.coeffs = f.coeffs;
    return out;
  }
  // allow stored leading zeros below m, nothing else
  const int drop = m - f.m0;
  for (int i = 0; i < drop && i < static_cast<int>(f.coeffs.size()); ++i)
    if (f.coeffs[static_cast<size_t>(i)] != 0.0)
      throw DomainError(
          "shift_to_associated: coefficients below degree m present");
  if (drop >= static_cast<int>(f.coeffs.size()))
    throw DomainError("shift_to_associated: coefficients below degree m present");
  out.m0 = 0;
  out.coeffs.assign(f.coeffs.begin() + drop, f.coeffs.end());
  return out;
}

ConcentrationResult concentration(const FunctionRep& f, Interval A, int m) {
  if (!(A.lo < A.hi)) throw DomainError("concentration requires lo < hi");
  const FunctionRep g = shift_to_associated(f, m);
  const double norm = f.norm();
  if (norm == 0.0)
    throw PreconditionError("concentration is undefined for the zero function");

  const double lo = std::max(A.lo, -1.0);
  const double hi = std::min(A.hi, 1.0);
  ConcentrationResult out;
  if (lo <= -1.0 + kEndpointTol && hi >= 1.0 - kEndpointTol) return out;

  const SubIntervalIntegral integral =
      integrate_outside(f.source, m, g.coeffs, g.m0, lo, hi);
  out.epsilon_m = std::sqrt(std::max(0.0, integral.value)) / norm;
  out.error_estimate = integral.error_estimate;
  out.approximate = integral.approximate;
  return out;
}

ReconstructionReport reconstruct_on_interval(const FunctionRep& f,
                                             const SlepianBasis& basis,
                                             Interval A) {
  if (!(A.lo < A.hi)) throw DomainError("reconstruction requires lo < hi");
  if (f.m0 < basis.m || f.top() > basis.n)
    throw DomainError("function support must lie inside the basis window");
  const double nrm = f.norm();
  if (std::abs(nrm - 1.0) > 1e-10)
    throw PreconditionError("reconstruction requires ||f|| = 1");

  const int dim = basis.dim();
  // align coefficients with the window
  std::vector<double> c(static_cast<size_t>(dim), 0.0);
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    c[static_cast<size_t>(f.m0 - basis.m) + i] = f.coeffs[i];

  ReconstructionReport rep;
  double residual2 = 0.0;
  for (int k = 1; k <= dim; ++k) {
    const double d =
        kernels::dot(basis.column(k), c.data(), static_cast<size_t>(dim));
    const double xk = basis.eigenvalues[static_cast<size_t>(k - 1)];
    if (xk >= A.lo - kEndpointTol && xk <= A.hi + kEndpointTol)
      rep.selected.push_back(k);
    else
      residual2 += d * d;
  }
  rep.residual = std::sqrt(residual2);
  rep.eps = epsilon(f);
  rep.var = variance(f);

  // localization bounds, reported when A has one of the recognized shapes
  if (std::abs(A.lo + 1.0) <= kEndpointTol && A.hi < 1.0) {
    const double a = A.hi + 1.0;
    rep.bounds.push_back({BoundCheck::Kind::EndpointLeft, (1.0 + rep.eps) / a,
                          false});
  }
  if (std::abs(A.hi - 1.0) <= kEndpointTol && A.lo > -1.0) {
    const double a = 1.0 - A.lo;
    rep.bounds.push_back({BoundCheck::Kind::EndpointRight, (1.0 - rep.eps) / a,
                          false});
  }
  const double half = 0.5 * (A.hi - A.lo);
  const double mid = 0.5 * (A.hi + A.lo);
  if (std::abs(mid - rep.eps) <= 1e-9 && A.lo >= -1.0 - kEndpointTol &&
      A.hi <= 1.0 + kEndpointTol) {
    rep.bounds.push_back({BoundCheck::Kind::MeanCentered,
                          rep.var / (half * half), false});
  }
  for (BoundCheck& b : rep.bounds) b.satisfied = residual2 <= b.value + 1e-12;
  return rep;
}

double node_count_fraction(const SlepianBasis& basis, Interval A) {
  if (!(A.lo < A.hi)) throw DomainError("node_count_fraction requires lo < hi");
  if (basis.n == basis.m)
    throw WindowError("node_count_fraction requires n > m");
  int count = 0;
  for (double x : basis.eigenvalues)
    if (x >= A.lo - kEndpointTol && x <= A.hi + kEndpointTol) ++count;
  return static_cast<double>(count) / (basis.n - basis.m);
}

}  // namespace polytf
