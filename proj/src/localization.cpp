#include "polytf/localization.hpp"

#include <cmath>
#include <string>

#include "polytf/kernels.hpp"
#include "polytf/polyeval.hpp"

namespace polytf {

double FunctionRep::norm() const {
  if (coeffs.empty()) return 0.0;
  return std::sqrt(kernels::dot(coeffs.data(), coeffs.data(), coeffs.size()));
}

FunctionRep FunctionRep::normalized() const {
  const double s = norm();
  if (s == 0.0) throw PreconditionError("cannot normalize the zero function");
  FunctionRep out = *this;
  for (double& c : out.coeffs) c /= s;
  return out;
}

std::vector<double> FunctionRep::evaluate(std::span<const double> xs) const {
  return eval_combination(source, m0, coeffs, xs);
}

namespace {

void require_normalized(const FunctionRep& f, const char* op) {
  if (f.coeffs.empty())
    throw PreconditionError(std::string(op) + " is undefined for the zero function");
  const double n = f.norm();
  if (n == 0.0)
    throw PreconditionError(std::string(op) + " is undefined for the zero function");
  if (std::abs(n - 1.0) > 1e-10)
    throw PreconditionError(std::string(op) + " requires ||f|| = 1 (got " +
                            std::to_string(n) + ")");
}

// c^T J c for the tridiagonal window matrix over [m0, top]
double quadratic_form(const FunctionRep& f) {
  const RecurrenceSource& src = f.source;
  const auto& c = f.coeffs;
  const int m0 = f.m0;
  double s = 0.0;
  for (size_t i = 0; i < c.size(); ++i) s += src.a(m0 + static_cast<int>(i)) * c[i] * c[i];
  for (size_t i = 0; i + 1 < c.size(); ++i)
    s += 2.0 * src.b(m0 + static_cast<int>(i) + 1) * c[i] * c[i + 1];
  return s;
}

}  // namespace

double epsilon(const FunctionRep& f) {
  require_normalized(f, "epsilon");
  return quadratic_form(f);
}

double variance(const FunctionRep& f) {
  require_normalized(f, "variance");
  const RecurrenceSource& src = f.source;
  const auto& c = f.coeffs;
  const int m0 = f.m0;
  const int top = f.top();
  const size_t dim = c.size();

  // y = J c, tridiagonal matvec over the window
  std::vector<double> y(dim);
  for (size_t i = 0; i < dim; ++i) {
    double v = src.a(m0 + static_cast<int>(i)) * c[i];
    if (i > 0) v += src.b(m0 + static_cast<int>(i)) * c[i - 1];
    if (i + 1 < dim) v += src.b(m0 + static_cast<int>(i) + 1) * c[i + 1];
    y[i] = v;
  }
  double second = kernels::dot(y.data(), y.data(), dim);
  if (m0 >= 1) {
    const double bl = src.b(m0);
    second += bl * bl * c.front() * c.front();
  }
  const double bt = src.b(top + 1);
  second += bt * bt * c.back() * c.back();

  const double eps = quadratic_form(f);
  return second - eps * eps;
}

double window_mass(const FunctionRep& f, int m, int n) {
  require_normalized(f, "window_mass");
  if (m < 0 || m > n) throw WindowError("window_mass requires 0 <= m <= n");
  const int lo = std::max(m, f.m0);
  const int hi = std::min(n, f.top());
  double s = 0.0;
  for (int l = lo; l <= hi; ++l) {
    const double c = f.coeffs[static_cast<size_t>(l - f.m0)];
    s += c * c;
  }
  return s;
}

LocalizationReport localization_report(const FunctionRep& f, int m, int n) {
  return {epsilon(f), variance(f), window_mass(f, m, n)};
}

double psi_variance_closed(const SlepianBasis& basis, int k) {
  if (k < 1 || k > basis.dim())
    throw DomainError("psi index k outside the window");
  const RecurrenceSource& src = basis.source;
  const double kappa = basis.kappa[static_cast<size_t>(k - 1)];
  const double plast = basis.p_last[static_cast<size_t>(k - 1)];
  const double bt = src.b(basis.n + 1);
  double num = bt * bt * plast * plast;
  if (basis.m >= 1) {
    const double bm = src.b(basis.m);
    num += bm * bm;
  }
  return num * kappa * kappa;  // kappa^2 = 1 / sum_l p_l(x_k,m)^2
}

std::vector<VarianceRow> variance_decay_sweep(const RecurrenceSource& source,
                                              int m,
                                              std::span<const int> n_list,
                                              KSelector selector) {
  std::vector<VarianceRow> rows;
  for (int n : n_list) {
    const SlepianBasis basis = slepian_basis(source, m, n);
    const int dim = basis.dim();
    auto push = [&](int k) {
      rows.push_back({n, k, basis.eigenvalues[static_cast<size_t>(k - 1)],
                      psi_variance_closed(basis, k)});
    };
    switch (selector) {
      case KSelector::All:
        for (int k = 1; k <= dim; ++k) push(k);
        break;
      case KSelector::Mid:
        push((dim + 1) / 2);
        break;
      case KSelector::Extremes:
        push(1);
        if (dim > 1) push(dim);
        break;
    }
  }
  return rows;
}

}  // namespace polytf
