#include "polytf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polytf/kernels.hpp"
#include "polytf/polyeval.hpp"
#include "polytf/tridiag.hpp"

namespace polytf {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuadratureRule gauss_rule(const RecurrenceSource& source, int N, int shift_m) {
  if (N < 1) throw DomainError("gauss_rule requires N >= 1");
  if (shift_m < 0) throw DomainError("gauss_rule requires shift >= 0");
  const RecurrenceSource sm = source.shifted(shift_m);
  const JacobiMatrix J = build_jacobi(sm, 0, N - 1);
  const EigenDecomposition eig = eigendecompose(J);
  QuadratureRule r;
  r.nodes = eig.eigenvalues;
  r.total_mass = sm.mass();
  r.shift = shift_m;
  r.exactness_degree = 2 * N - 1;
  r.weights.resize(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    const double v0 = eig.vec(0, k);
    r.weights[static_cast<size_t>(k)] = r.total_mass * v0 * v0;
  }
  return r;
}

double integrate(const QuadratureRule& rule, std::span<const double> values) {
  if (values.size() != rule.weights.size())
    throw DomainError("integrate: value count does not match rule size");
  return kernels::dot(rule.weights.data(), values.data(), values.size());
}

double inner_product(const FunctionRep& f, const FunctionRep& g) {
  if (!(f.source == g.source))
    throw DomainError("inner_product requires matching sources");
  const int lo = std::max(f.m0, g.m0);
  const int hi = std::min(f.top(), g.top());
  double s = 0.0;
  for (int l = lo; l <= hi; ++l)
    s += f.coeffs[static_cast<size_t>(l - f.m0)] *
         g.coeffs[static_cast<size_t>(l - g.m0)];
  return s;
}

double inner_product_quadrature(const FunctionRep& f, const FunctionRep& g) {
  if (!(f.source == g.source))
    throw DomainError("inner_product requires matching sources");
  const int N = (f.top() + g.top()) / 2 + 1;
  const QuadratureRule rule = gauss_rule(f.source, N);
  const std::vector<double> fv = f.evaluate(rule.nodes);
  const std::vector<double> gv = g.evaluate(rule.nodes);
  return kernels::dot3(rule.weights.data(), fv.data(), gv.data(),
                       rule.nodes.size());
}

namespace {

enum class TDensity { Flat, SinSq };  // dt  vs  sin^2(t) dt

// integral over [t0,t1] of G(cos t)^2 * density, composite Gauss-Legendre
// with panels short enough for the trigonometric degree of the integrand
double t_space_integral(const RecurrenceSource& sm, int base,
                        std::span<const double> coeffs, double t0, double t1,
                        TDensity dens) {
  if (!(t1 > t0)) return 0.0;
  static const QuadratureRule gl = gauss_rule(RecurrenceSource::legendre(), 24);
  const int deg = base + static_cast<int>(coeffs.size()) - 1;
  const int trig_deg = 2 * deg + (dens == TDensity::SinSq ? 2 : 0);
  const double max_len = 10.0 / (trig_deg + 1);
  const int panels =
      std::max(1, static_cast<int>(std::ceil((t1 - t0) / max_len)));
  const double h = (t1 - t0) / panels;
  const size_t q = gl.nodes.size();

  std::vector<double> ts(q), xs(q), integrand(q);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = t0 + (p + 0.5) * h;
    for (size_t i = 0; i < q; ++i) {
      ts[i] = mid + 0.5 * h * gl.nodes[i];
      xs[i] = std::cos(ts[i]);
    }
    const std::vector<double> g = eval_combination(sm, base, coeffs, xs);
    for (size_t i = 0; i < q; ++i) {
      double v = g[i] * g[i];
      if (dens == TDensity::SinSq) {
        const double s = std::sin(ts[i]);
        v *= s * s;
      }
      integrand[i] = v;
    }
    total += 0.5 * h * kernels::dot(gl.weights.data(), integrand.data(), q);
  }
  return total;
}

double node_classified_sum(const RecurrenceSource& source, int m, int base,
                           std::span<const double> coeffs, double lo,
                           double hi, int N) {
  const QuadratureRule rule = gauss_rule(source, N, m);
  const std::vector<double> g =
      eval_combination(source.shifted(m), base, coeffs, rule.nodes);
  double s = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    if (x < lo || x > hi) s += rule.weights[i] * g[i] * g[i];
  }
  return s;
}

}  // namespace

SubIntervalIntegral integrate_outside(const RecurrenceSource& source, int m,
                                      std::span<const double> coeffs,
                                      int coeff_base, double lo, double hi) {
  if (m < 0) throw DomainError("integrate_outside requires m >= 0");
  if (!(lo < hi)) throw DomainError("integrate_outside requires lo < hi");
  if (coeffs.empty()) throw DomainError("integrate_outside: empty coefficients");
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);

  const WeightFamily fam = source.family();
  const int total_shift = source.shift() + m;
  const bool chebyshev =
      fam == WeightFamily::Chebyshev1 || fam == WeightFamily::Chebyshev2;

  SubIntervalIntegral out;
  if (chebyshev) {
    // x = cos t turns the density into a trigonometric polynomial factor:
    //   chebyshev1 base measure:      w dx = dt
    //   chebyshev2 base measure:      w dx = sin^2 t dt
    //   associated measures (m >= 1): (2/pi) sin^2 t dt
    const RecurrenceSource sm = source.shifted(m);
    TDensity dens = TDensity::SinSq;
    double scale = 2.0 / kPi;
    if (total_shift == 0) {
      scale = 1.0;
      dens = fam == WeightFamily::Chebyshev1 ? TDensity::Flat : TDensity::SinSq;
    }
    const double t_hi = std::acos(std::clamp(hi, -1.0, 1.0));
    const double t_lo = std::acos(std::clamp(lo, -1.0, 1.0));
    out.value = scale * (t_space_integral(sm, coeff_base, coeffs, 0.0, t_hi,
                                          dens) +
                         t_space_integral(sm, coeff_base, coeffs, t_lo, kPi,
                                          dens));
    out.error_estimate = 0.0;
    out.approximate = false;
    return out;
  }

  const int deg = coeff_base + static_cast<int>(coeffs.size()) - 1;
  const int N1 = std::max(128, deg + 1);
  const double v1 = node_classified_sum(source, m, coeff_base, coeffs, lo, hi,
                                        N1);
  const double v2 = node_classified_sum(source, m, coeff_base, coeffs, lo, hi,
                                        2 * N1);
  out.value = v2;
  out.error_estimate = std::abs(v2 - v1);
  out.approximate = true;
  return out;
}

}  // namespace polytf
