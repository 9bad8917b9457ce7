#include "polytf/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "polytf/localization.hpp"
#include "polytf/tridiag.hpp"

namespace polytf {

namespace {
constexpr double kTol = 1e-12;

double circle_bound(double x, double x_ext) {
  // cosine addition: 1/2 + cos(theta - theta_ext)/2 in angle variables
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x)) *
                   std::sqrt(std::max(0.0, 1.0 - x_ext * x_ext));
  return 0.5 + 0.5 * (x * x_ext + s);
}
}  // namespace

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::A: return "A";
    case RegionLabel::B1: return "B1";
    case RegionLabel::B2: return "B2";
    case RegionLabel::C1: return "C1";
    case RegionLabel::C2: return "C2";
    case RegionLabel::Boundary: return "boundary";
  }
  return "?";
}

double UncertaintyRegion::gamma1(double x) const {
  if (x < x_max - kTol || x >= 1.0)
    throw DomainError("gamma1 is defined on [x_max, 1)");
  return circle_bound(x, x_max);
}

double UncertaintyRegion::gamma2(double x) const {
  if (x > x_min + kTol || x <= -1.0)
    throw DomainError("gamma2 is defined on (-1, x_min]");
  return circle_bound(x, x_min);
}

RegionLabel UncertaintyRegion::classify(double eps, double pi) const {
  // attainable corner points (x_max, 1) and (x_min, 1)
  if (std::abs(pi - 1.0) <= kTol &&
      (std::abs(eps - x_max) <= kTol || std::abs(eps - x_min) <= kTol))
    return RegionLabel::A;

  if (eps > x_max + kTol) {
    const double g = circle_bound(eps, x_max);
    const double d = (1.0 - eps) / (1.0 - x_max);
    if (std::abs(pi - g) <= kTol) return RegionLabel::Boundary;
    if (pi > g) return RegionLabel::C1;
    if (std::abs(pi - d) <= kTol) return RegionLabel::Boundary;
    return pi > d ? RegionLabel::B1 : RegionLabel::A;
  }
  if (eps < x_min - kTol) {
    const double g = circle_bound(eps, x_min);
    const double d = (1.0 + eps) / (1.0 + x_min);
    if (std::abs(pi - g) <= kTol) return RegionLabel::Boundary;
    if (pi > g) return RegionLabel::C2;
    if (std::abs(pi - d) <= kTol) return RegionLabel::Boundary;
    return pi > d ? RegionLabel::B2 : RegionLabel::A;
  }
  // central band, including the vertical segments at the extreme eigenvalues
  return RegionLabel::A;
}

UncertaintyRegion uncertainty_region(const RecurrenceSource& source, int m,
                                     int n) {
  const EigenDecomposition eig = eigendecompose(build_jacobi(source, m, n));
  return {m, n, eig.eigenvalues.front(), eig.eigenvalues.back()};
}

UncertaintyRegion region_of(const SlepianBasis& basis) {
  return {basis.m, basis.n, basis.x_min(), basis.x_max()};
}

double sharp_pi_bound(double eps, double var, double x_extreme, int side) {
  // mirrored form of the right-wing bound; the second square-root argument
  // is nonnegative on the wing where the bound applies
  double num, den;
  if (side >= 0) {
    const double e1 = eps + 1.0;
    num = e1 * std::sqrt(e1 * (x_extreme + 1.0)) +
          std::sqrt(var) *
              std::sqrt(std::max(0.0, var + e1 * (eps - x_extreme)));
    den = var + e1 * e1;
  } else {
    const double e1 = 1.0 - eps;
    num = e1 * std::sqrt(e1 * (1.0 - x_extreme)) +
          std::sqrt(var) *
              std::sqrt(std::max(0.0, var + e1 * (x_extreme - eps)));
    den = var + e1 * e1;
  }
  const double root = num / den;  // bounds sqrt(pi)
  return std::min(1.0, root * root);
}

BoundsReport check_bounds(const FunctionRep& f,
                          const UncertaintyRegion& region) {
  BoundsReport rep;
  rep.eps = epsilon(f);
  rep.var = variance(f);
  rep.pi = window_mass(f, region.m, region.n);
  if (rep.eps >= region.x_max - kTol) {
    rep.side = 1;
    rep.gamma_bound = circle_bound(rep.eps, region.x_max);
  } else if (rep.eps <= region.x_min + kTol) {
    rep.side = -1;
    rep.gamma_bound = circle_bound(rep.eps, region.x_min);
  } else {
    return rep;  // bounds are vacuous between the extreme eigenvalues
  }
  rep.applicable = true;
  rep.sharp_bound = sharp_pi_bound(
      rep.eps, rep.var, rep.side > 0 ? region.x_max : region.x_min, rep.side);
  rep.sharp_ok = rep.pi <= rep.sharp_bound + 1e-10;
  rep.gamma_ok = rep.pi <= rep.gamma_bound + 1e-10;
  return rep;
}

WitnessFunction witness_diagonal(const SlepianBasis& basis, double alpha) {
  const double lo = basis.x_min();
  const double hi = basis.x_max();
  if (alpha < lo - kTol || alpha > hi + kTol)
    throw DomainError("witness_diagonal: alpha outside [x_min, x_max]");
  alpha = std::clamp(alpha, lo, hi);

  const int dim = basis.dim();
  FunctionRep f{basis.source, basis.m,
                std::vector<double>(static_cast<size_t>(dim), 0.0)};
  if (dim == 1) {
    f.coeffs[0] = 1.0;
  } else {
    const double wmax = (alpha - lo) / (hi - lo);
    const double cmax = std::sqrt(wmax);
    const double cmin = std::sqrt(1.0 - wmax);
    const double* vmax = basis.column(dim);
    const double* vmin = basis.column(1);
    for (int i = 0; i < dim; ++i)
      f.coeffs[static_cast<size_t>(i)] = cmax * vmax[i] + cmin * vmin[i];
  }

  WitnessFunction w{std::move(f), alpha, 1.0, 0.0, 0.0, "diagonal"};
  w.eps = epsilon(w.f);
  w.pi = window_mass(w.f, basis.m, basis.n);
  return w;
}

WitnessFunction witness_mixed(const SlepianBasis& inner,
                              const SlepianBasis& outer, double alpha,
                              double lambda) {
  if (!(inner.source == outer.source))
    throw DomainError("witness_mixed requires matching sources");
  if (outer.m < inner.n + 2)
    throw DomainError(
        "witness_mixed: outer window must start at least two degrees above "
        "the inner window");
  if (lambda < 0.0 || lambda > 1.0)
    throw DomainError("witness_mixed: lambda outside [0,1]");

  if (lambda >= 1.0 - 1e-15) {
    WitnessFunction w = witness_diagonal(inner, alpha);
    w.target_pi = lambda;
    w.pi = window_mass(w.f, inner.m, inner.n);
    return w;
  }

  const double alpha_in = std::clamp(alpha, inner.x_min(), inner.x_max());
  const double alpha_out =
      lambda == 0.0 ? alpha : (alpha - lambda * alpha_in) / (1.0 - lambda);
  if (alpha_out < outer.x_min() - kTol || alpha_out > outer.x_max() + kTol)
    throw DomainError(
        "witness_mixed: required outer mean value outside the outer window "
        "range");

  const WitnessFunction w_out = witness_diagonal(outer, alpha_out);

  FunctionRep g{inner.source, 0, {}};
  if (lambda == 0.0) {
    g = w_out.f;
  } else {
    const WitnessFunction w_in = witness_diagonal(inner, alpha_in);
    g.m0 = inner.m;
    g.coeffs.assign(static_cast<size_t>(outer.n - inner.m) + 1, 0.0);
    const double ci = std::sqrt(lambda);
    const double co = std::sqrt(1.0 - lambda);
    for (size_t i = 0; i < w_in.f.coeffs.size(); ++i)
      g.coeffs[i] = ci * w_in.f.coeffs[i];
    const size_t off = static_cast<size_t>(outer.m - inner.m);
    for (size_t i = 0; i < w_out.f.coeffs.size(); ++i)
      g.coeffs[off + i] = co * w_out.f.coeffs[i];
  }

  WitnessFunction w{std::move(g), alpha, lambda, 0.0, 0.0,
                    std::abs(alpha_in - inner.x_max()) <= kTol
                        ? "edge-mix"
                        : "window-mix"};
  w.eps = epsilon(w.f);
  w.pi = window_mass(w.f, inner.m, inner.n);
  return w;
}

WitnessFunction attain_target(const RecurrenceSource& source, int m, int n,
                              double target_eps, double target_pi) {
  const SlepianBasis inner = slepian_basis(source, m, n);
  const UncertaintyRegion region = region_of(inner);
  if (region.classify(target_eps, target_pi) != RegionLabel::A)
    throw DomainError("attain_target: target lies outside region A");

  if (target_pi >= 1.0 - 1e-14) {
    if (target_eps < region.x_min || target_eps > region.x_max)
      throw DomainError(
          "attain_target: full window mass requires eps within the eigenvalue "
          "range");
    WitnessFunction w = witness_diagonal(inner, target_eps);
    w.target_pi = target_pi;
    return w;
  }

  const double alpha_in = std::clamp(target_eps, region.x_min, region.x_max);
  const double alpha_out =
      target_pi == 0.0
          ? target_eps
          : (target_eps - target_pi * alpha_in) / (1.0 - target_pi);

  const int l = n + 2;
  for (int size = 8;; size *= 2) {
    const int k = l + size - 1;
    if (k > 2000)
      throw NumericalError(
          "attain_target: outer window cap (top degree 2000) reached before "
          "covering the required mean value");
    const SlepianBasis outer = slepian_basis(source, l, k);
    if (alpha_out >= outer.x_min() && alpha_out <= outer.x_max()) {
      WitnessFunction w = witness_mixed(inner, outer, target_eps, target_pi);
      w.target_eps = target_eps;
      w.target_pi = target_pi;
      return w;
    }
  }
}

}  // namespace polytf
