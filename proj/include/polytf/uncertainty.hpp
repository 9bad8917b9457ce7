#pragma once

#include <string>

#include "polytf/function_rep.hpp"
#include "polytf/spectral.hpp"

namespace polytf {

enum class RegionLabel { A, B1, B2, C1, C2, Boundary };

const char* to_string(RegionLabel label);

/// Partition of the (eps, pi) rectangle (-1,1) x [0,1] for a degree window:
/// A is attainable, C1/C2 are excluded corners above the gamma curves, B1/B2
/// sit in between.  Points within 1e-12 of a defining curve classify as
/// Boundary.
struct UncertaintyRegion {
  int m = 0;
  int n = 0;
  double x_min = 0.0;  // smallest window eigenvalue
  double x_max = 0.0;  // largest window eigenvalue

  /// 1/2 + (x x_max + sqrt(1-x^2) sqrt(1-x_max^2)) / 2 on [x_max, 1)
  double gamma1(double x) const;
  /// mirrored curve on (-1, x_min]
  double gamma2(double x) const;
  RegionLabel classify(double eps, double pi) const;
};

UncertaintyRegion uncertainty_region(const RecurrenceSource& source, int m,
                                     int n);
UncertaintyRegion region_of(const SlepianBasis& basis);

/// Both window-mass bounds for a function whose mean value lies beyond the
/// extreme window eigenvalues: the variance-dependent bound and the coarser
/// gamma-curve bound.  side = +1 right wing, -1 left wing, 0 when neither
/// applies (the bounds say nothing for eps between the extremes).
struct BoundsReport {
  bool applicable = false;
  int side = 0;
  double eps = 0.0;
  double var = 0.0;
  double pi = 0.0;
  double sharp_bound = 1.0;
  double gamma_bound = 1.0;
  bool sharp_ok = true;
  bool gamma_ok = true;
};

BoundsReport check_bounds(const FunctionRep& f,
                          const UncertaintyRegion& region);

/// Variance-dependent bound on pi for the right wing, as a free function for
/// bound-ordering studies: arguments are eps, var and the extreme eigenvalue.
double sharp_pi_bound(double eps, double var, double x_extreme, int side);

struct WitnessFunction {
  FunctionRep f;
  double target_eps = 0.0;
  double target_pi = 0.0;
  double eps = 0.0;
  double pi = 0.0;
  std::string construction;
};

/// Mixture of the extreme eigenfunctions attaining eps = alpha with full
/// window mass.
WitnessFunction witness_diagonal(const SlepianBasis& basis, double alpha);

/// Two-window mixture sqrt(lambda) f_in + sqrt(1-lambda) f_out with the
/// outer window separated by at least two degrees, so cross terms of both
/// the norm and the mean value vanish: pi = lambda and
/// eps = lambda eps_in + (1-lambda) eps_out = alpha exactly.
WitnessFunction witness_mixed(const SlepianBasis& inner,
                              const SlepianBasis& outer, double alpha,
                              double lambda);

/// Construct a witness for a target (eps, pi) inside region A, growing the
/// outer window until its eigenvalue range covers the required outer mean
/// (window top capped at 2000).
WitnessFunction attain_target(const RecurrenceSource& source, int m, int n,
                              double target_eps, double target_pi);

}  // namespace polytf
