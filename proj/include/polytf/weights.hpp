#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "polytf/errors.hpp"

namespace polytf {

enum class WeightFamily { Chebyshev1, Chebyshev2, Legendre, Jacobi, Custom };

/// Stream of three-term recurrence coefficients (a_l, b_l) describing a
/// weight function on [-1,1].  Conventions:
///   b_{l+1} p_{l+1}(x) = (x - a_l) p_l(x) - b_l p_{l-1}(x),
///   p_{-1} = 0,  p_0 = 1/b_0,  b_0 = sqrt(integral of w),
/// so the generated polynomials p_l are orthonormal in L^2(w).
///
/// shifted(m) views the same stream with indices offset by m.  It describes
/// the orthonormalizing measure of the associated polynomials p_l(x, m);
/// that measure is normalized to total mass 1, so the shifted b(0) is 1.
class RecurrenceSource {
 public:
  enum class Tail { Constant, Error };

  static RecurrenceSource chebyshev1();
  static RecurrenceSource chebyshev2();
  static RecurrenceSource legendre();
  static RecurrenceSource jacobi(double alpha, double beta);
  static RecurrenceSource custom(std::vector<double> a, std::vector<double> b,
                                 Tail tail = Tail::Error);

  double a(int l) const;
  double b(int l) const;

  RecurrenceSource shifted(int m) const;

  WeightFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int shift() const { return shift_; }
  /// Total mass of the described measure, b(0)^2.
  double mass() const {
    const double b0 = b(0);
    return b0 * b0;
  }
  bool symmetric() const;
  std::string name() const;

  friend bool operator==(const RecurrenceSource& x, const RecurrenceSource& y);

 private:
  explicit RecurrenceSource(WeightFamily f) : family_(f) {}
  double base_a(int l) const;
  double base_b(int l) const;

  WeightFamily family_;
  double alpha_ = 0.0, beta_ = 0.0;
  int shift_ = 0;
  Tail tail_ = Tail::Error;
  std::shared_ptr<const std::vector<double>> custom_a_, custom_b_;
};

/// Recurrence pair (a_l, b_l) for index l >= 0.
std::pair<double, double> coefficients(const RecurrenceSource& source, int l);

/// Finite-truncation view of how close the coefficient stream is to the
/// limits a_l -> 0, b_l -> 1/2.  Membership in the summable subclass cannot
/// be decided from a truncation; callers interpret these heuristically.
struct NevaiDiagnostics {
  int truncation = 0;       // L
  int tail_start = 0;       // supremums taken over [tail_start, L]
  double tail_sup_a = 0.0;  // sup |a_l| over the tail range
  double tail_sup_b = 0.0;  // sup |b_l - 1/2| over the tail range
  double partial_sum = 0.0; // sum_{l<=L} |a_l| + |b_l - 1/2|
};

NevaiDiagnostics nevai_diagnostics(const RecurrenceSource& source, int L);

}  // namespace polytf
