#pragma once

#include <span>
#include <vector>

#include "polytf/weights.hpp"

namespace polytf {

/// A function given by its coefficients c_{m0}..c_{m0+k} in the orthonormal
/// basis {p_l} of a recurrence source.
struct FunctionRep {
  RecurrenceSource source;
  int m0 = 0;
  std::vector<double> coeffs;

  int top() const { return m0 + static_cast<int>(coeffs.size()) - 1; }
  double norm() const;
  FunctionRep normalized() const;
  /// Values at a batch of abscissae.
  std::vector<double> evaluate(std::span<const double> xs) const;
};

}  // namespace polytf
