#pragma once

#include <span>
#include <vector>

#include "polytf/weights.hpp"

namespace polytf {

/// Forward-recurrence values p_0(x) .. p_n(x) of the orthonormal family.
std::vector<double> eval_orthonormal(const RecurrenceSource& source, int n,
                                     double x);

/// Values p_0(x,m) .. p_count(x,m) of the associated polynomials (m >= 1),
/// generated by the index-shifted recurrence with p_0(x,m) = 1.
std::vector<double> eval_associated(const RecurrenceSource& source, int m,
                                    int count, double x);

/// Batch table of orthonormal values: row l (contiguous, length xs.size())
/// holds p_l at every abscissa.  Rows 0..n inclusive.
std::vector<double> eval_orthonormal_table(const RecurrenceSource& source,
                                           int n, std::span<const double> xs);

/// Values of the combination sum_j coeffs[j] * p_{base+j} at each abscissa.
std::vector<double> eval_combination(const RecurrenceSource& source, int base,
                                     std::span<const double> coeffs,
                                     std::span<const double> xs);

/// Christoffel-Darboux kernel K_n(x,y) = sum_{l<=n} p_l(x) p_l(y),
/// evaluated by direct summation.
double cd_kernel(const RecurrenceSource& source, int n, double x, double y);

/// Same kernel through the ratio identity
///   b_{n+1} (p_{n+1}(x) p_n(y) - p_n(x) p_{n+1}(y)) / (x - y),
/// valid for x != y.
double cd_kernel_ratio(const RecurrenceSource& source, int n, double x,
                       double y);

}  // namespace polytf
