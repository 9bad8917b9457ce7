#include "polytf/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polytf {

namespace {

constexpr double kPi = std::numbers::pi;

double jacobi_mass(double alpha, double beta) {
  // 2^(a+b+1) * B(a+1, b+1)
  const double lg = (alpha + beta + 1.0) * std::log(2.0) +
                    std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                    std::lgamma(alpha + beta + 2.0);
  return std::exp(lg);
}

}  // namespace

RecurrenceSource RecurrenceSource::chebyshev1() {
  return RecurrenceSource(WeightFamily::Chebyshev1);
}

RecurrenceSource RecurrenceSource::chebyshev2() {
  return RecurrenceSource(WeightFamily::Chebyshev2);
}

RecurrenceSource RecurrenceSource::legendre() {
  return RecurrenceSource(WeightFamily::Legendre);
}

RecurrenceSource RecurrenceSource::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw ParameterError("jacobi weight requires alpha > -1 and beta > -1");
  RecurrenceSource s(WeightFamily::Jacobi);
  s.alpha_ = alpha;
  s.beta_ = beta;
  return s;
}

RecurrenceSource RecurrenceSource::custom(std::vector<double> a,
                                          std::vector<double> b, Tail tail) {
  if (a.empty() || b.empty())
    throw ParameterError("custom source requires non-empty coefficient arrays");
  if (a.size() != b.size())
    throw ParameterError("custom source arrays must have equal length");
  for (double v : b)
    if (!(v > 0.0))
      throw ParameterError("custom source requires b(l) > 0 for all l");
  RecurrenceSource s(WeightFamily::Custom);
  s.tail_ = tail;
  s.custom_a_ = std::make_shared<const std::vector<double>>(std::move(a));
  s.custom_b_ = std::make_shared<const std::vector<double>>(std::move(b));
  return s;
}

double RecurrenceSource::base_a(int l) const {
  switch (family_) {
    case WeightFamily::Chebyshev1:
    case WeightFamily::Chebyshev2:
    case WeightFamily::Legendre:
      return 0.0;
    case WeightFamily::Jacobi: {
      const double s = alpha_ + beta_;
      if (l == 0) return (beta_ - alpha_) / (s + 2.0);
      const double d = 2.0 * l + s;
      return (beta_ * beta_ - alpha_ * alpha_) / (d * (d + 2.0));
    }
    case WeightFamily::Custom: {
      const auto& a = *custom_a_;
      if (l < static_cast<int>(a.size())) return a[static_cast<size_t>(l)];
      if (tail_ == Tail::Constant) return a.back();
      throw DomainError("custom source: coefficient index " +
                        std::to_string(l) + " beyond supplied array");
    }
  }
  return 0.0;
}

double RecurrenceSource::base_b(int l) const {
  switch (family_) {
    case WeightFamily::Chebyshev1:
      if (l == 0) return std::sqrt(kPi);
      if (l == 1) return 1.0 / std::sqrt(2.0);
      return 0.5;
    case WeightFamily::Chebyshev2:
      if (l == 0) return std::sqrt(kPi / 2.0);
      return 0.5;
    case WeightFamily::Legendre:
      if (l == 0) return std::sqrt(2.0);
      return l / std::sqrt(4.0 * l * l - 1.0);
    case WeightFamily::Jacobi: {
      const double s = alpha_ + beta_;
      if (l == 0) return std::sqrt(jacobi_mass(alpha_, beta_));
      if (l == 1)
        return std::sqrt(4.0 * (alpha_ + 1.0) * (beta_ + 1.0) /
                         ((s + 2.0) * (s + 2.0) * (s + 3.0)));
      const double d = 2.0 * l + s;
      return std::sqrt(4.0 * l * (l + alpha_) * (l + beta_) * (l + s) /
                       (d * d * (d + 1.0) * (d - 1.0)));
    }
    case WeightFamily::Custom: {
      const auto& b = *custom_b_;
      if (l < static_cast<int>(b.size())) return b[static_cast<size_t>(l)];
      if (tail_ == Tail::Constant) return b.back();
      throw DomainError("custom source: coefficient index " +
                        std::to_string(l) + " beyond supplied array");
    }
  }
  return 0.0;
}

double RecurrenceSource::a(int l) const {
  if (l < 0) throw DomainError("coefficient index must be >= 0");
  return base_a(shift_ + l);
}

double RecurrenceSource::b(int l) const {
  if (l < 0) throw DomainError("coefficient index must be >= 0");
  if (l == 0) return shift_ == 0 ? base_b(0) : 1.0;
  return base_b(shift_ + l);
}

RecurrenceSource RecurrenceSource::shifted(int m) const {
  if (m < 0) throw DomainError("shift must be >= 0");
  RecurrenceSource s = *this;
  s.shift_ += m;
  return s;
}

bool RecurrenceSource::symmetric() const {
  switch (family_) {
    case WeightFamily::Chebyshev1:
    case WeightFamily::Chebyshev2:
    case WeightFamily::Legendre:
      return true;
    case WeightFamily::Jacobi:
      return alpha_ == beta_;
    case WeightFamily::Custom:
      return std::all_of(custom_a_->begin(), custom_a_->end(),
                         [](double v) { return v == 0.0; });
  }
  return false;
}

std::string RecurrenceSource::name() const {
  std::string s;
  switch (family_) {
    case WeightFamily::Chebyshev1: s = "chebyshev1"; break;
    case WeightFamily::Chebyshev2: s = "chebyshev2"; break;
    case WeightFamily::Legendre: s = "legendre"; break;
    case WeightFamily::Jacobi:
      s = "jacobi(" + std::to_string(alpha_) + "," + std::to_string(beta_) +
          ")";
      break;
    case WeightFamily::Custom: s = "custom"; break;
  }
  if (shift_ > 0) s += "+shift" + std::to_string(shift_);
  return s;
}

bool operator==(const RecurrenceSource& x, const RecurrenceSource& y) {
  if (x.family_ != y.family_ || x.shift_ != y.shift_) return false;
  switch (x.family_) {
    case WeightFamily::Jacobi:
      return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
    case WeightFamily::Custom:
      return x.tail_ == y.tail_ && *x.custom_a_ == *y.custom_a_ &&
             *x.custom_b_ == *y.custom_b_;
    default:
      return true;
  }
}

std::pair<double, double> coefficients(const RecurrenceSource& source, int l) {
  return {source.a(l), source.b(l)};
}

NevaiDiagnostics nevai_diagnostics(const RecurrenceSource& source, int L) {
  if (L < 1) throw DomainError("nevai_diagnostics requires L >= 1");
  NevaiDiagnostics d;
  d.truncation = L;
  d.tail_start = L / 2;
  for (int l = 0; l <= L; ++l) {
    const double da = std::abs(source.a(l));
    const double db = std::abs(source.b(l) - 0.5);
    d.partial_sum += da + db;
    if (l >= d.tail_start) {
      d.tail_sup_a = std::max(d.tail_sup_a, da);
      d.tail_sup_b = std::max(d.tail_sup_b, db);
    }
  }
  return d;
}

}  // namespace polytf
