#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "polytf/polyeval.hpp"
#include "polytf/tridiag.hpp"

using namespace polytf;

namespace {

constexpr double kPi = std::numbers::pi;

double matrix_inf_norm(const JacobiMatrix& J) {
  double norm = 0.0;
  const int dim = J.dim();
  for (int i = 0; i < dim; ++i) {
    double row = std::abs(J.diag[static_cast<size_t>(i)]);
    if (i > 0) row += J.offdiag[static_cast<size_t>(i - 1)];
    if (i + 1 < dim) row += J.offdiag[static_cast<size_t>(i)];
    norm = std::max(norm, row);
  }
  return norm;
}

// residual ||J v - x v|| for eigenpair k
double eigen_residual(const JacobiMatrix& J, const EigenDecomposition& E,
                      int k) {
  const int dim = J.dim();
  double r2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    double y = J.diag[static_cast<size_t>(i)] * E.vec(i, k);
    if (i > 0) y += J.offdiag[static_cast<size_t>(i - 1)] * E.vec(i - 1, k);
    if (i + 1 < dim) y += J.offdiag[static_cast<size_t>(i)] * E.vec(i + 1, k);
    const double d = y - E.eigenvalues[static_cast<size_t>(k)] * E.vec(i, k);
    r2 += d * d;
  }
  return std::sqrt(r2);
}

// max |p_{n-m+1}(., m)| over a dense grid on [-1,1]
double sup_associated(const RecurrenceSource& src, int m, int count) {
  const RecurrenceSource sh = src.shifted(m);
  double sup = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = -1.0 + 2.0 * i / 4000.0;
    const auto p = eval_orthonormal(sh, count, x);
    sup = std::max(sup, std::abs(p.back()));
  }
  return sup;
}

}  // namespace

TEST_CASE("window matrices carry the right coefficients") {
  const auto c1 = RecurrenceSource::chebyshev1();
  const JacobiMatrix j10 = build_jacobi(c1, 0, 1);
  CHECK(j10.diag == std::vector<double>{0.0, 0.0});
  CHECK(j10.offdiag == std::vector<double>{1.0 / std::sqrt(2.0)});

  const JacobiMatrix j52 = build_jacobi(c1, 2, 5);
  CHECK(j52.dim() == 4);
  CHECK(j52.diag == std::vector<double>(4, 0.0));
  CHECK(j52.offdiag == std::vector<double>(3, 0.5));

  const auto leg = RecurrenceSource::legendre();
  const JacobiMatrix single = build_jacobi(leg, 7, 7);
  CHECK(single.dim() == 1);
  CHECK(single.diag == std::vector<double>{leg.a(7)});
  CHECK(single.offdiag.empty());

  CHECK_THROWS_AS(build_jacobi(c1, 5, 4), WindowError);
  CHECK_THROWS_AS(build_jacobi(c1, -1, 4), WindowError);
}

TEST_CASE("two-point window has the second-degree chebyshev roots") {
  const auto E =
      eigendecompose(build_jacobi(RecurrenceSource::chebyshev1(), 0, 1));
  CHECK(E.eigenvalues[0] ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(E.eigenvalues[1] ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("chebyshev eigenvalues follow the root formulas") {
  const auto c1 = RecurrenceSource::chebyshev1();
  {
    const int n = 4;
    const auto E = eigendecompose(build_jacobi(c1, 0, n));
    for (int k = 1; k <= n + 1; ++k)
      CHECK(E.eigenvalues[static_cast<size_t>(k - 1)] ==
            doctest::Approx(std::cos((2.0 * n - 2.0 * k + 3.0) /
                                     (2.0 * n + 2.0) * kPi))
                .epsilon(1e-13));
  }
  {
    const int m = 2, n = 5;
    const auto E = eigendecompose(build_jacobi(c1, m, n));
    for (int k = 1; k <= n - m + 1; ++k)
      CHECK(E.eigenvalues[static_cast<size_t>(k - 1)] ==
            doctest::Approx(
                std::cos((n - m + 2.0 - k) / (n - m + 2.0) * kPi))
                .epsilon(1e-13));
  }
}

TEST_CASE("one-dimensional window is trivial") {
  JacobiMatrix J{3, 3, {0.25}, {}};
  const auto E = eigendecompose(J);
  CHECK(E.eigenvalues == std::vector<double>{0.25});
  CHECK(E.vectors == std::vector<double>{1.0});
}

TEST_CASE("eigenvalues are the associated-polynomial roots") {
  const RecurrenceSource sources[] = {RecurrenceSource::legendre(),
                                      RecurrenceSource::jacobi(0.5, -0.5)};
  const struct {
    int m, n;
  } windows[] = {{0, 30}, {1, 45}, {5, 60}, {8, 100}};
  for (const auto& src : sources) {
    for (const auto& w : windows) {
      CAPTURE(src.name());
      CAPTURE(w.m);
      CAPTURE(w.n);
      const int count = w.n - w.m + 1;
      const auto E = eigendecompose(build_jacobi(src, w.m, w.n));
      const double sup = sup_associated(src, w.m, count);
      const RecurrenceSource sh = src.shifted(w.m);
      for (double x : E.eigenvalues) {
        const auto p = eval_orthonormal(sh, count, x);
        CHECK(std::abs(p.back()) <= 1e-8 * sup);
      }
    }
  }
}

TEST_CASE("eigenvalues interlace when the window grows") {
  const auto src = RecurrenceSource::jacobi(0.2, 1.1);
  for (int m : {0, 3}) {
    for (int n : {m + 1, m + 10, m + 25}) {
      const auto small = eigendecompose(build_jacobi(src, m, n));
      const auto big = eigendecompose(build_jacobi(src, m, n + 1));
      const int dim = n - m + 1;
      for (int k = 0; k < dim; ++k) {
        CHECK(big.eigenvalues[static_cast<size_t>(k)] <
              small.eigenvalues[static_cast<size_t>(k)]);
        CHECK(small.eigenvalues[static_cast<size_t>(k)] <
              big.eigenvalues[static_cast<size_t>(k + 1)]);
      }
    }
  }
}

TEST_CASE("spectra of the built-in families stay inside (-1,1)") {
  for (const auto& src :
       {RecurrenceSource::chebyshev1(), RecurrenceSource::chebyshev2(),
        RecurrenceSource::legendre(), RecurrenceSource::jacobi(0.9, -0.4)}) {
    for (int m : {0, 2}) {
      const auto E = eigendecompose(build_jacobi(src, m, m + 40));
      CHECK(E.eigenvalues.front() > -1.0);
      CHECK(E.eigenvalues.back() < 1.0);
    }
  }
}

TEST_CASE("decomposition invariants: residual, orthonormality, ordering, "
          "sign") {
  const auto src = RecurrenceSource::jacobi(1.3, 0.1);
  const JacobiMatrix J = build_jacobi(src, 2, 80);
  const auto E = eigendecompose(J);
  const int dim = J.dim();
  const double scale = matrix_inf_norm(J);

  for (int k = 0; k < dim; ++k)
    CHECK(eigen_residual(J, E, k) <= 1e-12 * scale);

  for (int j = 0; j < dim; ++j) {
    for (int k = j; k < dim; ++k) {
      double g = 0.0;
      for (int i = 0; i < dim; ++i) g += E.vec(i, j) * E.vec(i, k);
      CHECK(std::abs(g - (j == k ? 1.0 : 0.0)) <= 1e-12);
    }
  }

  for (int k = 1; k < dim; ++k)
    CHECK(E.eigenvalues[static_cast<size_t>(k)] >
          E.eigenvalues[static_cast<size_t>(k - 1)]);

  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      if (E.vec(i, k) != 0.0) {
        CHECK(E.vec(i, k) > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("decomposition is deterministic") {
  const JacobiMatrix J =
      build_jacobi(RecurrenceSource::legendre(), 0, 25);
  const auto E1 = eigendecompose(J);
  const auto E2 = eigendecompose(J);
  CHECK(E1.eigenvalues == E2.eigenvalues);
  CHECK(E1.vectors == E2.vectors);
}
