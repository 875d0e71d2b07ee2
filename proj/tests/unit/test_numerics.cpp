#include <doctest.h>

#include <cmath>
#include <random>

#include "wqed/errors.hpp"
#include "wqed/model.hpp"
#include "wqed/numerics/eigensolver.hpp"
#include "wqed/numerics/quadrature.hpp"
#include "wqed/numerics/root.hpp"

using namespace wqed;
using numerics::Bracket;
using numerics::QuadratureSpec;

namespace {

QuadratureSpec tight(double tol = 1e-8) {
  QuadratureSpec s;
  s.abs_tol = tol;
  return s;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("listed integrals") {
    const auto spec = tight();
    const double c = -2.75;
    CHECK(std::abs(numerics::integrate_2d([c](double, double) { return c; }, spec) -
                   4 * kPi * kPi * c) <= spec.abs_tol);
    CHECK(std::abs(numerics::integrate_2d(
              [](double x, double y) { return std::cos(x) * std::cos(y); }, spec)) <= spec.abs_tol);
    const double ref = 2 * kPi * (2 * kPi / std::sqrt(3.0));
    CHECK(std::abs(numerics::integrate_2d(
                       [](double x, double) { return 1.0 / (2.0 + std::cos(x)); }, spec) -
                   ref) <= spec.abs_tol);
  }

  TEST_CASE("1/(2+cos) matches a dense Riemann sum") {
    const int m = 4000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += 1.0 / (2.0 + std::cos(-kPi + 2 * kPi * (k + 0.5) / m));
    const double riemann = s * (2 * kPi / m) * 2 * kPi;
    CHECK(std::abs(riemann - 2 * kPi * (2 * kPi / std::sqrt(3.0))) < 1e-10);
  }

  TEST_CASE("constants are exact at any depth") {
    for (int depth : {4, 8, 14}) {
      QuadratureSpec s = tight(1e-14);
      s.max_depth = depth;
      CHECK(numerics::integrate_2d([](double, double) { return 3.0; }, s) ==
            doctest::Approx(12 * kPi * kPi).epsilon(1e-15));
    }
  }

  TEST_CASE("linearity") {
    const auto spec = tight(1e-9);
    auto f = [](double x, double y) { return std::exp(std::sin(x)) * std::cos(2 * y) + x * x; };
    auto g = [](double x, double y) { return 1.0 / (1.5 + std::cos(x + y)); };
    const double lhs =
        numerics::integrate_2d([&](double x, double y) { return f(x, y) + g(x, y); }, spec);
    const double rhs = numerics::integrate_2d(f, spec) + numerics::integrate_2d(g, spec);
    CHECK(std::abs(lhs - rhs) <= 2 * spec.abs_tol);
  }

  TEST_CASE("parallel and serial quadrature are bit-identical") {
    const auto spec = tight(1e-10);
    auto f = [](double x, double y) { return 1.0 / (1.2 + std::cos(x) * std::cos(y)); };
    CHECK(numerics::integrate_2d(f, spec) == reference::integrate_2d_serial(f, spec));
  }

  TEST_CASE("failures are reported") {
    QuadratureSpec s = tight(1e-12);
    s.max_depth = 4;
    auto spike = [](double x, double y) { return 1.0 / std::sqrt(std::abs(x - 0.1234) + std::abs(y)); };
    CHECK_THROWS_AS(numerics::integrate_2d(spike, s), QuadratureFailure);
    auto nan = [](double x, double) { return x > 0.5 ? std::nan("") : 1.0; };
    CHECK_THROWS_AS(numerics::integrate_2d(nan, tight()), QuadratureFailure);
  }

  TEST_CASE("spec validation") {
    QuadratureSpec s;
    s.abs_tol = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = QuadratureSpec{};
    s.max_depth = 3;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = QuadratureSpec{};
    s.guard_band = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
  }

  TEST_CASE("pairwise_sum") {
    std::vector<double> v(1000, 0.1);
    CHECK(numerics::pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(numerics::pairwise_sum({}) == 0.0);
  }
}

TEST_SUITE("root") {
  TEST_CASE("listed roots") {
    auto lin = [](double x) { return x - 0.5; };
    CHECK(numerics::find_root(lin, {0.0, 1.0, lin(0.0), lin(1.0)}, 1e-12, 100) ==
          doctest::Approx(0.5).epsilon(1e-12));
    auto c = [](double x) { return std::cos(x); };
    const double r = numerics::find_root(c, {1.0, 2.0, c(1.0), c(2.0)}, 1e-10, 200);
    CHECK(std::abs(r - kPi / 2) <= 1e-9);
    auto dec = [](double x) { return 2.0 - std::exp(x); };
    const double t = numerics::find_root(dec, {0.0, 3.0, dec(0.0), dec(3.0)}, 1e-9, 200);
    CHECK(std::abs(dec(t)) <= 1e-9);
  }

  TEST_CASE("never evaluates outside the bracket") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
      const double root = u(rng);
      const double lo = root - 1.0 - std::abs(u(rng));
      const double hi = root + 0.5 + std::abs(u(rng));
      bool inside = true;
      auto f = [&](double x) {
        inside = inside && x >= lo && x <= hi;
        return std::tanh(x - root);
      };
      const double x = numerics::find_root(f, {lo, hi, f(lo), f(hi)}, 1e-12, 200);
      CHECK(inside);
      CHECK(x >= lo);
      CHECK(x <= hi);
    }
  }

  TEST_CASE("bracket validation and iteration limit") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(Bracket({1.0, 0.0, 1.0, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS(Bracket({1.0, 2.0, 1.0, 2.0}).validate(), DomainError);
    CHECK_THROWS_AS(numerics::find_root(f, {1.0, 2.0, 1.0, 2.0}, 1e-9, 10), DomainError);
    auto g = [](double x) { return x - 0.1; };
    CHECK_THROWS_AS(numerics::find_root(g, {-1.0, 3.0, g(-1.0), g(3.0)}, 1e-30, 5, 0.0),
                    MaxIterationsError);
  }
}

TEST_SUITE("eigensolver") {
  TEST_CASE("identity and triangular input") {
    const auto id = numerics::eig_complex_general(CMatrix::Identity(5, 5));
    for (cplx z : id.values) CHECK(std::abs(z - 1.0) < 1e-14);

    CMatrix u = CMatrix::Zero(4, 4);
    const std::vector<cplx> diag{cplx(3, 1), cplx(-1, 0), cplx(0.5, -2), cplx(2, 0)};
    for (int i = 0; i < 4; ++i) {
      u(i, i) = diag[i];
      for (int j = i + 1; j < 4; ++j) u(i, j) = cplx(0.3 * (i + j), -0.1 * j);
    }
    const auto tri = numerics::eig_complex_general(u);
    const std::vector<cplx> expect{cplx(-1, 0), cplx(0.5, -2), cplx(2, 0), cplx(3, 1)};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(tri.values[k] - expect[k]) < 1e-12);
  }

  TEST_CASE("diagonal and swap matrices") {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = cplx(0, -2);
    const auto e = numerics::eig_complex_general(d);
    CHECK(std::abs(e.values[0] - cplx(0, -2)) < 1e-15);
    CHECK(std::abs(e.values[1] - 1.0) < 1e-15);
    for (int k = 0; k < 2; ++k) CHECK(e.vectors.col(k).norm() == doctest::Approx(1.0));

    CMatrix s(2, 2);
    s << 0, 1, 1, 0;
    const auto sw = numerics::eig_complex_general(s);
    CHECK(std::abs(sw.values[0] + 1.0) < 1e-14);
    CHECK(std::abs(sw.values[1] - 1.0) < 1e-14);
  }

  TEST_CASE("constructed Q D Q^-1 is recovered") {
    const int n = 50;
    std::mt19937_64 rng(42);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix q(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) q(i, j) = cplx(g(rng), g(rng)) * (0.2 / std::sqrt(double(n)));
      q(i, i) += 1.0;
    }
    std::vector<cplx> d(n);
    for (int k = 0; k < n; ++k) d[k] = cplx(-2.0 + 0.08 * k, std::sin(1.3 * k));
    const CMatrix a = q * Eigen::Map<const CVector>(d.data(), n).asDiagonal() * q.inverse();
    const auto pairs = numerics::eig_complex_general(a);
    std::sort(d.begin(), d.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
    for (int k = 0; k < n; ++k) CHECK(std::abs(pairs.values[k] - d[k]) <= 1e-6 * 2.0);
    CHECK(pairs.max_residual() <= numerics::kResidualTolerance * pairs.matrix_norm);
    CHECK(pairs.trace_error <= numerics::kTraceTolerance * pairs.matrix_norm);
  }

  TEST_CASE("random complex symmetric matrix passes the residual contract") {
    const int n = 50;
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = cplx(g(rng), g(rng));
    }
    const auto pairs = numerics::eig_complex_general(a);
    CHECK(pairs.values.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double r = (a * pairs.vectors.col(k) - pairs.values[k] * pairs.vectors.col(k)).norm();
      CHECK(r <= 1e-8 * a.norm());
      CHECK(std::abs(r - pairs.residuals[k]) <= 1e-12 * a.norm());
    }
    for (int k = 1; k < n; ++k) {
      const cplx p = pairs.values[k - 1], c = pairs.values[k];
      CHECK((p.real() < c.real() || (p.real() == c.real() && p.imag() <= c.imag())));
    }
  }

  TEST_CASE("non-finite input is rejected") {
    CMatrix a = CMatrix::Identity(3, 3);
    a(1, 2) = std::nan("");
    CHECK_THROWS_AS(numerics::eig_complex_general(a), Error);
  }
}
