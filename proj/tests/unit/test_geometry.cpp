#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <random>

#include "doctest.h"
#include "strat/geometry.hpp"

using namespace strat;
using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<256>>;

namespace {

SurfaceParams P(int a, int b, int c, int d) { return make_params(a, b, c, d); }

template <class T>
Point3<T> on_surface(const SurfaceParams& p, T x, T z, bool upper = true) {
  const auto ys = y_branches_real(p, x, z);
  REQUIRE(!ys.empty());
  return {x, upper ? ys.back() : ys.front(), z};
}

}  // namespace

TEST_CASE("f and gradient by hand") {
  const auto p = P(2, 2, 1, 2);
  CHECK(eval_f(p, 1.0, 1.0, 1.0) == -1.0);
  const auto g = gradient(p, 1.0, 1.0, 1.0);
  CHECK(g[0] == -3.0);
  CHECK(g[1] == 2.0);
  CHECK(g[2] == -2.0);
  const auto q = P(3, 2, 3, 5);
  const auto z0 = gradient(q, 0.0, 0.0, 0.0);
  CHECK(z0[0] == 0.0);
  CHECK(z0[1] == 0.0);
  CHECK(z0[2] == 0.0);
  CHECK(gradient(P(1, 2, 2, 2), 0.0, 0.0, 0.0)[1] == 1.0);
}

TEST_CASE("gradient matches central differences") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(1, 6);
  std::uniform_real_distribution<double> coord(0.2, 1.3);
  auto check_at = [](const SurfaceParams& p, double x, double y, double z) {
    const double h = 1e-6;
    const auto g = gradient(p, x, y, z);
    const double fd[3] = {
        (eval_f(p, x + h, y, z) - eval_f(p, x - h, y, z)) / (2 * h),
        (eval_f(p, x, y + h, z) - eval_f(p, x, y - h, z)) / (2 * h),
        (eval_f(p, x, y, z + h) - eval_f(p, x, y, z - h)) / (2 * h),
    };
    for (int i = 0; i < 3; ++i) {
      REQUIRE(std::abs(fd[i] - g[i]) <= 1e-6 * std::max(1.0, std::abs(g[i])));
    }
  };
  check_at(P(3, 2, 3, 5), 0.3, 0.7, 1.1);
  for (int k = 0; k < 20; ++k) {
    const auto p = P(e(rng), e(rng), e(rng), e(rng));
    for (int i = 0; i < 100; ++i) check_at(p, coord(rng), coord(rng), coord(rng));
  }
}

TEST_CASE("real and complex y branches") {
  const auto ys = y_branches_real(P(2, 4, 1, 3), 1.0, 1.0);
  REQUIRE(ys.size() == 2);
  CHECK(ys[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(ys[0] == doctest::Approx(-std::sqrt(2.0)));
  // x^d alone gives -8 at x = -2 for d = 3 with z = 0.
  const auto odd = y_branches_real(P(3, 1, 1, 3), -2.0, 0.0);
  REQUIRE(odd.size() == 1);
  CHECK(odd[0] == doctest::Approx(-2.0));
  CHECK(y_branches_real(P(2, 1, 1, 1), -1.0, 0.0).empty());
  CHECK(y_branches_real(P(2, 1, 1, 1), 0.0, 0.0).size() == 1);
  const auto cs = y_branches_complex(P(3, 1, 1, 1), {1.0, 0.0}, {1.0, 0.0});
  REQUIRE(cs.size() == 3);
  for (const auto& y : cs) CHECK(std::abs(y * y * y - 2.0) < 1e-12);
}

TEST_CASE("quantity A") {
  const auto p = P(2, 2, 1, 3);
  CHECK(quantity_a(p, Point3<double>{0.5, 0.3, 0.0}) == 0.0);
  const double u = 0.25;
  const auto q = on_surface(p, u * u, u);
  // Direct formula: |b z^(b-1) x^c| / sqrt(f_x^2 + f_y^2).
  const double fx = -u * u - 3 * std::pow(u, 4);
  const double fy = 2 * q.y;
  const double oracle = std::abs(2 * u * u * u) / std::sqrt(fx * fx + fy * fy);
  CHECK(std::abs(quantity_a(p, q) - oracle) < 1e-12);
  const auto lin = P(1, 3, 2, 2);
  const auto q1 = on_surface(lin, 0.1, 0.2);
  CHECK(quantity_a(lin, q1) <= 3 * 0.04 * 0.01 + 1e-15);
  CHECK_THROWS_AS(quantity_a(P(2, 2, 2, 2), Point3<double>{0.0, 0.0, 0.5}), DegenerateDenominator);
}

TEST_CASE("quantity B_pi") {
  const auto p = P(2, 2, 1, 3);
  double last = 0;
  for (int k = 8; k <= 24; ++k) {
    const double u = std::ldexp(1.0, -k);
    last = quantity_bpi(p, on_surface(p, u * u, u));
  }
  CHECK(last == doctest::Approx(1 / std::sqrt(10.0)).epsilon(1e-5));
  const auto same = P(3, 2, 3, 3);
  CHECK(quantity_bpi(same, on_surface(same, 0.4, 0.7)) < 1e-15);
  CHECK(bpi_numerator_exact(p, mpq_class(0), mpq_class(1, 2)) == 0);
}

TEST_CASE("quantity Z' and Z") {
  const auto p = P(2, 4, 1, 3);
  CHECK(quantity_w(p, 1.0, 1.0) == doctest::Approx(1 / (4 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(quantity_w(p, 0.5, 0.0) == 0.0);
  const auto q = P(2, 2, 2, 6);
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double kappa = i / 20.0, z = j / 20.0;
      CHECK(quantity_w(q, kappa * z, z) <= 1.0);
    }
  }
  const auto up = on_surface(p, 0.5, 0.5, true);
  const auto dn = on_surface(p, 0.5, 0.5, false);
  CHECK(quantity_w_projective(p, up) == quantity_w_projective(p, dn));
  const double z2 = quantity_w_projective(p, on_surface(p, 1e-6, 1e-2));
  const double z3 = quantity_w_projective(p, on_surface(p, 1e-9, 1e-3));
  CHECK(z2 == doctest::Approx(20).epsilon(0.01));
  CHECK(z3 == doctest::Approx(63.2).epsilon(0.01));
  CHECK(quantity_w_projective(p, Point3<double>{0.3, 0.4, 0.0}) == 0.0);
}

TEST_CASE("projection algebra") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const auto params = P(3, 2, 3, 5);
  for (int n = 0; n < 200; ++n) {
    const double x = coord(rng), z = coord(rng);
    const auto q = on_surface(params, x, z);
    const auto pr = tangent_projection(params, q);
    const auto g = gradient(params, q);
    double trace = 0;
    for (int i = 0; i < 3; ++i) {
      trace += pr.normal[i][i];
      double pg = 0;
      for (int j = 0; j < 3; ++j) {
        double pp = 0, nn = 0, pn = 0;
        for (int k = 0; k < 3; ++k) {
          pp += pr.tangent[i][k] * pr.tangent[k][j];
          nn += pr.normal[i][k] * pr.normal[k][j];
          pn += pr.tangent[i][k] * pr.normal[k][j];
        }
        REQUIRE(std::abs(pp - pr.tangent[i][j]) < 1e-10);
        REQUIRE(std::abs(nn - pr.normal[i][j]) < 1e-10);
        REQUIRE(std::abs(pn) < 1e-10);
        REQUIRE(std::abs(pr.tangent[i][j] + pr.normal[i][j] - (i == j)) < 1e-12);
        pg += pr.tangent[i][j] * g[j];
      }
      REQUIRE(std::abs(pg) < 1e-10 * std::max(1.0, std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2])));
    }
    REQUIRE(std::abs(trace - 1) < 1e-10);
  }
  const auto axis = tangent_projection(P(2, 2, 2, 2), Point3<double>{0.0, 1.0, 0.0});
  CHECK(axis.normal[1][1] == 1.0);
  CHECK(axis.normal[0][0] == 0.0);
  CHECK(axis.normal[2][2] == 0.0);
}

TEST_CASE("L2 and L3 against a 256-bit oracle") {
  const auto p = P(2, 2, 2, 6);
  const double u = std::ldexp(1.0, -10);
  const auto q = on_surface(p, u * u, u);
  const auto r = on_surface(p, u * u * (1 + u), u);
  const Big ub = Big(1) / 1024;
  const auto qb = on_surface<Big>(p, ub * ub, ub);
  const auto rb = on_surface<Big>(p, ub * ub * (1 + ub), ub);
  const double l2 = quantity_L2(p, q, r);
  const double l3 = quantity_L3(p, q, r);
  const double l2b = quantity_L2(p, qb, rb).convert_to<double>();
  const double l3b = quantity_L3(p, qb, rb).convert_to<double>();
  CHECK(std::abs(l2 - l2b) <= 1e-9 * std::abs(l2b));
  CHECK(std::abs(l3 - l3b) <= 1e-9 * std::abs(l3b));
  CHECK(l3 > 0);
  CHECK(quantity_L2(p, q, q) == 0.0);
  CHECK(quantity_L3(p, q, q) == 0.0);
  CHECK_THROWS_AS(quantity_L2(p, q, on_surface(p, u, u)), InadmissiblePair);
}

TEST_CASE("L3 is symmetric under z -> -z for b, c even") {
  const auto p = P(3, 2, 2, 4);
  const auto q = on_surface(p, 0.01, 0.03);
  const auto r = on_surface(p, 0.0101, 0.0301);
  const Point3<double> qs{q.x, q.y, -q.z}, rs{r.x, r.y, -r.z};
  CHECK(quantity_L3(p, q, r) == doctest::Approx(quantity_L3(p, qs, rs)).epsilon(1e-12));
  CHECK(quantity_L2(p, q, r) == doctest::Approx(quantity_L2(p, qs, rs)).epsilon(1e-12));
}

TEST_CASE("branch independence for even a") {
  const auto p = P(4, 2, 1, 3);
  const auto up = on_surface(p, 0.2, 0.3, true);
  const auto dn = on_surface(p, 0.2, 0.3, false);
  CHECK(quantity_a(p, up) == doctest::Approx(quantity_a(p, dn)));
  const auto up2 = on_surface(p, 0.201, 0.3, true);
  const auto dn2 = on_surface(p, 0.201, 0.3, false);
  CHECK(quantity_L3(p, up, up2) == doctest::Approx(quantity_L3(p, dn, dn2)));
}

TEST_CASE("exact on-surface identity") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(1, 7), num(-9, 9), den(1, 9);
  for (int i = 0; i < 1000; ++i) {
    const auto p = P(e(rng), e(rng), e(rng), e(rng));
    mpq_class x(num(rng), den(rng)), z(num(rng), den(rng));
    x.canonicalize();
    z.canonicalize();
    REQUIRE(euler_identity_residual(p, x, z).is_zero());
  }
  // The floating numerator agrees with the exact one.
  const auto p = P(3, 2, 3, 5);
  const auto q = on_surface(p, 0.5, 0.25);
  const auto g = gradient(p, q);
  const double direct = q.x * g[0] + q.y * g[1];
  CHECK(direct == doctest::Approx(bpi_numerator_exact(p, mpq_class(1, 2), mpq_class(1, 4)).get_d()));
}
