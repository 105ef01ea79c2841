#include <random>

#include "caliber/symforms/conical_catalog.hpp"
#include "caliber/symforms/identities.hpp"
#include "doctest.h"

using namespace caliber;

namespace {

RCoefficient x(int N, int i) { return RCoefficient::variable(N, i); }
RCoefficient one(int N) { return RCoefficient::r_power(0, N); }

RCoefficient random_coefficient(std::mt19937_64& rng, int N) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, N - 1), rexp(-4, 3), count(1, 3), deg(0, 3);
  RCoefficient c = one(N) - one(N);
  for (int t = count(rng); t > 0; --t) {
    std::vector<int> e(N, 0);
    for (int d = deg(rng); d > 0; --d) e[var(rng)] += 1;
    c = c + RCoefficient::monomial(N, coef(rng), e, rexp(rng));
  }
  return c;
}

RationalForm random_rational_form(std::mt19937_64& rng, int N, int k) {
  std::bernoulli_distribution keep(0.3);
  std::vector<RationalForm::Term> terms;
  for (BladeMask m : blade::all_of_degree(N, k))
    if (keep(rng)) terms.emplace_back(m, random_coefficient(rng, N));
  return RationalForm::from_terms(N, k, std::move(terms));
}

RationalForm dx(int N, std::vector<int> idx, RCoefficient c) { return RationalForm::basis(N, idx, std::move(c)); }

}  // namespace

TEST_CASE("canonical reduction of x0 squared") {
  const int N = 4;
  RCoefficient lhs = x(N, 0) * x(N, 0);
  RCoefficient rhs = RCoefficient::r_power(2, N) - x(N, 1) * x(N, 1) - x(N, 2) * x(N, 2) - x(N, 3) * x(N, 3);
  CHECK(lhs == rhs);
  RCoefficient r2 = x(N, 0) * x(N, 0) + x(N, 1) * x(N, 1) + x(N, 2) * x(N, 2) + x(N, 3) * x(N, 3);
  CHECK(r2 == RCoefficient::r_power(2, N));
  CHECK((RCoefficient::r_power(2, N) * RCoefficient::r_power(-2, N)) == one(N));
  CHECK(RCoefficient::monomial(N, 1, {3, 0, 0, 0}, 0) == x(N, 0) * x(N, 0) * x(N, 0));
}

TEST_CASE("coefficient evaluation and derivative against finite differences") {
  std::mt19937_64 rng(1);
  const int N = 5;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    RCoefficient c = random_coefficient(rng, N);
    double p[N];
    for (double& v : p) v = g(rng);
    for (int i = 0; i < N; ++i) {
      const double h = 1e-6;
      double p1[N], p2[N];
      std::copy(p, p + N, p1);
      std::copy(p, p + N, p2);
      p1[i] += h;
      p2[i] -= h;
      double fd = (c.evaluate(p1, N) - c.evaluate(p2, N)) / (2 * h);
      double exact = c.derivative(i).evaluate(p, N);
      CHECK(exact == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("exterior derivative of x0 dx1") {
  const int N = 3;
  CHECK(ext_d(dx(N, {1}, x(N, 0))) == dx(N, {0, 1}, one(N)));
}

TEST_CASE("d of a power of r") {
  const int N = 4;
  RationalForm f = RationalForm::scalar(N, RCoefficient::r_power(3, N));
  // d(r^3) = 3 r sum x_i dx_i
  CHECK(ext_d(f) == scaled(3, times_r_power(euler_one_form(N), 1)));
}

TEST_CASE("d squared vanishes on random rational forms") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int N = 3 + trial % 4, k = trial % 3;
    RationalForm f = random_rational_form(rng, N, k);
    CHECK(ext_d(ext_d(f)).is_zero());
  }
}

TEST_CASE("graded Leibniz rule for d") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int p = trial % 2, q = 1 + trial % 2;
    RationalForm a = random_rational_form(rng, 4, p), b = random_rational_form(rng, 4, q);
    RationalForm lhs = ext_d(wedge(a, b));
    RationalForm rhs = wedge(ext_d(a), b) + (p % 2 ? scaled(-1, wedge(a, ext_d(b))) : wedge(a, ext_d(b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Lie derivative along the dilation field") {
  ConicalCatalog cat(1);
  const auto& R = cat.dilation();
  CHECK(lie_derivative(R, cat.omega(1)) == scaled(2, cat.omega(1)));
  CHECK(lie_derivative(R, cat.alpha(1)).is_zero());
  // Constant forms of degree m scale by m under the dilation flow.
  CRationalForm u = cat.upsilon(1);
  CHECK(lie_derivative(R, u) == scaled(4, u));
}

TEST_CASE("Lie derivative agrees with the Euler count on random forms") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 4, k = 1 + trial % 2;
    // A single homogeneous monomial coefficient: degree = x-degree + r exponent + k.
    std::vector<int> e(N, 0);
    e[trial % N] = 1 + trial % 2;
    e[(trial + 1) % N] += 1;
    int rexp = (trial % 5) - 2;
    int deg = 0;
    for (int v : e) deg += v;
    deg += rexp + k;
    RationalForm f = RationalForm::basis(N, k == 1 ? std::vector<int>{1} : std::vector<int>{0, 2},
                                         RCoefficient::monomial(N, 1, e, rexp));
    CHECK(lie_derivative(dilation_field(N), f) == scaled(deg, f));
  }
}

TEST_CASE("conical extensions are horizontal and invariant") {
  ConicalCatalog cat(1);
  for (int p = 1; p <= 3; ++p) {
    CHECK(interior(cat.dilation(), cat.alpha(p)).is_zero());
    CHECK(interior(cat.dilation(), cat.Omega(p)).is_zero());
    CHECK(lie_derivative(cat.dilation(), cat.Omega(p)).is_zero());
    for (int q = 1; q <= 3; ++q) {
      RationalForm v = interior(cat.reeb(q), cat.alpha(p));
      // A_q = I_q R / r has unit length while alpha_p has length 1/r on the cone.
      RationalForm expect = RationalForm::scalar(cat.dim(), RCoefficient::r_power(-1, cat.dim()));
      CHECK(v == (p == q ? expect : RationalForm(cat.dim(), 0)));
    }
  }
}

TEST_CASE("structure equations on the cone, n = 1") {
  ConicalCatalog cat(1);
  CHECK((ext_d(cat.alpha(1)) - scaled(2, cat.Omega(1))).is_zero());
  CHECK(ext_d(cat.Omega(2)).is_zero());
  CHECK(ext_d(cat.gamma(1).im).is_zero());
}

TEST_CASE("cone split of the Kahler form") {
  ConicalCatalog cat(1);
  ConeSplit s = cone_split(cat.omega(1));
  CHECK(s.alpha == times_r_power(cat.alpha(1), 1));
  CHECK(s.beta == times_r_power(cat.Omega(1), 2));
  CHECK(wedge(radial_one_form(cat.dim()), s.alpha) + s.beta == cat.omega(1));
}

TEST_CASE("cone split of a horizontal form is trivial") {
  ConicalCatalog cat(1);
  ConeSplit s = cone_split(cat.Omega(1));
  CHECK(s.alpha.is_zero());
  CHECK(s.beta == cat.Omega(1));
}

TEST_CASE("cone split of the holomorphic volume form") {
  ConicalCatalog cat(1);
  ComplexConeSplit s = cone_split(cat.upsilon(1));
  CHECK(s.alpha == times_r_power(cat.psi(1), 3));
  CHECK(s.beta == times_r_power(cat.sigma_link_power(1, 2), 4));
}

TEST_CASE("homogeneous potentials") {
  const int N = 2;
  RationalForm f = dx(N, {0, 1}, one(N));
  RationalForm pot = homogeneous_potential(f, 2);
  RationalForm expect = dx(N, {1}, mpq_class(1, 2) * x(N, 0)) - dx(N, {0}, mpq_class(1, 2) * x(N, 1));
  CHECK(pot == expect);
  CHECK(ext_d(pot) == f);

  ConicalCatalog cat(1);
  RationalForm p1 = homogeneous_potential(cat.omega(1), 2);
  CHECK(p1 == scaled(mpq_class(1, 2), times_r_power(cat.alpha(1), 2)));
  CHECK(ext_d(p1) == cat.omega(1));

  RationalForm pl = homogeneous_potential(cat.lambda(), 4);
  RationalForm sum = wedge(cat.alpha(1), cat.Omega(1)) + wedge(cat.alpha(2), cat.Omega(2)) +
                     wedge(cat.alpha(3), cat.Omega(3));
  CHECK(pl == scaled(mpq_class(1, 12), times_r_power(sum, 4)));
}

TEST_CASE("homogeneous potential preconditions") {
  ConicalCatalog cat(1);
  CHECK_THROWS_AS(homogeneous_potential(cat.alpha(1), 1), NotClosed);
  CHECK_THROWS_AS(homogeneous_potential(cat.omega(1), 3), NotConical);
}

TEST_CASE("conical 2-forms are invariant under dilation pullback") {
  ConicalCatalog cat(1);
  Vector p = Vector::LinSpaced(8, 0.3, 1.7);
  AltForm a = evaluate_at(cat.Omega(2), p);
  AltForm b = evaluate_at(cat.Omega(2), 3.0 * p);
  CHECK(approx_equal(a, 9.0 * b, 1e-12));
}

TEST_CASE("structure identities vanish exactly") {
  for (int n = 1; n <= 2; ++n) {
    auto results = structure_identities(n);
    CHECK(results.size() >= 25);
    for (const auto& r : results) {
      INFO(r.name, " ", r.leading);
      CHECK(r.residual_terms == 0);
    }
  }
}

TEST_CASE("semibasic descent checks") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& r : descent_checks(n)) {
      INFO(r.name);
      CHECK(r.pass());
    }
}

TEST_CASE("cone reconstructions") {
  for (const auto& r : cone_reconstructions(1)) {
    INFO(r.name, " ", r.leading);
    CHECK(r.residual_terms == 0);
  }
}
