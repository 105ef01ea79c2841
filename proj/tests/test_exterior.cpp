#include <algorithm>
#include <numeric>
#include <random>

#include "caliber/exterior/alt_form.hpp"
#include "doctest.h"

using namespace caliber;

namespace {

AltForm random_form(std::mt19937_64& rng, int dim, int degree, double density = 0.5) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  std::vector<AltForm::Term> terms;
  for (BladeMask m : blade::all_of_degree(dim, degree))
    if (keep(rng)) terms.emplace_back(m, u(rng));
  return AltForm::from_terms(dim, degree, std::move(terms));
}

Vector random_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = g(rng);
  return v;
}

// Independent oracle: sum over permutations of the defining multilinear formula.
double brute_evaluate(const AltForm& a, const Matrix& V) {
  const int k = a.degree();
  double total = 0.0;
  for (const auto& [m, c] : a.terms()) {
    auto idx = blade::indices(m);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[i] > perm[j]) ++inversions;
      double prod = (inversions % 2) ? -1.0 : 1.0;
      for (int i = 0; i < k; ++i) prod *= V(idx[perm[i]], i);
      total += c * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

}  // namespace

TEST_CASE("wedge of basis blades") {
  AltForm e1 = one_form(4, 1), e2 = one_form(4, 2);
  AltForm w = wedge(e1, e2);
  CHECK(w == AltForm::basis(4, {1, 2}));
  CHECK(wedge(e2, e1) == -w);
}

TEST_CASE("symplectic square on R^4") {
  AltForm w = AltForm::basis(4, {0, 1}) + AltForm::basis(4, {2, 3});
  CHECK(wedge(w, w) == AltForm::basis(4, {0, 1, 2, 3}, 2.0));
}

TEST_CASE("wedge beyond top degree is empty") {
  AltForm v = AltForm::basis(3, {0, 1, 2});
  AltForm z = wedge(v, one_form(3, 0));
  CHECK(z.degree() == 4);
  CHECK(z.is_zero());
}

TEST_CASE("wedge rejects mismatched dimensions") {
  CHECK_THROWS_AS(wedge(one_form(3, 0), one_form(4, 0)), DimensionMismatch);
}

TEST_CASE("canonical form drops cancelled terms") {
  AltForm a = AltForm::basis(5, {0, 3}, 2.0);
  AltForm z = a - a;
  CHECK(z.is_zero());
  CHECK(z.size() == 0);
  CHECK(AltForm::from_terms(5, 2, {{0b1001, 1.0}, {0b1001, -1.0}}).is_zero());
}

TEST_CASE("interior of a basis blade") {
  Vector e1 = Vector::Unit(3, 1);
  CHECK(interior(e1, AltForm::basis(3, {1, 2})) == one_form(3, 2));
  CHECK(interior(Vector::Unit(3, 2), AltForm::basis(3, {1, 2})) == -one_form(3, 1));
  CHECK_THROWS_AS(interior(e1, constant(3, 1.0)), InvalidArgument);
  CHECK_THROWS_AS(interior(Vector::Unit(4, 0), AltForm::basis(3, {1, 2})), DimensionMismatch);
}

TEST_CASE("hodge of the constant and involution signs") {
  CHECK(hodge(constant(5, 1.0)) == AltForm::basis(5, {0, 1, 2, 3, 4}));
  std::mt19937_64 rng(11);
  for (int N = 1; N <= 10; ++N)
    for (int k = 0; k <= N; ++k) {
      AltForm a = random_form(rng, N, k);
      double sign = ((k * (N - k)) % 2) ? -1.0 : 1.0;
      CHECK(approx_equal(hodge(hodge(a)), sign * a, 1e-15));
    }
  AltForm w1 = AltForm::basis(8, {0, 1}) + AltForm::basis(8, {2, 3}) + AltForm::basis(8, {4, 5}) +
               AltForm::basis(8, {6, 7});
  CHECK(hodge(hodge(w1)) == w1);
}

TEST_CASE("hodge pairs a blade with its complement to the volume") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    AltForm a = random_form(rng, 7, 3, 1.0);
    AltForm top = wedge(a, hodge(a));
    double norm2 = 0.0;
    for (const auto& t : a.terms()) norm2 += t.second * t.second;
    CHECK(top.coefficient(blade::full(7)) == doctest::Approx(norm2).epsilon(1e-12));
  }
}

TEST_CASE("evaluate agrees with the permutation-sum oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int N = 3 + trial % 6;
    int k = 1 + trial % std::min(N, 4);
    AltForm a = random_form(rng, N, k);
    Matrix V(N, k);
    for (int j = 0; j < k; ++j) V.col(j) = random_vector(rng, N);
    CHECK(evaluate(a, V) == doctest::Approx(brute_evaluate(a, V)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate is antisymmetric under transpositions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    AltForm a = random_form(rng, 8, 4);
    Matrix V(8, 4);
    for (int j = 0; j < 4; ++j) V.col(j) = random_vector(rng, 8);
    int i = trial % 4, j = (trial / 4 + 1 + i) % 4;
    if (i == j) continue;
    Matrix W = V;
    W.col(i).swap(W.col(j));
    CHECK(evaluate(a, W) == doctest::Approx(-evaluate(a, V)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(evaluate(AltForm::basis(3, {0, 1}), Matrix::Identity(3, 3)), InvalidArgument);
}

TEST_CASE("Kahler form on a complex line") {
  AltForm w = AltForm::basis(8, {0, 1}) + AltForm::basis(8, {2, 3});
  CHECK(evaluate(w, std::vector<Vector>{Vector::Unit(8, 0), Vector::Unit(8, 1)}) == 1.0);
}

TEST_CASE("interior is an antiderivation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
    AltForm x = random_form(rng, 8, p), y = random_form(rng, 8, q);
    Vector v = random_vector(rng, 8);
    AltForm lhs = interior(v, wedge(x, y));
    AltForm rhs = wedge(interior(v, x), y) + ((p % 2) ? -1.0 : 1.0) * wedge(x, interior(v, y));
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 2, r = 1 + trial % 2;
    AltForm a = random_form(rng, 7, p), b = random_form(rng, 7, q), c = random_form(rng, 7, r);
    CHECK(approx_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), 1e-12));
    CHECK(approx_equal(wedge(a, b), ((p * q) % 2 ? -1.0 : 1.0) * wedge(b, a), 1e-12));
  }
}

TEST_CASE("pullback along identity and composition") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + trial % 4;
    AltForm a = random_form(rng, 6, k);
    CHECK(approx_equal(pullback(a, Matrix::Identity(6, 6)), a, 1e-14));
    Matrix L1 = Matrix::Random(6, 5), L2 = Matrix::Random(5, 7);
    CHECK(approx_equal(pullback(pullback(a, L1), L2), pullback(a, L1 * L2), 1e-11));
    Matrix V = Matrix::Random(7, k);
    CHECK(evaluate(pullback(a, L1 * L2), V) == doctest::Approx(evaluate(a, L1 * L2 * V)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(pullback(AltForm::basis(3, {0}), Matrix::Identity(4, 4)), DimensionMismatch);
}

TEST_CASE("j_derivation matches the slotwise definition") {
  std::mt19937_64 rng(23);
  AltForm a = random_form(rng, 6, 3, 1.0);
  Matrix J = Matrix::Random(6, 6);
  AltForm D = j_derivation(a, J);
  Matrix V = Matrix::Random(6, 3);
  double expect = 0.0;
  for (int s = 0; s < 3; ++s) {
    Matrix W = V;
    W.col(s) = J * V.col(s);
    expect += evaluate(a, W);
  }
  CHECK(evaluate(D, V) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("skew matrix round trip and json round trip") {
  std::mt19937_64 rng(29);
  AltForm a = random_form(rng, 6, 2);
  CHECK(from_skew_matrix(skew_matrix(a)) == a);
  CAltForm c(random_form(rng, 5, 3), random_form(rng, 5, 3));
  auto j = to_json(c);
  CHECK(j["dim"] == 5);
  CHECK(complex_form_from_json(j) == c);
}

TEST_CASE("complex wedge distributes over parts") {
  std::mt19937_64 rng(31);
  CAltForm a(random_form(rng, 6, 1), random_form(rng, 6, 1));
  CAltForm b(random_form(rng, 6, 2), random_form(rng, 6, 2));
  CAltForm w = wedge(a, b);
  Matrix V = Matrix::Random(6, 3);
  // (a ^ b)(V) computed from the parts with complex arithmetic at the blade level.
  cplx direct = evaluate(wedge(a, b), V);
  cplx from_parts = evaluate(CAltForm(wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)), V);
  CHECK(std::abs(direct - from_parts) < 1e-12);
  CHECK(approx_equal(scale(cplx(0, 1), a), a.times_i(), 0.0));
  CHECK(w.degree() == 3);
}
