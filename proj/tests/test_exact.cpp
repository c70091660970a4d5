#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lafr;

namespace {

IntPolynomial poly(std::initializer_list<long> c) { return IntPolynomial(c); }

TEST(CharPoly, K2) { EXPECT_EQ(char_poly(laplacian(complete_graph(2))), poly({0, -2, 1})); }

TEST(CharPoly, P3) { EXPECT_EQ(char_poly(laplacian(path_graph(3))), poly({0, 3, -4, 1})); }

TEST(CharPoly, ZeroMatrix) { EXPECT_EQ(char_poly(IntMatrix(3, 3)), poly({0, 0, 0, 1})); }

TEST(CharPoly, EmptyMatrixIsOne) { EXPECT_EQ(char_poly(IntMatrix(0, 0)), poly({1})); }

TEST(CharPoly, NonSquareThrows) { EXPECT_THROW(char_poly(IntMatrix(2, 3)), DomainError); }

TEST(CharPoly, AgreesWithDeterminantEvaluation) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const auto g = testkit::random_graph(rng, 2 + iter % 9);
    const auto l = laplacian(g);
    const auto p = char_poly(l);
    ASSERT_EQ(p.degree(), static_cast<long>(g.order()));
    for (long x = -2; x <= static_cast<long>(g.order()) + 2; ++x) EXPECT_EQ(p(BigInt(x)), testkit::char_poly_at(l, x));
  }
}

TEST(CharPoly, OverflowFallsBackToBigIntegers) {
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = BigInt(1000000007L * static_cast<long>((i * 7 + j * 3) % 11 + 1));
  const auto p = char_poly(m);
  for (long x : {-3L, 0L, 5L, 1000000007L}) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) a(i, j) = (i == j ? BigInt(x) : BigInt(0)) - m(i, j);
    EXPECT_EQ(p(BigInt(x)), determinant(a));
  }
}

TEST(CharPoly, LaplacianCoefficientsAndNumericRoots) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    const auto g = testkit::random_connected_graph(rng, 3 + iter % 8);
    const auto p = char_poly(laplacian(g));
    EXPECT_EQ(p.coeff(0), 0);
    EXPECT_EQ(abs(p.coeff(1)), BigInt(static_cast<long>(g.order())) * spanning_tree_count(g));
    double scale = 0.0;
    for (const auto& c : p.coefficients()) scale = std::max(scale, std::abs(c.get_d()));
    for (double mu : oracle::laplacian_spectrum(g).values) {
      double acc = 0.0;
      for (long k = p.degree(); k >= 0; --k) acc = acc * mu + p.coeff(static_cast<std::size_t>(k)).get_d();
      EXPECT_LT(std::abs(acc), 1e-6 * scale);
    }
  }
}

TEST(CharPolyDeleted, Examples) {
  const auto l3 = laplacian(path_graph(3));
  EXPECT_EQ(char_poly_deleted(l3, 1), poly({1, -2, 1}));
  const auto l2 = laplacian(complete_graph(2));
  EXPECT_EQ(char_poly_deleted(l2, 0), poly({-1, 1}));
  EXPECT_EQ(char_poly_deleted(l2, 1), poly({-1, 1}));
  EXPECT_EQ(char_poly_deleted(IntMatrix(1, 1), 0), poly({1}));
  EXPECT_THROW(char_poly_deleted(l3, 3), DomainError);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(poly({0, -2, 1}), poly({0, 1})), poly({0, 1}));
  EXPECT_EQ(poly_gcd(poly({0, -6, 3}), IntPolynomial()), poly({0, -2, 1}));
  EXPECT_EQ(poly_gcd(poly({-1, 1}), poly({-2, 1})), poly({1}));
  EXPECT_THROW(poly_gcd(IntPolynomial(), IntPolynomial()), DomainError);
}

TEST(PolyGcd, NormalizedPrimitivePositive) {
  const auto g = poly_gcd(poly({2, -2}) * poly({3, 1}), poly({-4, 4}) * poly({5, 1}));
  EXPECT_EQ(g, poly({-1, 1}));
}

TEST(PolyGcd, DegreeIdentityOnRandomProducts) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> root(-4, 6);
  for (int iter = 0; iter < 60; ++iter) {
    IntPolynomial p = poly({1}), q = poly({1});
    for (int k = 0; k < 4; ++k) p = p * IntPolynomial::linear_root(root(rng));
    for (int k = 0; k < 3; ++k) q = q * IntPolynomial::linear_root(root(rng));
    p = p * IntPolynomial::constant(3);
    const auto g = poly_gcd(p, q);
    const auto quotient = exact_div(p, g);
    EXPECT_EQ(g.degree() + quotient.degree(), p.degree());
    EXPECT_EQ(quotient * g, p);
    // g divides q as well
    EXPECT_NO_THROW(exact_div(q, g));
  }
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(poly({0, -2, 1}), poly({0, 1})), poly({-2, 1}));
  const auto p = poly({0, 3, -4, 1});
  EXPECT_EQ(exact_div(p, poly({1})), p);
  EXPECT_THROW(exact_div(poly({1, 0, 1}), poly({-1, 1})), DomainError);
  EXPECT_THROW(exact_div(poly({1, 1}), poly({0, 2})), DomainError);
}

TEST(ExactDiv, SupportRoundTripOnP3) {
  const auto l = laplacian(path_graph(3));
  const auto psi = char_poly(l);
  const auto g = poly_gcd(psi, char_poly_deleted(l, 0));
  EXPECT_EQ(exact_div(psi, g) * g, psi);
}

TEST(IntegerRoots, Examples) {
  EXPECT_EQ(integer_roots(poly({0, 3, -4, 1}), 0, 3), (std::map<long, int>{{0, 1}, {1, 1}, {3, 1}}));
  EXPECT_TRUE(integer_roots(poly({1, 0, 1}), 0, 10).empty());
  EXPECT_EQ(integer_roots(poly({4, -4, 1}), 0, 5), (std::map<long, int>{{2, 2}}));
  EXPECT_THROW(integer_roots(IntPolynomial(), 0, 3), DomainError);
}

TEST(AllRootsInteger, Examples) {
  EXPECT_TRUE(all_roots_integer(poly({0, 3, -4, 1}), {{0, 1}, {1, 1}, {3, 1}}));
  EXPECT_FALSE(all_roots_integer(poly({-2, 0, 1}), {}));
  EXPECT_TRUE(all_roots_integer(poly({0, 0, 1}), {{0, 2}}));
  // t^3 - 2t has the integer root 0 only.
  EXPECT_FALSE(all_roots_integer(poly({0, -2, 0, 1}), {{0, 1}}));
}

TEST(Polynomial, ArithmeticAndPrinting) {
  const auto p = poly({0, -2, 1});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(p + poly({0, 2, -1}), IntPolynomial());
  EXPECT_EQ(p - p, IntPolynomial());
  EXPECT_EQ(p(BigInt(3)), 3);
  EXPECT_EQ(poly({0, -6, 3}).content(), 3);
  EXPECT_EQ(poly({0, 6, -3}).primitive(), poly({0, -2, 1}));
  EXPECT_FALSE(p.to_string().empty());
}

TEST(KernelBasis, Examples) {
  auto shifted = [](const Graph& g, long mu) {
    RatMatrix m = to_rational(laplacian(g));
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= mu;
    return m;
  };
  const auto k0 = kernel_basis(shifted(path_graph(3), 0));
  ASSERT_EQ(k0.size(), 1U);
  EXPECT_EQ(k0[0], (RatVector{1, 1, 1}));
  EXPECT_TRUE(kernel_basis(to_rational(IntMatrix::identity(3))).empty());
  const auto k1 = kernel_basis(shifted(path_graph(3), 1));
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_EQ(k1[0][0], -k1[0][2]);
  EXPECT_EQ(k1[0][1], 0);
}

TEST(KernelBasis, DimensionMatchesMultiplicity) {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 40; ++iter) {
    const auto g = testkit::random_graph(rng, 2 + iter % 8);
    const auto l = laplacian(g);
    for (const auto& [mu, mult] : integer_roots(char_poly(l), 0, static_cast<long>(g.order()))) {
      RatMatrix m = to_rational(l);
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= mu;
      const auto basis = kernel_basis(m);
      EXPECT_EQ(basis.size(), static_cast<std::size_t>(mult));
      for (const auto& v : basis) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          BigRational s = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
          EXPECT_EQ(s, 0);
        }
      }
    }
  }
}

TEST(Project, Examples) {
  const RatVector e0{1, 0, 0};
  EXPECT_EQ(project({RatVector{1, 1, 1}}, e0), (RatVector{BigRational(1, 3), BigRational(1, 3), BigRational(1, 3)}));
  EXPECT_EQ(project({RatVector{1, 0, -1}}, e0), (RatVector{BigRational(1, 2), 0, BigRational(-1, 2)}));
  const std::vector<RatVector> basis{{1, 2, 0}, {0, 1, 1}};
  const RatVector v{2, 7, 3};  // 2 b0 + 3 b1
  EXPECT_EQ(project(basis, v), v);
  EXPECT_THROW(project({RatVector{1, 2, 3}, RatVector{2, 4, 6}}, e0), DomainError);
}

TEST(Project, IdempotentsSumToIdentityOnIntegralSpectra) {
  for (const Graph& g : {path_graph(3), cycle_graph(4), cycle_graph(6), complete_graph(5), double_cone(path_graph(3)),
                         cartesian_product(complete_graph(3), path_graph(3))}) {
    SpectralAnalyzer sa(g);
    ASSERT_TRUE(sa.spectrum_integral());
    for (Vertex a = 0; a < g.order(); ++a) {
      RatVector sum(g.order());
      for (const auto& [mu, mult] : sa.integer_spectrum()) {
        const auto col = sa.projection_column(mu, a);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += col[i];
      }
      RatVector e(g.order());
      e[a] = 1;
      EXPECT_EQ(sum, e);
    }
  }
}

TEST(SolveFullPivot, SolvesAndRejectsSingular) {
  RatMatrix a{{2, 1}, {1, 3}};
  const auto x = solve_full_pivot(a, {3, 5});
  EXPECT_EQ(x, (RatVector{BigRational(4, 5), BigRational(7, 5)}));
  EXPECT_THROW(solve_full_pivot(RatMatrix{{1, 2}, {2, 4}}, {1, 2}), DomainError);
}

TEST(Determinant, Basics) {
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(SafeInt, DetectsOverflow) {
  using detail::SafeInt;
  const SafeInt big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + SafeInt(1), detail::Overflow);
  EXPECT_THROW(big * SafeInt(2), detail::Overflow);
  EXPECT_THROW(-SafeInt(std::numeric_limits<std::int64_t>::min()), detail::Overflow);
  EXPECT_EQ((SafeInt(6) * SafeInt(7)).value(), 42);
}

}  // namespace
