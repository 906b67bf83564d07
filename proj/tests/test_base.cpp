#include <doctest.h>

#include <cmath>

#include "gcx/base.hpp"

using namespace gcx;
using doctest::Approx;

TEST_CASE("build_base validates codegrees") {
  FrobeniusBase B = build_base({1.0});
  CHECK(B.dim() == 1);
  CHECK(B.lambda_echi(0) == Approx(1.0));

  FrobeniusBase B2 = build_base({2.0, 2.0});
  CHECK(B2.dim() == 2);
  CHECK(B2.lambda_echi(1) == Approx(0.5));

  CHECK_THROWS_AS(build_base({1.0, -1.0}), error);
  CHECK_THROWS_AS(build_base({0.0}), error);
}

static std::vector<std::vector<std::vector<cplx>>> group_ring(int m) {
  std::vector<std::vector<std::vector<cplx>>> N(
      m, std::vector<std::vector<cplx>>(m, std::vector<cplx>(m, cplx(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) N[i][j][(i + j) % m] = 1.0;
  return N;
}

TEST_CASE("diagonalize Z/2 ring") {
  auto N = group_ring(2);
  FrobeniusBase B = diagonalize_fusion_ring(N, {0, 1});
  REQUIRE(B.dim() == 2);
  CHECK(B.codegrees[0] == Approx(2.0));
  CHECK(B.codegrees[1] == Approx(2.0));
  REQUIRE(B.fusion.has_value());
  // characters (1,1) and (1,-1) in some deterministic order
  const auto& X = B.fusion->X;
  CHECK(std::abs(X[0][0] - cplx(1)) < 1e-9);
  CHECK(std::abs(X[0][1] - cplx(1)) < 1e-9);
  CHECK(std::abs(X[1][0] * X[1][1] + cplx(1)) < 1e-9); // eigenvalues +-1
}

TEST_CASE("diagonalize Z/m ring gives codegrees m") {
  for (int m : {3, 4, 5}) {
    std::vector<int> dual(m);
    for (int i = 0; i < m; ++i) dual[i] = (m - i) % m;
    FrobeniusBase B = diagonalize_fusion_ring(group_ring(m), dual);
    REQUIRE(B.dim() == m);
    for (int chi = 0; chi < m; ++chi) CHECK(B.codegrees[chi] == Approx((double)m));
  }
}

TEST_CASE("diagonalize Fibonacci ring") {
  std::vector<std::vector<std::vector<cplx>>> N(
      2, std::vector<std::vector<cplx>>(2, std::vector<cplx>(2, cplx(0))));
  N[0][0][0] = N[0][1][1] = N[1][0][1] = 1.0;
  N[1][1][0] = N[1][1][1] = 1.0;
  FrobeniusBase B = diagonalize_fusion_ring(N, {0, 1});
  REQUIRE(B.dim() == 2);
  double lo = std::min(B.codegrees[0], B.codegrees[1]);
  double hi = std::max(B.codegrees[0], B.codegrees[1]);
  CHECK(lo == Approx((5.0 - std::sqrt(5.0)) / 2).epsilon(1e-9));
  CHECK(hi == Approx((5.0 + std::sqrt(5.0)) / 2).epsilon(1e-9));
}

TEST_CASE("diagonalize rejects bad rings") {
  // non-commutative: b1 b1 = b0 but tables disagree
  std::vector<std::vector<std::vector<cplx>>> N(
      2, std::vector<std::vector<cplx>>(2, std::vector<cplx>(2, cplx(0))));
  N[0][0][0] = N[0][1][1] = N[1][0][1] = 1.0;
  N[1][1][0] = 1.0;
  N[1][0][1] = 2.0; // breaks commutativity with N[0][1][1] = 1
  CHECK_THROWS_AS(diagonalize_fusion_ring(N, {0, 1}), error);
}

TEST_CASE("round trip: structure constants from X") {
  auto N = group_ring(4);
  std::vector<int> dual{0, 3, 2, 1};
  FrobeniusBase B = diagonalize_fusion_ring(N, dual);
  const auto& X = B.fusion->X;
  const int m = 4, n = B.dim();
  // N[i][j][k] = lambda(b_i b_j b_{k*}) = sum_chi X[i]X[j]X[dual k] / codegree
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        cplx acc = 0;
        for (int chi = 0; chi < n; ++chi)
          acc += X[i][chi] * X[j][chi] * X[dual[k]][chi] / B.codegrees[chi];
        CHECK(std::abs(acc - N[i][j][k]) < 1e-8);
      }
}

TEST_CASE("orthogonality of the alpha elements") {
  auto N = group_ring(3);
  FrobeniusBase B = diagonalize_fusion_ring(N, {0, 2, 1});
  const int n = B.dim();
  // alpha_chi in character coordinates: codegree * indicator of chi.
  // <alpha_chi, alpha_chi'> = lambda(alpha alpha'^*) = 0 for distinct chi.
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = 0; c2 < n; ++c2) {
      cplx ip = c1 == c2 ? cplx(B.codegrees[c1]) : cplx(0);
      cplx expect = c1 == c2 ? std::conj(cplx(B.codegrees[c1])) *
                                   cplx(B.codegrees[c1]) * B.lambda_echi(c1)
                             : cplx(0);
      CHECK(std::abs(ip - expect) < 1e-8);
    }
}

TEST_CASE("install_action validates") {
  FrobeniusBase B = build_base({4, 4, 4, 4});
  FiniteGroup C2 = cyclic_group(2);
  GAction A = install_action(B, C2, {{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK(A.apply(1, 1) == 2);
  CHECK(A.apply_inv(1, 2) == 1);

  // not a homomorphism: order-2 group, order-3 permutation
  CHECK_THROWS_AS(install_action(B, C2, {{0, 1, 2, 3}, {1, 2, 0, 3}}), error);

  FrobeniusBase B2 = build_base({1, 2});
  CHECK_THROWS_AS(install_action(B2, C2, {{0, 1}, {1, 0}}), error);
}

TEST_CASE("fixed_characters") {
  FrobeniusBase B = build_base({4, 4, 4, 4});
  FiniteGroup C2 = cyclic_group(2);
  GAction A = install_action(B, C2, {{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK(fixed_characters(A, {}) == std::vector<int>{0, 1, 2, 3});
  CHECK(fixed_characters(A, {0}) == std::vector<int>{0, 1, 2, 3});
  CHECK(fixed_characters(A, {1}) == std::vector<int>{0, 3});
}
