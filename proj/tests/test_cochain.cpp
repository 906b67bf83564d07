#include <doctest.h>

#include <cmath>
#include <random>

#include "gcx/cochain.hpp"

using namespace gcx;

namespace {

GAction point_action(const FiniteGroup& G) {
  return trivial_action(build_base({1.0}), G);
}

Cochain klein_twist(const GAction& A) {
  // phi(g,h) = (-1)^{g2 h1}, bits 1 = (1,0), 2 = (0,1), 3 = (1,1)
  Cochain c = Cochain::ones(2, 4, A.base.dim());
  auto bit = [](int g, int k) {
    return k == 0 ? (g == 1 || g == 3) : (g == 2 || g == 3);
  };
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      if (bit(g, 1) && bit(h, 0))
        for (int chi = 0; chi < A.base.dim(); ++chi) c.at(g, h, chi) = -1.0;
  refresh_normalized(c);
  return c;
}

Cochain random_unitary_1cochain(const GAction& A, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2 * 3.14159265358979323846);
  Cochain t = Cochain::ones(1, A.group.order, A.base.dim());
  for (int g = 1; g < t.N; ++g)
    for (int chi = 0; chi < t.n; ++chi) t.at(g, chi) = std::polar(1.0, ang(rng));
  return t;
}

} // namespace

TEST_CASE("coboundary of the Klein sign 1-cochain") {
  GAction A = point_action(klein_four());
  Cochain theta = Cochain::ones(1, 4, 1);
  theta.at(3, 0) = -1.0; // theta = (1,1,1,-1)
  Cochain d = coboundary(A, theta);
  CHECK(std::abs(d.at(1, 2, 0) + 1.0) < 1e-12); // d(theta)(a,b) = -1
  CHECK(std::abs(d.at(1, 1, 0) - 1.0) < 1e-12);
  CHECK(is_cocycle(A, d));
}

TEST_CASE("d o d = 1") {
  GAction A = point_action(symmetric3());
  Cochain theta = random_unitary_1cochain(A, 7);
  Cochain dd = coboundary(A, coboundary(A, theta));
  for (const cplx& v : dd.values) CHECK(std::abs(v - 1.0) < 1e-10);

  Cochain tri = Cochain::ones(3, 6, 1);
  CHECK_THROWS_AS(coboundary(A, tri), error);
}

TEST_CASE("klein twist is a nontrivial cocycle") {
  GAction A = point_action(klein_four());
  Cochain phi = klein_twist(A);
  CHECK(is_cocycle(A, phi));
  CHECK(!solve_coboundary(A, phi).has_value());

  CocycleWitness w;
  Cochain bad = phi;
  bad.at(1, 2, 0) = cplx(0.0, 1.0);
  CHECK(!is_cocycle(A, bad, 1e-9, &w));
  CHECK(w.residual > 0.5);
}

TEST_CASE("solve_coboundary recovers random coboundaries") {
  for (auto make : {+[] { return cyclic_group(2); }, +[] { return cyclic_group(4); },
                    +[] { return klein_four(); }, +[] { return symmetric3(); }}) {
    GAction A = point_action(make());
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
      Cochain theta = random_unitary_1cochain(A, seed);
      Cochain psi = coboundary(A, theta);
      auto sol = solve_coboundary(A, psi);
      REQUIRE(sol.has_value());
      Cochain d = coboundary(A, *sol);
      for (size_t i = 0; i < d.values.size(); ++i)
        CHECK(std::abs(d.values[i] - psi.values[i]) < 1e-8);
    }
  }
}

TEST_CASE("solve_coboundary with a permutation action") {
  FiniteGroup C2 = cyclic_group(2);
  FrobeniusBase B = build_base({4, 4, 4, 4});
  GAction A = install_action(B, C2, {{0, 1, 2, 3}, {0, 2, 1, 3}});
  for (unsigned long long seed : {11ull, 12ull}) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    Cochain theta = Cochain::ones(1, 2, 4);
    for (int chi = 0; chi < 4; ++chi) theta.at(1, chi) = std::polar(1.0, ang(rng));
    Cochain psi = coboundary(A, theta);
    auto sol = solve_coboundary(A, psi);
    REQUIRE(sol.has_value());
    Cochain d = coboundary(A, *sol);
    for (size_t i = 0; i < d.values.size(); ++i)
      CHECK(std::abs(d.values[i] - psi.values[i]) < 1e-8);
  }
}

TEST_CASE("unitarize splits modulus off a scaled cocycle") {
  GAction A = point_action(klein_four());
  Cochain phi = klein_twist(A);
  // scale by the coboundary of a positive 1-cochain
  Cochain r = Cochain::ones(1, 4, 1);
  r.at(1, 0) = 2.0;
  r.at(2, 0) = 0.5;
  r.at(3, 0) = 3.0;
  Cochain dr = coboundary(A, r);
  Cochain scaled = phi;
  for (size_t i = 0; i < scaled.values.size(); ++i) scaled.values[i] *= dr.values[i];
  auto [phi_u, tau] = unitarize(A, scaled);
  for (size_t i = 0; i < phi_u.values.size(); ++i) {
    CHECK(std::abs(std::abs(phi_u.values[i]) - 1.0) < 1e-12);
    CHECK(std::abs(phi_u.values[i] - phi.values[i]) < 1e-9);
  }
  Cochain dtau = coboundary(A, tau);
  for (size_t i = 0; i < scaled.values.size(); ++i)
    CHECK(std::abs(dtau.values[i] * phi_u.values[i] - scaled.values[i]) < 1e-9);
}

TEST_CASE("cohomologous: yes with certificate, no with pairing witness") {
  GAction A = point_action(klein_four());
  Cochain phi = klein_twist(A);
  Cochain theta = random_unitary_1cochain(A, 5);
  Cochain moved = phi;
  Cochain dth = coboundary(A, theta);
  for (size_t i = 0; i < moved.values.size(); ++i) moved.values[i] *= dth.values[i];

  CohomologousResult yes = cohomologous(A, moved, phi);
  REQUIRE(yes.rel == class_rel::yes);
  REQUIRE(yes.theta.has_value());
  Cochain d = coboundary(A, *yes.theta);
  for (size_t i = 0; i < d.values.size(); ++i)
    CHECK(std::abs(d.values[i] * phi.values[i] - moved.values[i]) < 1e-8);

  CohomologousResult no = cohomologous(A, phi, Cochain::ones(2, 4, 1));
  REQUIRE(no.rel == class_rel::no);
  CHECK(no.witness.find("-1") != std::string::npos);
}

TEST_CASE("obstruction: delta of a perturbed cocycle") {
  GAction A = point_action(klein_four());
  std::vector<std::vector<cplx>> mu4{{cplx(1, 0)}, {cplx(0, 1)}, {cplx(-1, 0)}, {cplx(0, -1)}};
  UnitSubgroup O = load_unit_subgroup(A, mu4);

  // genuine cocycle -> obstruction is identically 1
  Cochain phi = klein_twist(A);
  Cochain T = obstruction_delta(A, phi, O);
  for (const cplx& v : T.values) CHECK(std::abs(v - 1.0) < 1e-12);

  // mu_4-valued perturbation that is not a cocycle -> nontrivial T, still a 3-cocycle
  Cochain pert = phi;
  pert.at(1, 1, 0) *= cplx(0, 1);
  Cochain T2 = obstruction_delta(A, pert, O);
  bool nontrivial = false;
  for (const cplx& v : T2.values)
    if (std::abs(v - 1.0) > 0.5) nontrivial = true;
  CHECK(nontrivial);
  CHECK(cocycle3_residual(A, T2) < 1e-9);
  CHECK(is_cocycle(A, T2));

  // values outside O
  std::vector<std::vector<cplx>> mu2{{cplx(1, 0)}, {cplx(-1, 0)}};
  UnitSubgroup O2 = load_unit_subgroup(A, mu2);
  CHECK_THROWS_AS(obstruction_delta(A, pert, O2), error);

  // subgroup validation
  CHECK_THROWS_AS(load_unit_subgroup(A, {{cplx(1, 0)}, {cplx(0, 1)}}), error);
}
