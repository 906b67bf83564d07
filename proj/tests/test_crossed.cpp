#include <doctest.h>

#include <cmath>
#include <random>

#include "gcx/crossed.hpp"
#include "gcx/io.hpp"

using namespace gcx;

namespace {

CrossedAlgebra klein_twist_algebra() {
  GAction A = trivial_action(build_base({1.0}), klein_four());
  return construct_extension(A, io::load_cochain("twist", A));
}

CrossedAlgebra toric_swap_algebra() {
  FrobeniusBase B = io::load_base("toric");
  FiniteGroup C2 = cyclic_group(2);
  GAction act = io::load_action("swap", B, C2);
  return construct_extension(act, Cochain::ones(2, 2, 4));
}

} // namespace

TEST_CASE("construct the Klein twisted group algebra") {
  CrossedAlgebra A = klein_twist_algebra();
  CHECK(A.dim() == 4);
  CHECK(verify_crossed_axioms(A).all_pass());

  // E_a E_b E_a E_b = phi(a,b)phi(ab,a)phi(b,b) E_1 with lambda = -1
  AlgebraElement p = basis_element(A, 1, 0);
  for (int g : {2, 1, 2}) p = multiply(p, basis_element(A, g, 0));
  CHECK(std::abs(lambda(p) + 1.0) < 1e-12);
}

TEST_CASE("construct the toric-code swap extension") {
  CrossedAlgebra A = toric_swap_algebra();
  CHECK(A.base.dim() == 4);
  CHECK(A.dim() == 6); // 4 trivial-sector + 2 swap-sector basis vectors
  CHECK(verify_crossed_axioms(A).all_pass());
}

TEST_CASE("trivial cocycle gives the transformation algebra") {
  GAction act = trivial_action(build_base({2.0, 2.0}), cyclic_group(3));
  CrossedAlgebra A = construct_extension(act, Cochain::ones(2, 3, 2));
  CHECK(A.dim() == 6);
  AxiomReport R = verify_crossed_axioms(A);
  CHECK(R.all_pass());
  // unit, lambda and star behave on the base
  AlgebraElement one = unit(A);
  CHECK(std::abs(lambda(one) - 1.0) < 1e-12); // sum 1/codegree = 1/2 + 1/2
  AlgebraElement x = from_base(A, {cplx(0, 1), cplx(2, 0)});
  CHECK(std::abs(lambda(multiply(x, star(x))) - (1.0 / 2 + 4.0 / 2)) < 1e-12);
}

TEST_CASE("action formula matches conjugation of components") {
  CrossedAlgebra A = klein_twist_algebra();
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      AlgebraElement e = basis_element(A, h, 0);
      AlgebraElement ge = act(g, e);
      int target = A.group.conj(g, h);
      for (const auto& [k, v] : ge.coeffs) CHECK(k.first == target);
      // g . (x y) = (g.x)(g.y)
      AlgebraElement f = basis_element(A, g, 0);
      CHECK(std::abs(lambda(add(act(g, multiply(e, e)),
                                scale(-1.0, multiply(act(g, e), act(g, e))))) ) < 1e-10);
      (void)f;
    }
}

TEST_CASE("owner mismatch is rejected") {
  CrossedAlgebra A = klein_twist_algebra();
  CrossedAlgebra B = toric_swap_algebra();
  AlgebraElement x = basis_element(A, 1, 0);
  AlgebraElement y = basis_element(B, 0, 0);
  CHECK_THROWS_AS(multiply(x, y), error);
  CHECK_THROWS_AS(add(x, y), error);
}

TEST_CASE("verify catches corrupted data") {
  CrossedAlgebra A = klein_twist_algebra();
  A.phi.at(1, 2, 0) = cplx(0.0, 1.0); // breaks the cocycle identity
  AxiomReport R = verify_crossed_axioms(A);
  CHECK(!R.all_pass());

  CrossedAlgebra B = klein_twist_algebra();
  B.theta.at(1, 0) = -1.0; // star no longer squares to the identity
  CHECK(!verify_crossed_axioms(B).all_pass());
}

TEST_CASE("extract_cocycle round trip on the twist algebra") {
  CrossedAlgebra A = klein_twist_algebra();
  ExtractResult E = extract_cocycle(to_raw(A));
  CHECK(is_cocycle(A.action, E.phi));
  CohomologousResult R = cohomologous(A.action, E.phi, A.phi);
  CHECK(R.rel == class_rel::yes);
}

TEST_CASE("extract_cocycle after a basis rescaling") {
  CrossedAlgebra A = toric_swap_algebra();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0.0, 6.28);
  Cochain c = Cochain::ones(1, 2, 4);
  for (int chi = 0; chi < 4; ++chi)
    if (A.index_of(1, chi) >= 0) c.at(1, chi) = std::polar(1.0, ang(rng));
  ExtractResult E = extract_cocycle(to_raw_rescaled(A, c));
  CHECK(is_cocycle(A.action, E.phi));
  CohomologousResult R = cohomologous(A.action, E.phi, A.phi);
  CHECK(R.rel == class_rel::yes);
}

TEST_CASE("random star-compatible cocycles construct valid algebras") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ang(0.0, 6.28);
  for (int trial = 0; trial < 5; ++trial) {
    GAction act = trivial_action(build_base({1.0, 3.0}), cyclic_group(4));
    // random coboundary twist of the trivial cocycle is always star-compatible
    Cochain theta = Cochain::ones(1, 4, 2);
    for (int g = 1; g < 4; ++g)
      for (int chi = 0; chi < 2; ++chi) theta.at(g, chi) = std::polar(1.0, ang(rng));
    Cochain phi = coboundary(act, theta);
    CrossedAlgebra A = construct_extension(act, phi);
    CHECK(verify_crossed_axioms(A).all_pass());
  }
}
