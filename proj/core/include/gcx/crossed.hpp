#pragma once
#include <map>
#include <utility>

#include "gcx/cochain.hpp"

namespace gcx {

// The extension A^phi: basis E[g,chi] for chi in Sim^g, multiplication
// E[g,chi] E[h,chi] = phi_chi(g,h) E[gh,chi], star via theta, G-action via
// the phi-ratio formula. E[g,chi] spans the g-component.
struct CrossedAlgebra {
  FrobeniusBase base;
  FiniteGroup group;
  GAction action;
  std::vector<std::pair<int, int>> basis;    // (g, chi)
  std::vector<std::vector<int>> basis_index; // [g][chi] -> basis pos or -1
  Cochain phi;   // unitary, gauged so phi(g, g^-1) = 1
  Cochain theta; // star: E[g,chi]^* = theta(g)_chi E[g^-1,chi]

  int index_of(int g, int chi) const { return basis_index[g][chi]; }
  bool fixed_by(int g, int chi) const { return action.perm[g][chi] == chi; }
  int dim() const { return (int)basis.size(); }
};

struct AlgebraElement {
  const CrossedAlgebra* owner = nullptr;
  std::map<std::pair<int, int>, cplx> coeffs; // (g,chi) -> coefficient

  AlgebraElement& prune(double eps = 1e-14);
};

// Pipeline: validate cocycle -> unitarize -> gauge phi(g,g^-1)=1 ->
// solve star cochain theta -> verify star axioms.
CrossedAlgebra construct_extension(const GAction& action, const Cochain& phi,
                                   double tol = kDefaultTol);

AlgebraElement basis_element(const CrossedAlgebra& A, int g, int chi);
AlgebraElement unit(const CrossedAlgebra& A);
AlgebraElement from_base(const CrossedAlgebra& A, const std::vector<cplx>& x);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(cplx c, const AlgebraElement& x);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement star(const AlgebraElement& x);
AlgebraElement act(int g, const AlgebraElement& x);
cplx lambda(const AlgebraElement& x);
cplx inner(const AlgebraElement& x, const AlgebraElement& y); // lambda(x y*)

struct AxiomCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

AxiomReport verify_crossed_axioms(const CrossedAlgebra& A, double tol = kDefaultTol);

// A crossed-algebra-shaped input with explicit tables, for cocycle
// extraction from data that did not come out of construct_extension.
struct RawAlgebra {
  FrobeniusBase base;
  FiniteGroup group;
  GAction action;
  std::vector<std::pair<int, int>> basis;
  // mult[i][j] : sparse coefficients over basis positions
  std::vector<std::vector<std::map<int, cplx>>> mult;
  std::vector<std::map<int, cplx>> star_tab;
};

RawAlgebra to_raw(const CrossedAlgebra& A);
// Raw tables after the basis rescaling E[g,chi] -> c(g)_chi E[g,chi].
RawAlgebra to_raw_rescaled(const CrossedAlgebra& A, const Cochain& c);

struct ExtractResult {
  Cochain phi;
  Cochain theta;
  bool regauged = false; // input basis was not phi(g,g^-1)=1 aligned
};

// Reads phi_chi(g,h) off the fixed characters and extends to a full
// 2-cocycle orbit-by-orbit through the stabilizer (Shapiro-style pullback).
ExtractResult extract_cocycle(const RawAlgebra& raw, double tol = kDefaultTol);

} // namespace gcx
