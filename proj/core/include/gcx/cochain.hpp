#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gcx/base.hpp"

namespace gcx {

// Cochain on G valued in R^x: degree k in {1,2,3}, stored densely as an
// N^k x n complex array (n = number of characters of the base). The G-module
// structure is by character permutation: (g.x)_chi = x_{pi_g^{-1}(chi)}.
struct Cochain {
  int degree = 1;
  int N = 1; // group order
  int n = 1; // characters
  std::vector<cplx> values;
  bool normalized = false; // all-ones whenever any argument is the identity

  static Cochain ones(int degree, int N, int n);

  size_t idx1(int g, int chi) const { return (size_t)g * n + chi; }
  size_t idx2(int g, int h, int chi) const { return ((size_t)g * N + h) * n + chi; }
  size_t idx3(int g, int h, int k, int chi) const {
    return (((size_t)g * N + h) * N + k) * n + chi;
  }
  cplx& at(int g, int chi) { return values[idx1(g, chi)]; }
  cplx at(int g, int chi) const { return values[idx1(g, chi)]; }
  cplx& at(int g, int h, int chi) { return values[idx2(g, h, chi)]; }
  cplx at(int g, int h, int chi) const { return values[idx2(g, h, chi)]; }
  cplx& at(int g, int h, int k, int chi) { return values[idx3(g, h, k, chi)]; }
  cplx at(int g, int h, int k, int chi) const { return values[idx3(g, h, k, chi)]; }
};

// Checks shape against the action and that every value is nonzero.
void validate_cochain(const GAction& A, const Cochain& c, double tol = kDefaultTol);

// Marks c.normalized if values with an identity argument are all ones.
void refresh_normalized(Cochain& c, double tol = kDefaultTol);

// Inhomogeneous differential; degrees 1->2 and 2->3. Degree 3 input is
// rejected (UnsupportedDegree).
Cochain coboundary(const GAction& A, const Cochain& c);

struct CocycleWitness {
  int g = -1, h = -1, k = -1, chi = -1;
  double residual = 0.0;
};

// Cocycle test for degrees 1..3 (degree-3 identity evaluated directly).
bool is_cocycle(const GAction& A, const Cochain& c, double tol = kDefaultTol,
                CocycleWitness* witness = nullptr);

struct UnitarizeResult {
  Cochain phi_u; // unitary-valued 2-cocycle
  Cochain tau;   // positive-real-valued 1-cochain, phi = dtau * phi_u
};

UnitarizeResult unitarize(const GAction& A, const Cochain& phi, double tol = kDefaultTol);

// Solves d(theta) = psi for a unitary-valued 2-cochain psi. Returns nullopt
// when no solution exists (psi not a cocycle, or class nontrivial).
// The torsion part of the solution is found exactly over root-of-unity
// exponents modulo M = lcm(search_modulus, N^2); SearchBudgetExceeded if M
// or the system size is out of desk range.
std::optional<Cochain> solve_coboundary(const GAction& A, const Cochain& psi,
                                        int search_modulus = 0, // 0 -> |G|
                                        double tol = kDefaultTol);

enum class class_rel { yes, no, unknown };

struct CohomologousResult {
  class_rel rel = class_rel::unknown;
  std::optional<Cochain> theta; // for yes: phi1 = d(theta) * phi2
  std::string witness;          // for no: distinguishing invariant
};

CohomologousResult cohomologous(const GAction& A, const Cochain& phi1, const Cochain& phi2,
                                int search_modulus = 0, double tol = kDefaultTol);

// Finite subgroup of R^x given by an explicit element list; closure,
// presence of 1 and G-stability are checked at load.
struct UnitSubgroup {
  std::vector<std::vector<cplx>> elements; // each an n-vector
};

UnitSubgroup load_unit_subgroup(const GAction& A, std::vector<std::vector<cplx>> elements,
                                double tol = kDefaultTol);

// d(phi) with every value snapped to the nearest element of O; NotOValued if
// some value is farther than tol from all of O. The result is the
// connecting-homomorphism representative T.
Cochain obstruction_delta(const GAction& A, const Cochain& phi, const UnitSubgroup& O,
                          double tol = kDefaultTol);

// Degree-3 cocycle identity residual (max over quadruples); used to certify
// obstruction_delta outputs without introducing degree-4 cochains.
double cocycle3_residual(const GAction& A, const Cochain& omega);

namespace detail {
// Solve A x = b (mod M) over Z/M; A is rows x cols with small integer
// entries. Returns solution vector or nullopt.
std::optional<std::vector<long long>> solve_linear_mod(
    std::vector<std::vector<long long>> A, std::vector<long long> b, long long M);
} // namespace detail

} // namespace gcx
