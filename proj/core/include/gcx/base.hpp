#pragma once
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gcx/group.hpp"

namespace gcx {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

// Optional fusion presentation of a commutative Frobenius *-algebra:
// integer (or complex) structure constants N[i][j][k] for b_i b_j = sum_k N b_k,
// duality involution i -> dual[i], and the character matrix X[i][chi] = chi(b_i).
struct FusionData {
  std::vector<std::string> basis;              // labels b_i
  std::vector<std::vector<std::vector<cplx>>> N; // N[i][j][k]
  std::vector<int> duality;                    // involution, N[i][dual(i)][0] = 1
  std::vector<std::vector<cplx>> X;            // X[i][chi] = chi(b_i)
};

// Commutative Frobenius *-algebra in diagonal character coordinates:
// characters chi with codegrees chi(alpha_chi) > 0. lambda(e_chi) = 1/codegree.
// The *-map is componentwise conjugation.
struct FrobeniusBase {
  std::vector<std::string> characters;
  std::vector<double> codegrees;
  std::optional<FusionData> fusion;

  int dim() const { return (int)characters.size(); }
  double lambda_echi(int chi) const { return 1.0 / codegrees[chi]; }
};

FrobeniusBase build_base(const std::vector<double>& codegrees,
                         const std::vector<std::string>& labels = {});

// Simultaneous diagonalization of the left-multiplication matrices of a
// commutative associative ring with basis b_0 = unit. Characters come out
// sorted lexicographically by value vector rounded to 1e-6.
FrobeniusBase diagonalize_fusion_ring(const std::vector<std::vector<std::vector<cplx>>>& N,
                                      const std::vector<int>& duality,
                                      const std::vector<std::string>& basis_labels = {},
                                      double tol = kDefaultTol,
                                      unsigned long long seed = 0);

// Action of G on the characters of a base, pi_g(chi) = {}^g chi, preserving
// codegrees. A left action: pi_g o pi_h = pi_{gh}.
struct GAction {
  FiniteGroup group;
  FrobeniusBase base;
  std::vector<std::vector<int>> perm; // perm[g][chi] = pi_g(chi)

  int apply(int g, int chi) const { return perm[g][chi]; }
  int apply_inv(int g, int chi) const { return perm[group.inv(g)][chi]; }
};

GAction install_action(const FrobeniusBase& base, const FiniteGroup& group,
                       const std::vector<std::vector<int>>& perm,
                       double tol = kDefaultTol);

// { chi : pi_g(chi) = chi for all g in S }. Empty S means all characters.
std::vector<int> fixed_characters(const GAction& action, const std::vector<int>& S);

GAction trivial_action(const FrobeniusBase& base, const FiniteGroup& group);

} // namespace gcx
