#pragma once
#include "gcx/crossed.hpp"

namespace gcx {

// One gauge value mu_chi(g) per basis pair (g,chi); the cyclic-span values
// mu_chi(g^k) follow by the recurrence mu(g^{k+1}) = mu(g) mu(g^k) / phi_chi(g,g^k).
// Default gauge: principal o(g)-th root of prod_{j=1}^{o(g)-1} phi_chi(g,g^j).
struct TwistedCharacterTable {
  std::vector<std::vector<cplx>> mu; // [g][chi]; 0 where chi not fixed by g
};

TwistedCharacterTable principal_gauge(const CrossedAlgebra& A);

// Principal gauge times random o(g)-th roots of unity (2 o(g)-th roots when
// double_roots is set), seeded; used by the gauge-independence tests.
TwistedCharacterTable redraw_gauge(const CrossedAlgebra& A, unsigned long long seed,
                                   bool double_roots = false);

// Gauge values of chi^g on the cyclic span: k = 0..o(g)-1 -> mu_chi(g^k).
std::vector<cplx> twisted_character(const CrossedAlgebra& A, int g, int chi,
                                    const TwistedCharacterTable* T = nullptr);

// chi^g(a) for a in the g-component.
cplx twisted_eval(const CrossedAlgebra& A, const TwistedCharacterTable& T, int g, int chi,
                  const AlgebraElement& a);

// phi_chi(g_1,...,g_n): the scalar with
// chi^{g_1}(a_1)...chi^{g_n}(a_n) = phi_chi(...) chi^{g_1...g_n}(a_1...a_n),
// computed from basis-element products.
cplx twist_scalar(const CrossedAlgebra& A, int chi, const std::vector<int>& gs,
                  const TwistedCharacterTable* T = nullptr);

// Same scalar evaluated for an arbitrary 2-cochain (used for phi_1 layers);
// mu defaults to the principal gauge of that cochain.
cplx tuple_scalar_cochain(const GAction& action, const Cochain& c2, int chi,
                          const std::vector<int>& gs,
                          const TwistedCharacterTable* T = nullptr);

// lambda(a_1...a_n) by the genus-0 character sum; requires a_i in A_{g_i}
// and g_1...g_n = 1.
cplx verlinde_genus0(const CrossedAlgebra& A,
                     const std::vector<std::pair<int, AlgebraElement>>& elems,
                     const TwistedCharacterTable* T = nullptr);

// Handle element: sum over an orthonormal basis x of A_g of x * h(x^*).
AlgebraElement omega(const CrossedAlgebra& A, int g, int h);

// lambda(Omega_{g_1,h_1}...Omega_{g_r,h_r} a_1...a_s) by the character sum
// over Sim^{G0}, G0 generated by all arguments.
cplx verlinde_any_genus(const CrossedAlgebra& A,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::pair<int, AlgebraElement>>& elems,
                        const TwistedCharacterTable* T = nullptr);

// Oracle: lambda of the left-to-right product via multiply.
cplx brute_force_lambda(const CrossedAlgebra& A, const std::vector<AlgebraElement>& elems);

struct FusionResult {
  std::vector<std::vector<std::vector<cplx>>> N; // N[i][j][k]
  bool nonneg_integral = false;
  double integrality_residual = 0.0;
};

// N_{ij}^k = lambda(b_i b_j b_k^*) / <b_k,b_k> for an orthogonal spanning basis.
FusionResult fusion_coefficients(const CrossedAlgebra& A,
                                 const std::vector<AlgebraElement>& basis,
                                 double tol = kDefaultTol);

} // namespace gcx
