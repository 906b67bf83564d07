#include "gcx/verlinde.hpp"

#include <cmath>
#include <random>

namespace gcx {

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx principal_root(cplx z, int m) {
  double arg = std::arg(z);
  if (arg < 0) arg += 2 * kPi;
  return std::polar(std::pow(std::abs(z), 1.0 / m), arg / m);
}

cplx mu_from(const Cochain& c2, const GAction& action, int g, int chi) {
  const FiniteGroup& G = action.group;
  const int ord = element_order(G, g);
  cplx p(1.0, 0.0);
  int x = g; // g^j
  for (int j = 1; j < ord; ++j) {
    p *= c2.at(g, x, chi);
    x = G.mul(x, g);
  }
  return principal_root(p, ord);
}

void check_component(const AlgebraElement& a, int g) {
  for (const auto& [k, v] : a.coeffs)
    if (k.first != g)
      fail(errc::WrongComponent, "element has support outside the g=" +
                                     std::to_string(g) + " component");
}
} // namespace

TwistedCharacterTable principal_gauge(const CrossedAlgebra& A) {
  const int N = A.group.order, n = A.base.dim();
  TwistedCharacterTable T;
  T.mu.assign(N, std::vector<cplx>(n, cplx(0)));
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      if (A.fixed_by(g, chi)) T.mu[g][chi] = mu_from(A.phi, A.action, g, chi);
  return T;
}

TwistedCharacterTable redraw_gauge(const CrossedAlgebra& A, unsigned long long seed,
                                   bool double_roots) {
  TwistedCharacterTable T = principal_gauge(A);
  std::mt19937_64 rng(seed);
  // Redraw along each cyclic subgroup <g>: mu[g^j] picks up zeta^j for a random
  // root of unity zeta, so inverse pairs g, g^{-1} stay coherent.
  for (int g = 1; g < A.group.order; ++g) {
    const int ord = element_order(A.group, g);
    int m = ord * (double_roots ? 2 : 1);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int chi = 0; chi < A.base.dim(); ++chi) {
      if (!A.fixed_by(g, chi)) continue;
      cplx zeta = std::polar(1.0, 2 * kPi * pick(rng) / m);
      cplx z = zeta;
      int x = g;
      for (int j = 1; j < ord; ++j) {
        T.mu[x][chi] *= z;
        z *= zeta;
        x = A.group.mul(x, g);
      }
    }
  }
  return T;
}

std::vector<cplx> twisted_character(const CrossedAlgebra& A, int g, int chi,
                                    const TwistedCharacterTable* T) {
  if (chi < 0 || chi >= A.base.dim() || g < 0 || g >= A.group.order)
    fail(errc::BadInput, "twisted_character: bad indices");
  if (!A.fixed_by(g, chi))
    fail(errc::NotFixed, "chi" + std::to_string(chi) + " not fixed by g=" + std::to_string(g));
  const int ord = element_order(A.group, g);
  cplx mu1 = T ? T->mu[g][chi] : mu_from(A.phi, A.action, g, chi);
  std::vector<cplx> out(ord);
  out[0] = 1.0;
  int x = 0; // g^k
  for (int k = 0; k + 1 < ord; ++k) {
    // mu(g^{k+1}) = mu(g) mu(g^k) / phi_chi(g, g^k)
    out[k + 1] = mu1 * out[k] / A.phi.at(g, x, chi);
    x = A.group.mul(g, x);
  }
  return out;
}

cplx twisted_eval(const CrossedAlgebra& A, const TwistedCharacterTable& T, int g, int chi,
                  const AlgebraElement& a) {
  if (!A.fixed_by(g, chi))
    fail(errc::NotFixed, "chi" + std::to_string(chi) + " not fixed by g=" + std::to_string(g));
  check_component(a, g);
  auto it = a.coeffs.find({g, chi});
  if (it == a.coeffs.end()) return 0.0;
  return it->second * T.mu[g][chi];
}

cplx twist_scalar(const CrossedAlgebra& A, int chi, const std::vector<int>& gs,
                  const TwistedCharacterTable* Tin) {
  TwistedCharacterTable Tp;
  const TwistedCharacterTable& T = Tin ? *Tin : (Tp = principal_gauge(A));
  for (int g : gs)
    if (!A.fixed_by(g, chi))
      fail(errc::NotFixed,
           "chi" + std::to_string(chi) + " not fixed by g=" + std::to_string(g));
  if (gs.empty()) return 1.0;
  // product of basis elements E[g_i, chi]
  AlgebraElement p = basis_element(A, gs[0], chi);
  int prod = gs[0];
  for (size_t i = 1; i < gs.size(); ++i) {
    p = multiply(p, basis_element(A, gs[i], chi));
    prod = A.group.mul(prod, gs[i]);
  }
  auto it = p.coeffs.find({prod, chi});
  if (it == p.coeffs.end() || std::abs(it->second) < 1e-300)
    fail(errc::ZeroDenominator, "basis product vanished (corrupt data)");
  cplx num(1.0, 0.0);
  for (int g : gs) num *= T.mu[g][chi];
  return num / (it->second * T.mu[prod][chi]);
}

cplx tuple_scalar_cochain(const GAction& action, const Cochain& c2, int chi,
                          const std::vector<int>& gs, const TwistedCharacterTable* T) {
  if (gs.empty()) return 1.0;
  const FiniteGroup& G = action.group;
  auto mu = [&](int g) { return T ? T->mu[g][chi] : mu_from(c2, action, g, chi); };
  cplx c(1.0, 0.0);
  int prod = gs[0];
  for (size_t i = 1; i < gs.size(); ++i) {
    c *= c2.at(prod, gs[i], chi);
    prod = G.mul(prod, gs[i]);
  }
  cplx num(1.0, 0.0);
  for (int g : gs) num *= mu(g);
  return num / (c * mu(prod));
}

cplx verlinde_genus0(const CrossedAlgebra& A,
                     const std::vector<std::pair<int, AlgebraElement>>& elems,
                     const TwistedCharacterTable* Tin) {
  TwistedCharacterTable Tp;
  const TwistedCharacterTable& T = Tin ? *Tin : (Tp = principal_gauge(A));
  int prod = 0;
  std::vector<int> gs;
  for (const auto& [g, a] : elems) {
    check_component(a, g);
    gs.push_back(g);
    prod = A.group.mul(prod, g);
  }
  if (prod != 0) fail(errc::ProductNotIdentity, "g_1...g_n != 1");
  auto sub = generated_subgroup(A.group, gs);
  cplx out = 0.0;
  for (int chi : fixed_characters(A.action, sub)) {
    cplx num(1.0, 0.0);
    bool zero = false;
    for (const auto& [g, a] : elems) {
      cplx v = twisted_eval(A, T, g, chi, a);
      if (v == cplx(0)) { zero = true; break; }
      num *= v;
    }
    if (zero) continue;
    out += num / (A.base.codegrees[chi] * twist_scalar(A, chi, gs, &T));
  }
  return out;
}

AlgebraElement omega(const CrossedAlgebra& A, int g, int h) {
  AlgebraElement out;
  out.owner = &A;
  for (int chi = 0; chi < A.base.dim(); ++chi) {
    if (!A.fixed_by(g, chi)) continue;
    AlgebraElement e = basis_element(A, g, chi);
    double gram = inner(e, e).real();
    AlgebraElement term = multiply(e, act(h, star(e)));
    for (const auto& [k, v] : term.coeffs) out.coeffs[k] += v / gram;
  }
  return out.prune();
}

cplx verlinde_any_genus(const CrossedAlgebra& A,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::pair<int, AlgebraElement>>& elems,
                        const TwistedCharacterTable* Tin) {
  TwistedCharacterTable Tp;
  const TwistedCharacterTable& T = Tin ? *Tin : (Tp = principal_gauge(A));
  const FiniteGroup& G = A.group;
  const int r = (int)pairs.size();
  int prod = 0;
  std::vector<int> gens, tuple;
  for (const auto& [g, h] : pairs) {
    prod = G.mul(prod, commutator(G, g, h));
    gens.push_back(g);
    gens.push_back(h);
    tuple.push_back(g);
    tuple.push_back(h);
    tuple.push_back(G.inv(g));
    tuple.push_back(G.inv(h));
  }
  for (const auto& [m, a] : elems) {
    check_component(a, m);
    prod = G.mul(prod, m);
    gens.push_back(m);
    tuple.push_back(m);
  }
  if (prod != 0) fail(errc::ProductNotIdentity, "[g1,h1]...[gr,hr] m_1...m_s != 1");
  auto sub = generated_subgroup(G, gens);
  cplx out = 0.0;
  for (int chi : fixed_characters(A.action, sub)) {
    cplx num = std::pow(A.base.codegrees[chi], r - 1);
    bool zero = false;
    for (const auto& [m, a] : elems) {
      cplx v = twisted_eval(A, T, m, chi, a);
      if (v == cplx(0)) { zero = true; break; }
      num *= v;
    }
    if (zero) continue;
    out += num / twist_scalar(A, chi, tuple, &T);
  }
  return out;
}

cplx brute_force_lambda(const CrossedAlgebra& A, const std::vector<AlgebraElement>& elems) {
  AlgebraElement p = unit(A);
  for (const auto& a : elems) {
    if (a.owner != &A) fail(errc::OwnerMismatch, "brute_force_lambda");
    p = multiply(p, a);
  }
  return lambda(p);
}

FusionResult fusion_coefficients(const CrossedAlgebra& A,
                                 const std::vector<AlgebraElement>& basis, double tol) {
  const int m = (int)basis.size();
  const double eps = std::max(tol, 1e-9) * 100;
  std::vector<double> norms(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      cplx v = inner(basis[i], basis[j]);
      if (i == j) {
        if (!(v.real() > eps) || std::abs(v.imag()) > eps)
          fail(errc::NotOrthogonal, "basis element " + std::to_string(i) +
                                        " has non-positive norm");
        norms[i] = v.real();
      } else if (std::abs(v) > eps) {
        fail(errc::NotOrthogonal,
             "<b_" + std::to_string(i) + ", b_" + std::to_string(j) + "> != 0");
      }
    }
  }
  if (m != A.dim())
    fail(errc::NotSpanning, std::to_string(m) + " orthogonal elements in dimension " +
                                std::to_string(A.dim()));
  FusionResult R;
  R.N.assign(m, std::vector<std::vector<cplx>>(m, std::vector<cplx>(m)));
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      AlgebraElement bij = multiply(basis[i], basis[j]);
      for (int k = 0; k < m; ++k) {
        cplx v = lambda(multiply(bij, star(basis[k]))) / norms[k];
        R.N[i][j][k] = v;
        double re = v.real();
        double d = std::abs(v.imag());
        d = std::max(d, std::abs(re - std::round(re)));
        if (std::round(re) < -0.5) d = std::max(d, -re);
        worst = std::max(worst, d);
      }
    }
  R.integrality_residual = worst;
  R.nonneg_integral = worst <= 1e-8;
  return R;
}

} // namespace gcx
