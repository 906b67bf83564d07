#include "gcx/cochain.hpp"

#include <cmath>
#include <numeric>

namespace gcx {

namespace {
constexpr double kPi = 3.14159265358979323846;

size_t pow_sz(int N, int k) {
  size_t r = 1;
  for (int i = 0; i < k; ++i) r *= (size_t)N;
  return r;
}

// component chi of g.x for x in R^x
cplx acted(const GAction& A, int g, const std::vector<cplx>& x, int chi) {
  return x[A.apply_inv(g, chi)];
}
} // namespace

Cochain Cochain::ones(int degree, int N, int n) {
  Cochain c;
  c.degree = degree;
  c.N = N;
  c.n = n;
  c.values.assign(pow_sz(N, degree) * n, cplx(1.0, 0.0));
  c.normalized = true;
  return c;
}

void validate_cochain(const GAction& A, const Cochain& c, double tol) {
  if (c.degree < 1 || c.degree > 3) fail(errc::UnsupportedDegree, "degree must be 1..3");
  if (c.N != A.group.order || c.n != A.base.dim())
    fail(errc::BaseMismatch, "cochain shape does not match group/base");
  if (c.values.size() != pow_sz(c.N, c.degree) * (size_t)c.n)
    fail(errc::BadInput, "cochain storage size mismatch");
  for (const cplx& v : c.values)
    if (std::abs(v) <= tol) fail(errc::ZeroValue, "cochain value is not invertible");
}

void refresh_normalized(Cochain& c, double tol) {
  const int N = c.N, n = c.n;
  bool norm = true;
  auto near1 = [&](cplx v) { return std::abs(v - 1.0) <= std::max(tol, 1e-12); };
  if (c.degree == 1) {
    for (int chi = 0; chi < n && norm; ++chi) norm = near1(c.at(0, chi));
  } else if (c.degree == 2) {
    for (int g = 0; g < N && norm; ++g)
      for (int chi = 0; chi < n && norm; ++chi)
        norm = near1(c.at(0, g, chi)) && near1(c.at(g, 0, chi));
  } else {
    for (int g = 0; g < N && norm; ++g)
      for (int h = 0; h < N && norm; ++h)
        for (int chi = 0; chi < n && norm; ++chi)
          norm = near1(c.at(0, g, h, chi)) && near1(c.at(g, 0, h, chi)) &&
                 near1(c.at(g, h, 0, chi));
  }
  c.normalized = norm;
}

Cochain coboundary(const GAction& A, const Cochain& c) {
  validate_cochain(A, c, 0.0);
  if (c.degree == 3) fail(errc::UnsupportedDegree, "coboundary of a 3-cochain");
  const FiniteGroup& G = A.group;
  const int N = c.N, n = c.n;
  Cochain d = Cochain::ones(c.degree + 1, N, n);
  if (c.degree == 1) {
    // (d theta)(g,h) = g.theta(h) * theta(g) / theta(gh)
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int chi = 0; chi < n; ++chi)
          d.at(g, h, chi) = c.at(h, A.apply_inv(g, chi)) * c.at(g, chi) /
                            c.at(G.mul(g, h), chi);
  } else {
    // (d phi)(g,h,k) = g.phi(h,k) * phi(g,hk) / (phi(gh,k) * phi(g,h))
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int k = 0; k < N; ++k)
          for (int chi = 0; chi < n; ++chi)
            d.at(g, h, k, chi) = c.at(h, k, A.apply_inv(g, chi)) *
                                 c.at(g, G.mul(h, k), chi) /
                                 (c.at(G.mul(g, h), k, chi) * c.at(g, h, chi));
  }
  refresh_normalized(d);
  return d;
}

double cocycle3_residual(const GAction& A, const Cochain& w) {
  if (w.degree != 3) fail(errc::UnsupportedDegree, "expected a 3-cochain");
  const FiniteGroup& G = A.group;
  const int N = w.N, n = w.n;
  double worst = 0.0;
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          for (int chi = 0; chi < n; ++chi) {
            cplx lhs = w.at(h, k, l, A.apply_inv(g, chi)) * w.at(g, G.mul(h, k), l, chi) *
                       w.at(g, h, k, chi);
            cplx rhs = w.at(G.mul(g, h), k, l, chi) * w.at(g, h, G.mul(k, l), chi);
            worst = std::max(worst, std::abs(lhs - rhs));
          }
  return worst;
}

bool is_cocycle(const GAction& A, const Cochain& c, double tol, CocycleWitness* witness) {
  validate_cochain(A, c, 0.0);
  const FiniteGroup& G = A.group;
  const int N = c.N, n = c.n;
  auto report = [&](int g, int h, int k, int chi, double r) {
    if (witness) *witness = CocycleWitness{g, h, k, chi, r};
    return false;
  };
  if (c.degree == 1) {
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int chi = 0; chi < n; ++chi) {
          double r = std::abs(c.at(h, A.apply_inv(g, chi)) * c.at(g, chi) -
                              c.at(G.mul(g, h), chi));
          if (r > tol) return report(g, h, -1, chi, r);
        }
    return true;
  }
  if (c.degree == 2) {
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int k = 0; k < N; ++k)
          for (int chi = 0; chi < n; ++chi) {
            cplx lhs = c.at(h, k, A.apply_inv(g, chi)) * c.at(g, G.mul(h, k), chi);
            cplx rhs = c.at(G.mul(g, h), k, chi) * c.at(g, h, chi);
            double r = std::abs(lhs - rhs);
            if (r > tol) return report(g, h, k, chi, r);
          }
    return true;
  }
  double r = cocycle3_residual(A, c);
  if (r > tol) return report(-1, -1, -1, -1, r);
  return true;
}

UnitarizeResult unitarize(const GAction& A, const Cochain& phi, double tol) {
  validate_cochain(A, phi, tol);
  if (phi.degree != 2) fail(errc::UnsupportedDegree, "unitarize expects a 2-cocycle");
  if (!is_cocycle(A, phi, std::max(tol, 1e-7) * 100))
    fail(errc::NotACocycle, "unitarize input");
  const int N = phi.N, n = phi.n;
  // tau(g) = (prod_k |phi|(g,k))^(1/N), positive-real contraction of |phi|
  Cochain tau = Cochain::ones(1, N, n);
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi) {
      double acc = 0.0;
      for (int k = 0; k < N; ++k) acc += std::log(std::abs(phi.at(g, k, chi)));
      tau.at(g, chi) = std::exp(acc / N);
    }
  refresh_normalized(tau, tol);
  Cochain dtau = coboundary(A, tau);
  Cochain phi_u = phi;
  for (size_t i = 0; i < phi_u.values.size(); ++i) {
    cplx v = phi.values[i] / dtau.values[i];
    phi_u.values[i] = v / std::abs(v); // exactly unit modulus
  }
  refresh_normalized(phi_u, tol);
  return {phi_u, tau};
}

std::optional<Cochain> solve_coboundary(const GAction& A, const Cochain& psi,
                                        int search_modulus, double tol) {
  validate_cochain(A, psi, tol);
  if (psi.degree != 2) fail(errc::UnsupportedDegree, "solve_coboundary expects degree 2");
  const FiniteGroup& G = A.group;
  const int N = psi.N, n = psi.n;
  for (const cplx& v : psi.values)
    if (std::abs(std::abs(v) - 1.0) > 1e-6)
      fail(errc::BadInput, "solve_coboundary expects unitary values");
  // d(theta) is always a cocycle
  if (!is_cocycle(A, psi, 1e-6)) return std::nullopt;

  if (search_modulus <= 0) search_modulus = N;
  long long M = std::lcm((long long)search_modulus, (long long)N * N);
  if (M > 2000000 || (size_t)N * N * n > 200000)
    fail(errc::SearchBudgetExceeded, "modulus/system too large");

  // split off the divisible part: eta(g) = principal N-th root of
  // prod_k psi(g,k); then psi0 = psi/d(eta) has values in mu_N.
  Cochain eta = Cochain::ones(1, N, n);
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi) {
      cplx p(1.0, 0.0);
      for (int k = 0; k < N; ++k) p *= psi.at(g, k, chi);
      double arg = std::arg(p);
      if (arg < 0) arg += 2 * kPi;
      eta.at(g, chi) = std::polar(1.0, arg / N);
    }
  Cochain deta = coboundary(A, eta);

  // exponents of psi0 in base zeta_M
  std::vector<long long> B((size_t)N * N * n);
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int chi = 0; chi < n; ++chi) {
        cplx v = psi.at(g, h, chi) / deta.at(g, h, chi);
        double t = std::arg(v) / (2 * kPi) * N; // should be near an integer
        long long r = (long long)std::llround(t);
        if (std::abs(t - (double)r) > 1e-4) return std::nullopt;
        B[psi.idx2(g, h, chi)] = ((r % N) + N) % N * (M / N);
      }

  // unknowns T[g][chi], equations T[h, pi_g^-1 chi] + T[g,chi] - T[gh,chi] = B
  const int vars = N * n;
  std::vector<std::vector<long long>> Amat;
  std::vector<long long> bvec;
  Amat.reserve((size_t)N * N * n);
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int chi = 0; chi < n; ++chi) {
        std::vector<long long> row(vars, 0);
        row[h * n + A.apply_inv(g, chi)] += 1;
        row[g * n + chi] += 1;
        row[G.mul(g, h) * n + chi] -= 1;
        Amat.push_back(std::move(row));
        bvec.push_back(B[psi.idx2(g, h, chi)]);
      }
  auto sol = detail::solve_linear_mod(std::move(Amat), std::move(bvec), M);
  if (!sol) return std::nullopt;

  Cochain theta = Cochain::ones(1, N, n);
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      theta.at(g, chi) =
          eta.at(g, chi) * std::polar(1.0, 2 * kPi * (double)(*sol)[g * n + chi] / (double)M);
  refresh_normalized(theta, tol);

  Cochain dth = coboundary(A, theta);
  for (size_t i = 0; i < dth.values.size(); ++i)
    if (std::abs(dth.values[i] - psi.values[i]) > 1e-6) return std::nullopt;
  return theta;
}

CohomologousResult cohomologous(const GAction& A, const Cochain& phi1, const Cochain& phi2,
                                int search_modulus, double tol) {
  validate_cochain(A, phi1, tol);
  if (phi2.degree != phi1.degree || phi1.degree != 2)
    fail(errc::UnsupportedDegree, "cohomologous expects 2-cocycles");
  if (phi1.N != phi2.N || phi1.n != phi2.n)
    fail(errc::BaseMismatch, "cocycles over different group/base");
  validate_cochain(A, phi2, tol);
  double ctol = std::max(tol, 1e-7) * 100;
  if (!is_cocycle(A, phi1, ctol) || !is_cocycle(A, phi2, ctol))
    fail(errc::NotACocycle, "cohomologous input");

  const FiniteGroup& G = A.group;
  const int N = phi1.N, n = phi1.n;
  Cochain ratio = phi1;
  for (size_t i = 0; i < ratio.values.size(); ++i) ratio.values[i] /= phi2.values[i];
  refresh_normalized(ratio, tol);

  auto [ratio_u, tau] = unitarize(A, ratio, tol);
  std::optional<Cochain> theta0;
  bool budget_hit = false;
  try {
    theta0 = solve_coboundary(A, ratio_u, search_modulus, tol);
  } catch (const error& e) {
    if (e.code() != errc::SearchBudgetExceeded) throw;
    budget_hit = true;
  }
  if (theta0) {
    Cochain theta = *theta0;
    for (size_t i = 0; i < theta.values.size(); ++i) theta.values[i] *= tau.values[i];
    refresh_normalized(theta, tol);
    return {class_rel::yes, std::move(theta), ""};
  }

  // orbit-wise commutator pairing at the orbit representative: a class
  // invariant of the stabilizer-restricted scalar cocycle when the
  // stabilizer is abelian
  std::vector<char> seen(n, 0);
  bool all_abelian = true;
  for (int chi0 = 0; chi0 < n; ++chi0) {
    if (seen[chi0]) continue;
    for (int g = 0; g < N; ++g) seen[A.apply(g, chi0)] = 1;
    std::vector<int> H;
    for (int g = 0; g < N; ++g)
      if (A.apply(g, chi0) == chi0) H.push_back(g);
    bool abelian = true;
    for (int u : H)
      for (int v : H)
        if (G.mul(u, v) != G.mul(v, u)) abelian = false;
    if (!abelian) { all_abelian = false; continue; }
    for (int u : H)
      for (int v : H) {
        cplx beta = ratio.at(u, v, chi0) / ratio.at(v, u, chi0);
        if (std::abs(beta - 1.0) > 1e-6)
          return {class_rel::no, std::nullopt,
                  "pairing beta(g=" + std::to_string(u) + ",h=" + std::to_string(v) +
                      ")_chi" + std::to_string(chi0) + " = " +
                      std::to_string(beta.real() + 0.0) + (beta.imag() + 0.0 >= 0 ? "+" : "") +
                      std::to_string(beta.imag() + 0.0) + "i"};
      }
  }
  if (budget_hit) return {class_rel::unknown, std::nullopt, "search budget exceeded"};
  if (all_abelian)
    // pairings all trivial yet no coboundary found: undecided
    return {class_rel::unknown, std::nullopt, "pairing trivial but no coboundary found"};
  return {class_rel::no, std::nullopt,
          "no coboundary with root-of-unity torsion part exists (exact modular search)"};
}

UnitSubgroup load_unit_subgroup(const GAction& A, std::vector<std::vector<cplx>> elements,
                                double tol) {
  const int n = A.base.dim();
  const int N = A.group.order;
  double eps = std::max(tol, 1e-9);
  for (const auto& e : elements) {
    if ((int)e.size() != n) fail(errc::BaseMismatch, "unit subgroup element size");
    for (const cplx& v : e)
      if (std::abs(v) <= eps) fail(errc::ZeroValue, "unit subgroup element not invertible");
  }
  auto find = [&](const std::vector<cplx>& x) {
    for (size_t i = 0; i < elements.size(); ++i) {
      double d = 0.0;
      for (int c = 0; c < n; ++c) d = std::max(d, std::abs(elements[i][c] - x[c]));
      if (d <= 1e-6) return (int)i;
    }
    return -1;
  };
  std::vector<cplx> one(n, cplx(1.0, 0.0));
  if (find(one) < 0) fail(errc::BadInput, "unit subgroup must contain 1");
  for (const auto& a : elements) {
    std::vector<cplx> inv(n);
    for (int c = 0; c < n; ++c) inv[c] = 1.0 / a[c];
    if (find(inv) < 0) fail(errc::BadInput, "unit subgroup not closed under inverse");
    for (const auto& b : elements) {
      std::vector<cplx> p(n);
      for (int c = 0; c < n; ++c) p[c] = a[c] * b[c];
      if (find(p) < 0) fail(errc::BadInput, "unit subgroup not closed under product");
    }
    for (int g = 0; g < N; ++g) {
      std::vector<cplx> ga(n);
      for (int c = 0; c < n; ++c) ga[c] = a[A.apply_inv(g, c)];
      if (find(ga) < 0) fail(errc::BadInput, "unit subgroup not G-stable");
    }
  }
  return UnitSubgroup{std::move(elements)};
}

Cochain obstruction_delta(const GAction& A, const Cochain& phi, const UnitSubgroup& O,
                          double tol) {
  validate_cochain(A, phi, tol);
  if (phi.degree != 2) fail(errc::UnsupportedDegree, "obstruction expects a 2-cochain");
  Cochain T = coboundary(A, phi);
  const int N = T.N, n = T.n;
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int k = 0; k < N; ++k) {
        int best = -1;
        double bestd = 0.0;
        for (size_t i = 0; i < O.elements.size(); ++i) {
          double d = 0.0;
          for (int chi = 0; chi < n; ++chi)
            d = std::max(d, std::abs(T.at(g, h, k, chi) - O.elements[i][chi]));
          if (best < 0 || d < bestd) { best = (int)i; bestd = d; }
        }
        double eps = std::max(tol, 1e-9) * 100;
        if (best < 0 || bestd > std::max(eps, 1e-6))
          fail(errc::NotOValued,
               "d(phi)(" + std::to_string(g) + "," + std::to_string(h) + "," +
                   std::to_string(k) + ") is " + std::to_string(bestd) +
                   " away from every element of O");
        for (int chi = 0; chi < n; ++chi) T.at(g, h, k, chi) = O.elements[best][chi];
      }
  refresh_normalized(T, tol);
  return T;
}

} // namespace gcx
