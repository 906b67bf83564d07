#include "gcx/crossed.hpp"

#include <cmath>

namespace gcx {

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx principal_sqrt(cplx z) {
  double arg = std::arg(z);
  if (arg < 0) arg += 2 * kPi;
  return std::polar(std::sqrt(std::abs(z)), arg / 2);
}

double diff(const AlgebraElement& x, const AlgebraElement& y) {
  double worst = 0.0;
  for (const auto& [k, v] : x.coeffs) {
    auto it = y.coeffs.find(k);
    worst = std::max(worst, std::abs(v - (it == y.coeffs.end() ? cplx(0) : it->second)));
  }
  for (const auto& [k, v] : y.coeffs)
    if (!x.coeffs.count(k)) worst = std::max(worst, std::abs(v));
  return worst;
}
} // namespace

AlgebraElement& AlgebraElement::prune(double eps) {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = std::abs(it->second) <= eps ? coeffs.erase(it) : std::next(it);
  return *this;
}

AlgebraElement basis_element(const CrossedAlgebra& A, int g, int chi) {
  if (g < 0 || g >= A.group.order || chi < 0 || chi >= A.base.dim() ||
      A.index_of(g, chi) < 0)
    fail(errc::BadInput, "no basis vector E[" + std::to_string(g) + "," +
                             std::to_string(chi) + "]");
  AlgebraElement x;
  x.owner = &A;
  x.coeffs[{g, chi}] = 1.0;
  return x;
}

AlgebraElement unit(const CrossedAlgebra& A) {
  AlgebraElement x;
  x.owner = &A;
  for (int chi = 0; chi < A.base.dim(); ++chi) x.coeffs[{0, chi}] = 1.0;
  return x;
}

AlgebraElement from_base(const CrossedAlgebra& A, const std::vector<cplx>& v) {
  if ((int)v.size() != A.base.dim()) fail(errc::BaseMismatch, "base vector size");
  AlgebraElement x;
  x.owner = &A;
  for (int chi = 0; chi < A.base.dim(); ++chi)
    if (v[chi] != cplx(0)) x.coeffs[{0, chi}] = v[chi];
  return x;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.owner != y.owner) fail(errc::OwnerMismatch, "add");
  AlgebraElement r = x;
  for (const auto& [k, v] : y.coeffs) r.coeffs[k] += v;
  return r.prune();
}

AlgebraElement scale(cplx c, const AlgebraElement& x) {
  AlgebraElement r = x;
  for (auto& [k, v] : r.coeffs) v *= c;
  return r.prune();
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.owner != y.owner || !x.owner) fail(errc::OwnerMismatch, "multiply");
  const CrossedAlgebra& A = *x.owner;
  AlgebraElement r;
  r.owner = &A;
  for (const auto& [kx, vx] : x.coeffs)
    for (const auto& [ky, vy] : y.coeffs) {
      if (kx.second != ky.second) continue; // e_chi e_chi' = 0
      const int g = kx.first, h = ky.first, chi = kx.second;
      const int gh = A.group.mul(g, h);
      // chi is fixed by g and h, hence by gh; E[gh,chi] exists
      r.coeffs[{gh, chi}] += vx * vy * A.phi.at(g, h, chi);
    }
  return r.prune();
}

AlgebraElement star(const AlgebraElement& x) {
  if (!x.owner) fail(errc::OwnerMismatch, "star");
  const CrossedAlgebra& A = *x.owner;
  AlgebraElement r;
  r.owner = &A;
  for (const auto& [k, v] : x.coeffs) {
    const int g = k.first, chi = k.second;
    r.coeffs[{A.group.inv(g), chi}] += std::conj(v) * A.theta.at(g, chi);
  }
  return r.prune();
}

AlgebraElement act(int g, const AlgebraElement& x) {
  if (!x.owner) fail(errc::OwnerMismatch, "act");
  const CrossedAlgebra& A = *x.owner;
  if (g < 0 || g >= A.group.order) fail(errc::BadInput, "act: bad group element");
  AlgebraElement r;
  r.owner = &A;
  for (const auto& [k, v] : x.coeffs) {
    const int h = k.first, chi = k.second;
    const int ghg = A.group.conj(g, h);
    const int gchi = A.action.apply(g, chi);
    cplx s = A.phi.at(g, h, gchi) / A.phi.at(ghg, g, gchi);
    r.coeffs[{ghg, gchi}] += v * s;
  }
  return r.prune();
}

cplx lambda(const AlgebraElement& x) {
  if (!x.owner) fail(errc::OwnerMismatch, "lambda");
  cplx out = 0.0;
  for (const auto& [k, v] : x.coeffs)
    if (k.first == 0) out += v / x.owner->base.codegrees[k.second];
  return out;
}

cplx inner(const AlgebraElement& x, const AlgebraElement& y) {
  return lambda(multiply(x, star(y)));
}

namespace {

CrossedAlgebra assemble(const GAction& action, Cochain phi, Cochain theta) {
  CrossedAlgebra A;
  A.base = action.base;
  A.group = action.group;
  A.action = action;
  A.phi = std::move(phi);
  A.theta = std::move(theta);
  const int N = A.group.order, n = A.base.dim();
  A.basis_index.assign(N, std::vector<int>(n, -1));
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      if (action.perm[g][chi] == chi) {
        A.basis_index[g][chi] = (int)A.basis.size();
        A.basis.emplace_back(g, chi);
      }
  return A;
}

// star axioms alone (used to select theta in the construction pipeline)
bool star_ok(const CrossedAlgebra& A, double tol) {
  const double eps = std::max(tol, 1e-9) * 100;
  for (const auto& [g, chi] : A.basis) {
    AlgebraElement e = basis_element(A, g, chi);
    if (diff(star(star(e)), e) > eps) return false;
    double gram = inner(e, e).real();
    if (!(gram > eps) || std::abs(inner(e, e).imag()) > eps) return false;
  }
  for (const auto& [g, chi] : A.basis)
    for (const auto& [h, chi2] : A.basis) {
      AlgebraElement a = basis_element(A, g, chi), b = basis_element(A, h, chi2);
      if (diff(star(multiply(a, b)), multiply(star(b), star(a))) > eps) return false;
    }
  return true;
}

} // namespace

CrossedAlgebra construct_extension(const GAction& action, const Cochain& phi, double tol) {
  validate_cochain(action, phi, tol);
  if (phi.degree != 2) fail(errc::UnsupportedDegree, "construct_extension expects degree 2");
  CocycleWitness w;
  if (!is_cocycle(action, phi, std::max(tol, 1e-9) * 100, &w))
    fail(errc::NotACocycle,
         "at (g,h,k,chi)=(" + std::to_string(w.g) + "," + std::to_string(w.h) + "," +
             std::to_string(w.k) + "," + std::to_string(w.chi) +
             "), residual " + std::to_string(w.residual));
  const FiniteGroup& G = action.group;
  const int N = G.order, n = action.base.dim();
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      if (std::abs(phi.at(0, g, chi) - 1.0) > 1e-6 || std::abs(phi.at(g, 0, chi) - 1.0) > 1e-6)
        fail(errc::BadInput, "cocycle is not normalized");

  Cochain phi_u = unitarize(action, phi, tol).phi_u;

  // gauge so phi(g, g^-1) = 1 for every g
  Cochain c = Cochain::ones(1, N, n);
  for (int g = 1; g < N; ++g) {
    int gi = G.inv(g);
    if (g < gi) {
      for (int chi = 0; chi < n; ++chi)
        c.at(gi, chi) = 1.0 / phi_u.at(g, gi, action.apply(g, chi));
    } else if (g == gi) {
      for (int chi = 0; chi < n; ++chi)
        c.at(g, chi) = principal_sqrt(1.0 / phi_u.at(g, g, chi));
    }
  }
  Cochain dc = coboundary(action, c);
  Cochain phig = phi_u;
  for (size_t i = 0; i < phig.values.size(); ++i) {
    cplx v = phig.values[i] * dc.values[i];
    phig.values[i] = v / std::abs(v);
  }
  refresh_normalized(phig, tol);
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi)
      if (std::abs(phig.at(g, G.inv(g), chi) - 1.0) > 1e-7)
        fail(errc::StarIncompatible, "gauge normalization failed");

  // psi(g,h,chi) = conj(phi(g,h,chi)) / phi(h^-1, g^-1, pi_{(gh)^-1} chi); star
  // needs d(theta) = psi. On characters fixed by g and h the pullback is the
  // identity and psi reduces to the star condition; the pullback makes psi an
  // equivariant cocycle on the remaining components as well.
  Cochain psi = Cochain::ones(2, N, n);
  double psi_dev = 0.0;
  for (int g = 0; g < N; ++g)
    for (int h = 0; h < N; ++h)
      for (int chi = 0; chi < n; ++chi) {
        int chi_p = action.apply_inv(G.mul(g, h), chi);
        cplx v = std::conj(phig.at(g, h, chi)) / phig.at(G.inv(h), G.inv(g), chi_p);
        psi.at(g, h, chi) = v;
        psi_dev = std::max(psi_dev, std::abs(v - 1.0));
      }

  Cochain theta = Cochain::ones(1, N, n);
  if (psi_dev > 1e-9) {
    auto solved = solve_coboundary(action, psi, 0, tol);
    if (!solved) fail(errc::StarIncompatible, "no 1-cochain theta with d(theta) = psi");
    // prefer the positivity-normalized representative on basis components
    Cochain adjusted = *solved;
    for (int g = 0; g < N; ++g)
      for (int chi = 0; chi < n; ++chi)
        if (action.perm[g][chi] == chi) adjusted.at(g, chi) = 1.0;
    CrossedAlgebra cand = assemble(action, phig, adjusted);
    if (star_ok(cand, tol)) return cand;
    cand = assemble(action, phig, *solved);
    if (star_ok(cand, tol)) return cand;
    fail(errc::StarIncompatible, "solved theta does not give a positive star");
  }
  CrossedAlgebra A = assemble(action, phig, theta);
  if (!star_ok(A, tol)) fail(errc::StarIncompatible, "star axioms fail in canonical gauge");
  return A;
}

AxiomReport verify_crossed_axioms(const CrossedAlgebra& A, double tol) {
  AxiomReport rep;
  const double eps = std::max(tol, 1e-12);
  const FiniteGroup& G = A.group;
  const int N = G.order;
  auto push = [&](const std::string& name, double residual, const std::string& wit) {
    rep.checks.push_back({name, residual <= eps, residual, residual <= eps ? "" : wit});
  };

  std::vector<AlgebraElement> B;
  for (const auto& [g, chi] : A.basis) B.push_back(basis_element(A, g, chi));

  // grading: A_g A_h lands in A_{gh}
  {
    double worst = 0.0;
    std::string wit;
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B.size(); ++j) {
        int gh = G.mul(A.basis[i].first, A.basis[j].first);
        for (const auto& [k, v] : multiply(B[i], B[j]).coeffs)
          if (k.first != gh && std::abs(v) > worst) {
            worst = std::abs(v);
            wit = "product of basis " + std::to_string(i) + "," + std::to_string(j);
          }
      }
    push("grading", worst, wit);
  }
  // crossed commutativity: a b = g(b) a for a in A_g
  {
    double worst = 0.0;
    std::string wit;
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B.size(); ++j) {
        double d = diff(multiply(B[i], B[j]),
                        multiply(act(A.basis[i].first, B[j]), B[i]));
        if (d > worst) {
          worst = d;
          wit = "basis " + std::to_string(i) + "," + std::to_string(j);
        }
      }
    push("crossed_commutativity", worst, wit);
  }
  // action: group homomorphism, algebra maps, grading conjugation
  {
    double worst = 0.0;
    std::string wit;
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (size_t i = 0; i < B.size(); ++i) {
          double d = diff(act(g, act(h, B[i])), act(G.mul(g, h), B[i]));
          if (d > worst) { worst = d; wit = "act homomorphism"; }
        }
    for (size_t i = 0; i < B.size(); ++i) {
      double d = diff(act(0, B[i]), B[i]);
      if (d > worst) { worst = d; wit = "identity action"; }
    }
    for (int g = 0; g < N; ++g)
      for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) {
          double d = diff(act(g, multiply(B[i], B[j])),
                          multiply(act(g, B[i]), act(g, B[j])));
          if (d > worst) { worst = d; wit = "act multiplicativity"; }
        }
    for (int g = 0; g < N; ++g)
      for (size_t i = 0; i < B.size(); ++i) {
        int want = G.conj(g, A.basis[i].first);
        for (const auto& [k, v] : act(g, B[i]).coeffs)
          if (k.first != want && std::abs(v) > worst) { worst = std::abs(v); wit = "g(A_h) grading"; }
      }
    push("action_homomorphism", worst, wit);
  }
  // star: anti-involution, conjugate linearity, lambda compatibility
  {
    double worst = 0.0;
    std::string wit;
    for (size_t i = 0; i < B.size(); ++i) {
      AlgebraElement z = scale(cplx(0.3, 0.7), B[i]);
      double d = diff(star(star(z)), z);
      if (d > worst) { worst = d; wit = "star involution"; }
    }
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B.size(); ++j) {
        double d = diff(star(multiply(B[i], B[j])), multiply(star(B[j]), star(B[i])));
        if (d > worst) { worst = d; wit = "star anti-homomorphism"; }
      }
    push("star_anti_involution", worst, wit);
  }
  // lambda symmetry: lambda(x*) = conj(lambda(x)), lambda(ab) = lambda(ba),
  // and invariance under the action
  {
    double worst = 0.0;
    std::string wit;
    for (size_t i = 0; i < B.size(); ++i) {
      AlgebraElement z = scale(cplx(0.6, -0.2), B[i]);
      double d = std::abs(lambda(star(z)) - std::conj(lambda(z)));
      if (d > worst) { worst = d; wit = "lambda of star"; }
    }
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B.size(); ++j) {
        double d = std::abs(lambda(multiply(B[i], B[j])) - lambda(multiply(B[j], B[i])));
        if (d > worst) { worst = d; wit = "trace property"; }
      }
    for (int g = 0; g < N; ++g)
      for (size_t i = 0; i < B.size(); ++i) {
        double d = std::abs(lambda(act(g, B[i])) - lambda(B[i]));
        if (d > worst) { worst = d; wit = "lambda invariance"; }
      }
    push("lambda_symmetry", worst, wit);
  }
  // Gram positivity: diagonal in the E-basis with positive entries
  {
    double worst = 0.0;
    std::string wit;
    for (size_t i = 0; i < B.size(); ++i)
      for (size_t j = 0; j < B.size(); ++j) {
        cplx v = inner(B[i], B[j]);
        if (i == j) {
          double d = v.real() > eps ? std::abs(v.imag()) : 1.0 + std::abs(v);
          if (d > worst) { worst = d; wit = "Gram diagonal not positive"; }
        } else if (std::abs(v) > worst) {
          worst = std::abs(v);
          wit = "Gram off-diagonal";
        }
      }
    push("gram_positivity", worst, wit);
  }
  // strictness: {chi : e_chi A_g != 0} equals the fixed set of the action
  {
    double worst = 0.0;
    std::string wit;
    for (int g = 0; g < N; ++g)
      for (int chi = 0; chi < A.base.dim(); ++chi) {
        bool partial = false;
        AlgebraElement e = basis_element(A, 0, chi);
        for (const auto& [b, bchi] : A.basis)
          if (b == g) {
            AlgebraElement p = multiply(e, basis_element(A, g, bchi));
            if (!p.coeffs.empty()) { partial = true; break; }
          }
        bool honest = A.action.perm[g][chi] == chi;
        if (partial != honest) {
          worst = 1.0;
          wit = "g=" + std::to_string(g) + ", chi=" + std::to_string(chi);
        }
      }
    push("strictness", worst, wit);
  }
  return rep;
}

RawAlgebra to_raw(const CrossedAlgebra& A) {
  return to_raw_rescaled(A, Cochain::ones(1, A.group.order, A.base.dim()));
}

RawAlgebra to_raw_rescaled(const CrossedAlgebra& A, const Cochain& r) {
  RawAlgebra raw;
  raw.base = A.base;
  raw.group = A.group;
  raw.action = A.action;
  raw.basis = A.basis;
  const int B = A.dim();
  auto pos = [&](int g, int chi) { return A.index_of(g, chi); };
  raw.mult.assign(B, std::vector<std::map<int, cplx>>(B));
  raw.star_tab.assign(B, {});
  for (int i = 0; i < B; ++i) {
    auto [g, chi] = A.basis[i];
    cplx ri = r.at(g, chi);
    for (int j = 0; j < B; ++j) {
      auto [h, chi2] = A.basis[j];
      if (chi != chi2) continue;
      int gh = A.group.mul(g, h);
      cplx coeff = ri * r.at(h, chi) / r.at(gh, chi) * A.phi.at(g, h, chi);
      raw.mult[i][j][pos(gh, chi)] = coeff;
    }
    int gi = A.group.inv(g);
    raw.star_tab[i][pos(gi, chi)] = std::conj(ri) / r.at(gi, chi) * A.theta.at(g, chi);
  }
  return raw;
}

ExtractResult extract_cocycle(const RawAlgebra& raw, double tol) {
  const FiniteGroup& G = raw.group;
  const GAction& act = raw.action;
  const int N = G.order, n = raw.base.dim();
  const double eps = std::max(tol, 1e-9) * 100;

  std::vector<std::vector<int>> pos(N, std::vector<int>(n, -1));
  for (size_t i = 0; i < raw.basis.size(); ++i) {
    auto [g, chi] = raw.basis[i];
    if (g < 0 || g >= N || chi < 0 || chi >= n || act.perm[g][chi] != chi)
      fail(errc::AxiomsFail, "basis label (g,chi) with chi not fixed by g");
    pos[g][chi] = (int)i;
  }
  for (int chi = 0; chi < n; ++chi)
    if (pos[0][chi] < 0) fail(errc::AxiomsFail, "missing trivial-sector idempotent");

  // measured structure scalars c[g][h][chi] for chi fixed by g and h
  auto measure = [&](const std::vector<std::vector<std::map<int, cplx>>>& mult) {
    std::vector<std::vector<std::vector<cplx>>> c(
        N, std::vector<std::vector<cplx>>(N, std::vector<cplx>(n, cplx(0))));
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int chi = 0; chi < n; ++chi) {
          if (pos[g][chi] < 0 || pos[h][chi] < 0) continue;
          const auto& row = mult[pos[g][chi]][pos[h][chi]];
          int target = pos[G.mul(g, h)][chi];
          for (const auto& [k, v] : row) {
            if (k != target && std::abs(v) > eps)
              fail(errc::AxiomsFail, "product not aligned with the (g,chi) grading");
            if (k == target) c[g][h][chi] = v;
          }
          if (std::abs(c[g][h][chi]) <= eps)
            fail(errc::AxiomsFail, "vanishing structure scalar");
        }
    return c;
  };
  auto c = measure(raw.mult);
  auto star_tab = raw.star_tab;

  // idempotent sector must agree with the base
  for (int chi = 0; chi < n; ++chi)
    for (int chi2 = 0; chi2 < n; ++chi2) {
      const auto& row = raw.mult[pos[0][chi]][pos[0][chi2]];
      for (const auto& [k, v] : row) {
        double want = (chi == chi2 && k == pos[0][chi]) ? 1.0 : 0.0;
        if (std::abs(v - want) > eps)
          fail(errc::AxiomsFail, "trivial sector is not the idempotent base");
      }
    }

  // alignment: need c(g, g^-1) = 1; regauge otherwise
  bool aligned = true;
  for (int g = 0; g < N && aligned; ++g)
    for (int chi = 0; chi < n && aligned; ++chi)
      if (pos[g][chi] >= 0 && std::abs(c[g][G.inv(g)][chi] - 1.0) > eps) aligned = false;

  bool regauged = false;
  if (!aligned) {
    regauged = true;
    // rescale E[g,chi] -> r E[g,chi] so that the pairing scalar becomes 1
    std::vector<cplx> r(raw.basis.size(), cplx(1.0));
    for (int g = 1; g < N; ++g) {
      int gi = G.inv(g);
      for (int chi = 0; chi < n; ++chi) {
        if (pos[g][chi] < 0) continue;
        if (g < gi)
          r[pos[gi][chi]] = 1.0 / c[g][gi][chi];
        else if (g == gi)
          r[pos[g][chi]] = principal_sqrt(1.0 / c[g][g][chi]);
      }
    }
    auto mult2 = raw.mult;
    for (size_t i = 0; i < raw.basis.size(); ++i)
      for (size_t j = 0; j < raw.basis.size(); ++j)
        for (auto& [k, v] : mult2[i][j]) v *= r[i] * r[j] / r[k];
    c = measure(mult2);
    for (size_t i = 0; i < raw.basis.size(); ++i)
      for (auto& [k, v] : star_tab[i]) v *= std::conj(r[i]) / r[k];
  }

  // orbit-by-orbit extension of the stabilizer scalars to a full cocycle
  Cochain phi = Cochain::ones(2, N, n);
  std::vector<char> seen(n, 0);
  for (int chi0 = 0; chi0 < n; ++chi0) {
    if (seen[chi0]) continue;
    std::vector<int> sigma(n, -1); // orbit element -> chosen coset rep
    sigma[chi0] = 0;
    std::vector<int> orbit{chi0};
    seen[chi0] = 1;
    for (size_t q = 0; q < orbit.size(); ++q)
      for (int g = 0; g < N; ++g) {
        int x = act.apply(g, orbit[q]);
        if (sigma[x] < 0) {
          sigma[x] = G.mul(g, sigma[orbit[q]]);
          seen[x] = 1;
          orbit.push_back(x);
        }
      }
    auto alpha = [&](int g, int x) {
      int y = act.apply_inv(g, x);
      return G.mul(G.inv(sigma[x]), G.mul(g, sigma[y]));
    };
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        for (int x : orbit) {
          int u = alpha(g, x), v = alpha(h, act.apply_inv(g, x));
          phi.at(g, h, x) = c[u][v][chi0];
        }
  }
  refresh_normalized(phi, tol);

  Cochain theta = Cochain::ones(1, N, n);
  for (int g = 0; g < N; ++g)
    for (int chi = 0; chi < n; ++chi) {
      if (pos[g][chi] < 0) continue;
      const auto& row = star_tab[pos[g][chi]];
      int target = pos[G.inv(g)][chi];
      for (const auto& [k, v] : row) {
        if (k != target && std::abs(v) > eps)
          fail(errc::AxiomsFail, "star not aligned with the (g,chi) basis");
        if (k == target) theta.at(g, chi) = v;
      }
    }
  refresh_normalized(theta, tol);

  CocycleWitness w;
  if (!is_cocycle(act, phi, eps * 10, &w))
    fail(errc::AxiomsFail, "measured multiplication is not associative");
  return {std::move(phi), std::move(theta), regauged};
}

} // namespace gcx
