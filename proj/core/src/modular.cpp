#include "gcx/modular.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace gcx {

CrossedSMatrixData crossed_s_matrix(const CrossedAlgebra& A, int g,
                                    const std::vector<std::string>& labels,
                                    const std::vector<AlgebraElement>& rows,
                                    const std::vector<double>& dims,
                                    const std::vector<double>& char_dims, double dimB,
                                    const TwistedCharacterTable* Tin, double tol) {
  TwistedCharacterTable Tp;
  const TwistedCharacterTable& T = Tin ? *Tin : (Tp = principal_gauge(A));
  std::vector<int> fixed = fixed_characters(A.action, {g});
  const int m = (int)fixed.size();
  if ((int)rows.size() != m)
    fail(errc::NotSpanning, std::to_string(rows.size()) + " rows for a " +
                                std::to_string(m) + "-dimensional sector");
  if ((int)dims.size() != m || (int)char_dims.size() != m ||
      (!labels.empty() && (int)labels.size() != m))
    fail(errc::DimensionMismatch, "row/column dimension lists do not match the sector");
  for (double d : dims)
    if (!(d > 0)) fail(errc::DimensionMismatch, "non-positive object dimension");
  for (double d : char_dims)
    if (!(d > 0)) fail(errc::DimensionMismatch, "non-positive character dimension");

  // spanning check: expansion of rows over E[g,chi] must be nonsingular
  Eigen::MatrixXcd E(m, m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [k, v] : rows[i].coeffs)
      if (k.first != g)
        fail(errc::WrongComponent, "row " + std::to_string(i) + " leaves the sector");
    for (int c = 0; c < m; ++c) {
      auto it = rows[i].coeffs.find({g, fixed[c]});
      E(i, c) = it == rows[i].coeffs.end() ? cplx(0) : it->second;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(E);
  lu.setThreshold(1e-10);
  if (lu.rank() < m) fail(errc::NotSpanning, "sector basis is rank-deficient");

  if (dimB <= 0) {
    if (g != 0)
      fail(errc::DimensionMismatch, "dimB must be supplied outside the trivial sector");
    dimB = 0;
    for (double d : char_dims) dimB += d * d;
  } else if (g == 0) {
    double s = 0;
    for (double d : char_dims) s += d * d;
    if (std::abs(s - dimB) > std::max(tol, 1e-9) * 100)
      fail(errc::DimensionMismatch, "dimB does not equal the sum of squared dims");
  }

  CrossedSMatrixData S;
  S.sector = g;
  S.labels = labels;
  if (S.labels.empty())
    for (int i = 0; i < m; ++i) S.labels.push_back("M" + std::to_string(i));
  S.dims = dims;
  S.chars = fixed;
  S.char_dims = char_dims;
  S.dimB = dimB;
  S.matrix.assign(m, std::vector<cplx>(m));
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < m; ++c)
      S.matrix[i][c] = twisted_eval(A, T, g, fixed[c], rows[i]) * char_dims[c];
  return S;
}

UnitarityReport s_unitarity_check(const CrossedSMatrixData& S, double tol) {
  UnitarityReport R;
  const int m = (int)S.matrix.size();
  double worst = 0.0;
  std::string where;
  auto record = [&](double d, int i, int j, const char* side) {
    if (d > worst) {
      worst = d;
      where = std::string(side) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    }
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cplx a(0), b(0);
      for (int k = 0; k < m; ++k) {
        a += S.matrix[i][k] * std::conj(S.matrix[j][k]);
        b += std::conj(S.matrix[k][i]) * S.matrix[k][j];
      }
      cplx target = i == j ? cplx(S.dimB) : cplx(0);
      record(std::abs(a - target), i, j, "S S*");
      record(std::abs(b - target), i, j, "S* S");
    }
  R.residual = worst;
  R.pass = worst <= std::max(tol, 1e-9) * 100;
  if (!R.pass) R.witness = where;
  return R;
}

CatVerlindeResult categorical_verlinde(const std::map<int, CrossedSMatrixData>& sectors,
                                       const GAction& action, const Cochain* phi1,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<std::pair<int, int>>& objects,
                                       double tol) {
  const FiniteGroup& G = action.group;
  const int r = (int)pairs.size(), s = (int)objects.size();
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
  const CrossedSMatrixData* any = nullptr;
  for (const auto& [m, row] : objects) {
    auto it = sectors.find(m);
    if (it == sectors.end())
      fail(errc::MissingSector, "no S-matrix data for sector " + std::to_string(m));
    if (row < 0 || row >= (int)it->second.matrix.size())
      fail(errc::BadInput, "object row out of range in sector " + std::to_string(m));
    if (!any || m == 0) any = &it->second;
    prod = G.mul(prod, m);
    gens.push_back(m);
    tuple.push_back(m);
  }
  if (prod != 0) fail(errc::ProductNotIdentity, "[g1,h1]...[gr,hr] m_1...m_s != 1");
  if (!any) {
    auto it = sectors.find(0);
    if (it == sectors.end())
      fail(errc::MissingSector, "trivial-sector data required when no objects are given");
    any = &it->second;
  }
  double dimB = any->dimB;
  for (const auto& [m, S] : sectors)
    if (std::abs(S.dimB - dimB) > std::max(tol, 1e-9) * 100)
      fail(errc::DimensionMismatch, "inconsistent dimB across sectors");

  cplx out = 0.0;
  for (int chi : fixed_characters(action, gens)) {
    int c0 = any->col_of(chi);
    if (c0 < 0) fail(errc::MissingSector, "character missing from loaded sector columns");
    double s1d = any->char_dims[c0];
    cplx term = std::pow(s1d, -(s + 2 * r - 2));
    for (const auto& [m, row] : objects) {
      const CrossedSMatrixData& S = sectors.at(m);
      int c = S.col_of(chi);
      if (c < 0) fail(errc::MissingSector, "character missing from sector " + std::to_string(m));
      term *= S.matrix[row][c];
    }
    if (phi1 && !tuple.empty())
      term /= tuple_scalar_cochain(action, *phi1, chi, tuple);
    out += term;
  }
  out *= std::pow(dimB, r - 1);

  CatVerlindeResult R;
  R.value = out;
  double re = out.real();
  double d = std::abs(out.imag());
  d = std::max(d, std::abs(re - std::round(re)));
  if (std::round(re) < -0.5) d = std::max(d, -re);
  R.residual = d;
  R.nonneg_integral = d <= 1e-8;
  return R;
}

} // namespace gcx
