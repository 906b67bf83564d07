#pragma once
#include "gcx/verlinde.hpp"

namespace gcx {

// Unnormalized g-crossed S-matrix: rows are sector objects M with dims,
// columns are the g-fixed characters C with untwisted dims S_{1,C} = dim(C);
// S_{M,C} = chi_C^g([M]) dim(C).
struct CrossedSMatrixData {
  int sector = 0;
  std::vector<std::string> labels;        // row labels
  std::vector<double> dims;               // dim(M) per row
  std::vector<int> chars;                 // column -> character index
  std::vector<double> char_dims;          // dim(C) per column
  std::vector<std::vector<cplx>> matrix;  // [row][col]
  double dimB = 0.0;

  int col_of(int chi) const {
    for (size_t c = 0; c < chars.size(); ++c)
      if (chars[c] == chi) return (int)c;
    return -1;
  }
};

// Assemble S^g from twisted characters of the sector basis. rows[i] must lie
// in the g-component and together span A_g; dims are dim(M) per row, char_dims
// the untwisted dims per g-fixed character (column order = fixed_characters).
// dimB <= 0 means: derive as sum of char_dims^2, allowed only in the trivial
// sector where all columns are present.
CrossedSMatrixData crossed_s_matrix(const CrossedAlgebra& A, int g,
                                    const std::vector<std::string>& labels,
                                    const std::vector<AlgebraElement>& rows,
                                    const std::vector<double>& dims,
                                    const std::vector<double>& char_dims, double dimB,
                                    const TwistedCharacterTable* T = nullptr,
                                    double tol = kDefaultTol);

struct UnitarityReport {
  bool pass = false;
  double residual = 0.0;
  std::string witness;
};

// Checks S conj(S)^T = dimB I and conj(S)^T S = dimB I.
UnitarityReport s_unitarity_check(const CrossedSMatrixData& S, double tol = kDefaultTol);

struct CatVerlindeResult {
  cplx value;
  bool nonneg_integral = false;
  double residual = 0.0;
};

// dim Hom(1, Omega_{g_1,h_1}...Omega_{g_r,h_r} M_1...M_s) =
//   dimB^{r-1} sum_D (1/S_{1,D})^{s+2r-2} prod_j S^{m_j}_{M_j,D} / chi_D(phi1(...)),
// D over characters fixed by the subgroup generated by all arguments.
// Objects are (sector, row) references into `sectors`; phi1 may be null
// (trivial sign layer), otherwise a unitary 2-cochain on the same base.
CatVerlindeResult categorical_verlinde(const std::map<int, CrossedSMatrixData>& sectors,
                                       const GAction& action, const Cochain* phi1,
                                       const std::vector<std::pair<int, int>>& pairs,
                                       const std::vector<std::pair<int, int>>& objects,
                                       double tol = kDefaultTol);

} // namespace gcx
