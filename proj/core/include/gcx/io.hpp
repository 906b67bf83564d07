#pragma once
#include "gcx/modular.hpp"

namespace gcx::io {

// Loaders accept either a path to a JSON file or a builtin name.
// Builtin groups: c1..c12 (cyclic), klein4, s3, d4.
// Builtin bases: c1/trivial, z2, toric, fib.
// Builtin cocycles: trivial, twist (klein4: phi(g,h) = (-1)^{g2 h1}).
FiniteGroup load_group(const std::string& spec, std::string* warning = nullptr);
void save_group(const std::string& path, const FiniteGroup& G);

FrobeniusBase load_base(const std::string& spec, unsigned long long seed = 0);
void save_base(const std::string& path, const FrobeniusBase& B);

// Action spec: "trivial", "swap" (permutation chi -> chi with two coordinates
// of the character value vector exchanged; only for bases with fusion data),
// or a {"perm": [...]} file.
GAction load_action(const std::string& spec, const FrobeniusBase& base,
                    const FiniteGroup& group);
void save_action(const std::string& path, const GAction& A);

Cochain load_cochain(const std::string& spec, const GAction& action);
void save_cochain(const std::string& path, const Cochain& c);

CrossedAlgebra load_algebra(const std::string& path);
void save_algebra(const std::string& path, const CrossedAlgebra& A);

AlgebraElement load_element(const std::string& path, const CrossedAlgebra& A);

struct Instance {
  std::vector<std::pair<int, int>> pairs;                 // (g,h) handles
  std::vector<std::pair<int, AlgebraElement>> elems;      // (m, a) insertions
};

// Instance spec: a file {"pairs": [[g,h],...], "elems": [[m, {"coeffs": ...}],...]},
// or "abab" (the Klein E_a E_b E_a E_b tuple on a 4-dim extension).
Instance load_instance(const std::string& spec, const CrossedAlgebra& A);

CrossedSMatrixData load_smatrix(const std::string& path);
void save_smatrix(const std::string& path, const CrossedSMatrixData& S);

} // namespace gcx::io
