#pragma once
#include <string>
#include <vector>

#include "gcx/error.hpp"

namespace gcx {

// Finite group as an explicit multiplication table. Identity is always
// index 0 (load_group re-indexes if needed). Immutable after construction.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> table; // table[g][h] = g*h
  std::vector<int> inverse;            // inverse[g]

  int mul(int g, int h) const { return table[g][h]; }
  int inv(int g) const { return inverse[g]; }
  int conj(int g, int h) const { return mul(mul(g, h), inverse[g]); } // g h g^-1
};

inline constexpr int kDefaultMaxOrder = 64;

// Validates associativity, identity and inverses. If the identity of the
// input table is not at index 0, the table is re-indexed and *warning is set.
FiniteGroup load_group(const std::vector<std::vector<int>>& table,
                       std::string* warning = nullptr,
                       int max_order = kDefaultMaxOrder);

// Smallest subset containing gens and the identity, closed under the table.
// Returned sorted ascending.
std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

// g h g^-1 h^-1
int commutator(const FiniteGroup& G, int g, int h);

// Least m >= 1 with g^m = 1.
int element_order(const FiniteGroup& G, int g);

// Convenience constructors used by tests and examples.
FiniteGroup cyclic_group(int m);
FiniteGroup klein_four();       // Z/2 x Z/2; elements 0,1,2,3 = (0,0),(1,0),(0,1),(1,1)
FiniteGroup symmetric3();       // S3, order 6
FiniteGroup dihedral4();        // D4, order 8
FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B);

} // namespace gcx
