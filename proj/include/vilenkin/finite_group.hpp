#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vilenkin/cyclotomic.hpp"

namespace vilenkin {

// A finite p-group given by its Cayley table together with the exact trace
// functions of its irreducible unitary representations.
struct FiniteGroup {
  std::string name;
  long long p = 0;
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mul;        // Cayley table
  std::vector<int> inverse;
  std::vector<std::string> irrep_names;
  std::vector<long long> irrep_dims;
  std::vector<std::vector<Cyclo>> irrep_traces;  // [irrep][element]

  int num_irreps() const { return static_cast<int>(irrep_dims.size()); }
  // Index of the trivial representation.
  int trivial_irrep() const;
};

// Z/p^n with its p^n characters.
std::shared_ptr<const FiniteGroup> cyclic_group(long long p, int n);

// H_d(Z_p / p^n Z_p); irreducibles come from the level-n dual of H_d(Z_p).
std::shared_ptr<const FiniteGroup> heisenberg_quotient_group(long long p, int n, int d);

}  // namespace vilenkin
