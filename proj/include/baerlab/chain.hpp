#ifndef BAERLAB_CHAIN_HPP
#define BAERLAB_CHAIN_HPP

#include <vector>

#include "baerlab/fg_ab.hpp"

namespace baerlab::simp {

using ab::AbHom;
using ab::FgAbGroup;
using ab::IntMatrix;

// Chain complex C_0..C_T of f.g. abelian groups; diff[k] : C_{k+1} -> C_k.
// Construction verifies that consecutive differentials compose to zero.
struct ChainComplexAb {
  std::vector<FgAbGroup> groups;
  std::vector<AbHom> diff;
  ChainComplexAb(std::vector<FgAbGroup> gs, std::vector<AbHom> ds);
  int length() const { return static_cast<int>(groups.size()) - 1; }
  const AbHom& boundary_from(int n) const { return diff[n - 1]; }  // C_n -> C_{n-1}
};

bool levels_free(const ChainComplexAb& c);

// Cycles, homology and the projection used to push cycle classes around.
struct HomologySlot {
  FgAbGroup cycles;
  AbHom cycle_incl;         // cycles -> C_n
  FgAbGroup homology;
  AbHom cycle_to_homology;  // cycles -> homology (cokernel projection)
};
HomologySlot homology_slot(const ChainComplexAb& c, int n);
FgAbGroup chain_homology(const ChainComplexAb& c, int n);

// h : C_n(src) -> C_m(dst) known to send cycles to cycles and boundaries to
// boundaries; returns the induced map on homology.
AbHom induced_on_homology(const HomologySlot& s, const HomologySlot& t, const AbHom& h);

// Tensor product of chain complexes with the usual sign convention, built up
// to degree `up_to`.
ChainComplexAb tensor_complex(const ChainComplexAb& a, const ChainComplexAb& b,
                              int up_to);

// Kuenneth value  sum_{i+j=n} H_i(a)⊗H_j(b)  +  sum_{i+j=n-1} Tor(H_i, H_j),
// cross-checked against the direct SNF homology of a⊗b; requires levelwise
// free complexes.
FgAbGroup kunneth_homology(const ChainComplexAb& a, const ChainComplexAb& b, int n);

}  // namespace baerlab::simp

#endif
