#ifndef BAERLAB_DOLD_KAN_HPP
#define BAERLAB_DOLD_KAN_HPP

#include "baerlab/simplicial.hpp"

namespace baerlab::simp {

// Dold-Kan construction: a truncated simplicial abelian group whose Moore
// complex recovers c in degrees below T.  Level n is the direct sum of one
// copy of C_k per monotone surjection [n] ->> [k].
TruncSimplicialAb dold_kan(const ChainComplexAb& c, int T);

// Functoriality: the levelwise maps induced by a chain map (blockwise per
// surjection summand).  Objects must be dold_kan outputs at truncation T.
std::vector<AbHom> dold_kan_map(const ChainComplexAb& src_c,
                                const TruncSimplicialAb& src_obj,
                                const ChainComplexAb& dst_c,
                                const TruncSimplicialAb& dst_obj,
                                const std::vector<AbHom>& chain_map);

// Direct sum of chain complexes, blockwise.
ChainComplexAb chain_direct_sum(const ChainComplexAb& a, const ChainComplexAb& b);

}  // namespace baerlab::simp

#endif
