#ifndef BAERLAB_SIMPLICIAL_GROUP_HPP
#define BAERLAB_SIMPLICIAL_GROUP_HPP

#include "baerlab/finite_group.hpp"
#include "baerlab/simplicial.hpp"

namespace baerlab::simp {

// Truncated simplicial group with finite table levels.
struct TruncSimplicialGrp {
  int T = 0;
  std::vector<grp::GroupPtr> levels;
  std::vector<std::vector<grp::GroupHom>> faces;   // faces[n][i], n in 1..T
  std::vector<std::vector<grp::GroupHom>> degens;  // degens[n][i], n in 0..T-1
  const grp::GroupHom& d(int n, int i) const { return faces[n][i]; }
  const grp::GroupHom& s(int n, int i) const { return degens[n][i]; }
};

IdentityReport check_simplicial_identities(const TruncSimplicialGrp& x);

TruncSimplicialGrp constant_group_object(grp::GroupPtr g, int T);

// pi_0 = level0 / d_1(ker d_0) (image normal-closed defensively).
grp::GroupPtr pi0_finite(const TruncSimplicialGrp& x);

// pi_1 = ker(d_1|N_1) / d_2(N_2) with N_n the Moore subgroups; abelianness
// is asserted and a violation reported as a model defect (pi1-not-abelian).
FgAbGroup pi1_finite(const TruncSimplicialGrp& x);

// Table model of a finite FgAbGroup and the transport of an AbHom; used to
// turn finite simplicial abelian fixtures into simplicial group fixtures.
grp::GroupPtr finite_model(const FgAbGroup& g);
TruncSimplicialGrp to_group_object(const TruncSimplicialAb& x);

}  // namespace baerlab::simp

#endif
