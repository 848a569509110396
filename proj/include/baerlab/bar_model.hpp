#ifndef BAERLAB_BAR_MODEL_HPP
#define BAERLAB_BAR_MODEL_HPP

#include "baerlab/finite_group.hpp"
#include "baerlab/simplicial.hpp"

namespace baerlab::mult {

using ab::FgAbGroup;

struct BarCaps {
  int max_order = 8;
  int trunc = 4;
};

// Levelwise free simplicial abelian group on tuples of group elements;
// level n has rank |G|^n, faces drop or multiply adjacent entries, and
// degeneracies insert the identity.  Its homotopy is integral group
// homology.
struct BarModel {
  grp::GroupPtr group;
  simp::SAbPtr object;
  // tuple index at level n: sum of element indices times |G|^k
};
BarModel bar_model(grp::GroupPtr g, int T, const BarCaps& caps = {});

// Levelwise map induced by a group homomorphism (tuple-wise image).
std::vector<ab::AbHom> bar_induced(const BarModel& src, const BarModel& dst,
                                   const grp::GroupHom& f);

// H_n(g) via the bar model's Moore homology (builds truncation n+1).
FgAbGroup homology_group(grp::GroupPtr g, int n, const BarCaps& caps = {});

// Independent second route: homology of the normalized complex on tuples
// without identity entries, alternating-sum differential.
FgAbGroup normalized_bar_homology(grp::GroupPtr g, int n);

}  // namespace baerlab::mult

#endif
