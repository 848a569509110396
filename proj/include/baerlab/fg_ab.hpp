#ifndef BAERLAB_FG_AB_HPP
#define BAERLAB_FG_AB_HPP

#include <optional>
#include <string>
#include <vector>

#include "baerlab/linalg.hpp"

namespace baerlab::ab {

// Finitely generated abelian group presented as the cokernel of an integer
// matrix (columns = relations on a free basis).  The canonical form (free
// rank + invariant factor chain) is computed eagerly; values are immutable.
class FgAbGroup {
 public:
  FgAbGroup();  // trivial group, zero generators
  explicit FgAbGroup(IntMatrix relations);
  static FgAbGroup free_group(int n);
  static FgAbGroup from_invariants(int rank, const std::vector<Int>& factors);
  static FgAbGroup trivial();

  int gens() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }
  int rank() const { return rank_; }
  const std::vector<Int>& factors() const { return factors_; }

  bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool is_free() const { return factors_.empty(); }
  Int order() const;  // throws for infinite groups

  bool same_canonical(const FgAbGroup& o) const {
    return rank_ == o.rank_ && factors_ == o.factors_;
  }
  std::string canonical_str() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"

 private:
  IntMatrix relations_;
  int rank_ = 0;
  std::vector<Int> factors_;  // ascending divisibility chain, all >= 2
};

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

// Coordinates for a chosen Smith basis of the group: generator coordinates
// <-> canonical coordinates (torsion coords ordered as factors(), then free
// coords).  Used for element enumeration of finite groups.
struct SmithCoords {
  IntMatrix to_smith;    // gens x gens (the left SNF transform)
  IntMatrix from_smith;  // its inverse
  std::vector<int> unit_rows;     // smith rows with d = 1 (coordinate dies)
  std::vector<int> torsion_rows;  // rows with d >= 2, order matches factors()
  std::vector<Int> torsion_orders;
  std::vector<int> free_rows;
  // canonical coords of a generator-coordinate vector
  std::vector<Int> canonical_of(const std::vector<Int>& gen_coords) const;
  // generator coords of canonical coords
  std::vector<Int> gen_coords_of(const std::vector<Int>& canonical) const;
};
SmithCoords smith_coords(const FgAbGroup& g);

// Homomorphism of f.g. abelian groups, stored on generators; matrix is
// dst.gens() x src.gens().  Well-definedness is verified at construction.
class AbHom {
 public:
  AbHom();  // zero map between trivial groups
  AbHom(FgAbGroup src, FgAbGroup dst, IntMatrix mat);
  static AbHom identity(const FgAbGroup& g);
  static AbHom zero(const FgAbGroup& src, const FgAbGroup& dst);

  const FgAbGroup& src() const { return src_; }
  const FgAbGroup& dst() const { return dst_; }
  const IntMatrix& matrix() const { return mat_; }

  AbHom after(const AbHom& inner) const;  // this ∘ inner
  AbHom plus(const AbHom& o) const;
  AbHom minus(const AbHom& o) const;
  bool same_map(const AbHom& o) const;
  bool is_zero_map() const;
  std::vector<Int> apply(const std::vector<Int>& x) const { return mat_.apply(x); }

 private:
  FgAbGroup src_, dst_;
  IntMatrix mat_;
};

struct HomParts {
  FgAbGroup kernel;
  AbHom kernel_incl;  // kernel -> src
  FgAbGroup image;
  AbHom image_incl;  // image -> dst
  AbHom image_proj;  // src -> image
  FgAbGroup cokernel;
  AbHom coker_proj;  // dst -> cokernel
};
HomParts hom_parts(const AbHom& f);

// Factor g through an injective hom inc (g = inc ∘ h); requires the image
// of g to land in the image of inc.  Deterministic solution choice.
AbHom factor_through(const AbHom& inc, const AbHom& g);

// Tensor product on the presentation level: generators are ordered pairs
// (index i_a * b.gens + i_b); relations are bilinearity against both
// presentations.  tensor_hom is the matching Kronecker map.
FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b);
AbHom tensor_hom(const AbHom& f, const AbHom& g);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b);

struct DirectSum {
  FgAbGroup group;
  AbHom inj_a, inj_b;    // A -> A⊕B, B -> A⊕B
  AbHom proj_a, proj_b;  // A⊕B -> A, A⊕B -> B
};
DirectSum direct_sum_full(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

FgAbGroup exterior_square(const FgAbGroup& a);

// Subgroup comparison through inclusions into a common ambient group.
bool same_subgroup(const AbHom& inc_a, const AbHom& inc_b);

}  // namespace baerlab::ab

#endif
