#ifndef BAERLAB_SIMPLICIAL_HPP
#define BAERLAB_SIMPLICIAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "baerlab/chain.hpp"

namespace baerlab::simp {

// Simplicial abelian group truncated at level T: levels 0..T, faces
// d_i : level n -> n-1 (0 <= i <= n), degeneracies s_i : level n -> n+1
// (defined for n < T).  faces[n] is indexed by n >= 1, degens[n] by n < T.
struct TruncSimplicialAb {
  int T = 0;
  std::vector<FgAbGroup> levels;
  std::vector<std::vector<AbHom>> faces;   // faces[n][i], n in 1..T
  std::vector<std::vector<AbHom>> degens;  // degens[n][i], n in 0..T-1
  bool verified = false;                   // identity check already passed

  const AbHom& d(int n, int i) const { return faces[n][i]; }
  const AbHom& s(int n, int i) const { return degens[n][i]; }
};

struct IdentityViolation {
  char family;  // 'd' = face-face, 's' = degen-degen, 'm' = mixed
  int level, i, j;
  std::string describe() const;
};

struct IdentityReport {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

IdentityReport check_simplicial_identities(const TruncSimplicialAb& x);

// Constant object on A: every level A, every structure map the identity.
TruncSimplicialAb constant_object(const FgAbGroup& a, int T);

// Moore complex: N_n = intersection of ker d_0..d_{n-1}, differential the
// restriction of d_n.  Built by literal kernel intersections.
struct MooreComplex {
  ChainComplexAb complex;
  std::vector<AbHom> include;  // N_n -> level n
};
MooreComplex moore_complex(const TruncSimplicialAb& x);

// pi_n as H_n of the Moore complex; requires n <= T-1 so the boundary from
// level n+1 exists.
FgAbGroup homotopy(const TruncSimplicialAb& x, int n);

// Levelwise tensor with diagonal structure maps, truncated at out_trunc.
TruncSimplicialAb tensor_diagonal(const TruncSimplicialAb& x,
                                  const TruncSimplicialAb& y, int out_trunc);

using SAbPtr = std::shared_ptr<const TruncSimplicialAb>;
SAbPtr share(TruncSimplicialAb x);

}  // namespace baerlab::simp

#endif
