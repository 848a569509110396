#ifndef BAERLAB_SIMPLICIAL_LES_HPP
#define BAERLAB_SIMPLICIAL_LES_HPP

#include <string>
#include <vector>

#include "baerlab/exact_seq.hpp"
#include "baerlab/simplicial.hpp"

namespace baerlab::simp {

// Levelwise-surjective simplicial map; construction verifies surjectivity of
// every level and commutation with all faces and degeneracies.
struct LevelwiseSurjection {
  SAbPtr total, base;
  std::vector<AbHom> level_maps;
};
LevelwiseSurjection make_levelwise_surjection(SAbPtr total, SAbPtr base,
                                              std::vector<AbHom> maps);

// Levelwise kernel with the restricted simplicial structure.
struct KernelObject {
  SAbPtr object;
  std::vector<AbHom> include;  // kernel level n -> total level n
};
KernelObject simplicial_kernel(const LevelwiseSurjection& f);

// Homotopy long exact sequence of the fibration: terms run
//   pi_{T-1}(K) -> pi_{T-1}(X) -> pi_{T-1}(Y) -> pi_{T-2}(K) -> ... -> pi_0(Y) -> 0.
// The connecting map out of degree T is unknowable on a truncation; the
// leading slot is reported indeterminate rather than guessed.
struct LesOutcome {
  seq::ExactSeqInstance sequence;
  KernelObject kernel;
  std::vector<std::string> notes;
};
LesOutcome les_of_surjection(const LevelwiseSurjection& f);

// Degree-n comparison of H_n(N(x ⊗ y)), H_n(N(x) ⊗ N(y)) and the Kuenneth
// expansion; requires n <= min(Tx, Ty) - 2.
struct KunnethReport {
  FgAbGroup via_simplicial;
  FgAbGroup via_moore_tensor;
  FgAbGroup via_formula;
  bool all_agree = false;
};
KunnethReport kunneth_check(const TruncSimplicialAb& x, const TruncSimplicialAb& y,
                            int n);

}  // namespace baerlab::simp

#endif
