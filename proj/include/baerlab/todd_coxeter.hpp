#ifndef BAERLAB_TODD_COXETER_HPP
#define BAERLAB_TODD_COXETER_HPP

#include <vector>

#include "baerlab/finite_group.hpp"
#include "baerlab/word.hpp"

namespace baerlab::grp {

// Complete coset table over the alphabet g_0, g_0^-1, g_1, g_1^-1, ...
// Cosets are renumbered by breadth-first search from coset 0, so output is
// deterministic and words read off the BFS tree are shortlex-least.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> tab;  // cosets x 2*ngens
  std::vector<Word> rep_words;        // shortlex representative per coset
  int cosets() const { return static_cast<int>(tab.size()); }
};

// Enumerates cosets of <sub> in the presented group.  Throws
// Errc::LimitExceeded once more than max_cosets rows are needed; a closed
// table is always a correct answer.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& sub,
                        int max_cosets = 100000);

// Regular representation: coset table of the trivial subgroup turned into a
// multiplication-table group; element names are the shortlex words.
struct TcGroup {
  GroupPtr group;
  std::vector<int> gen_elems;  // element index realizing each generator
};
TcGroup todd_coxeter_group_full(const Presentation& p, int max_cosets = 100000,
                                int max_order = 64);
GroupPtr todd_coxeter_group(const Presentation& p, int max_cosets = 100000,
                            int max_order = 64);

}  // namespace baerlab::grp

#endif
