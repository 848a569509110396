#ifndef BAERLAB_AB_COLIMIT_HPP
#define BAERLAB_AB_COLIMIT_HPP

#include <map>
#include <utility>
#include <vector>

#include "baerlab/fg_ab.hpp"

namespace baerlab::ab {

// Finite upward-directed system of f.g. abelian groups.  Edges are given by
// the caller; the constructor closes them transitively, checks functoriality
// on every comparable chain and rejects non-directed index posets.
class DirectedSystemAb {
 public:
  DirectedSystemAb(std::vector<FgAbGroup> objects,
                   std::map<std::pair<int, int>, AbHom> edges);

  int size() const { return static_cast<int>(objects_.size()); }
  const FgAbGroup& object(int i) const { return objects_[i]; }
  bool leq(int i, int j) const;
  const AbHom& transition(int i, int j) const;  // i ≤ j
  const std::vector<std::pair<int, int>>& comparable_pairs() const {
    return pairs_;
  }
  int top() const { return top_; }  // finite directed posets have a maximum

 private:
  std::vector<FgAbGroup> objects_;
  std::map<std::pair<int, int>, AbHom> transitions_;
  std::vector<std::pair<int, int>> pairs_;
  int top_ = -1;
};

// Coequalizer presentation: direct sum of all objects modulo the
// identifications x - transition(x), canonicalized.
FgAbGroup colimit(const DirectedSystemAb& sys);

}  // namespace baerlab::ab

#endif
