#ifndef BAERLAB_HALL_HPP
#define BAERLAB_HALL_HPP

#include <string>
#include <vector>

#include "baerlab/ints.hpp"

namespace baerlab::grp {

// Basic commutator in a Hall basis: either a generator or a bracket of two
// earlier basis elements.
struct BasicCommutator {
  int weight = 1;
  int left = -1;   // indices into the basis list; -1 for generators
  int right = -1;
  int gen = -1;    // generator index when weight == 1
};

struct HallBasis {
  int ngens = 0;
  std::vector<BasicCommutator> elements;        // all weights up to the query
  std::vector<int> of_weight(int w) const;      // indices of that weight
  std::string bracket_string(int idx) const;    // e.g. "[[x1,x2],x1]"
};

// Hall basis of weight w on n letters together with the count chi_w(n).
// The count always satisfies Witt's formula (1/w) sum_{d|w} mu(d) n^{w/d};
// construction and formula are computed independently and cross-checked.
struct HallWittResult {
  HallBasis basis;
  std::vector<int> weight_w_indices;
  long long count = 0;
};
HallWittResult hall_witt(int n, int w);

long long witt_number(long long n, long long w);  // Moebius-sum formula

}  // namespace baerlab::grp

#endif
