#ifndef BAERLAB_VARIETY_HPP
#define BAERLAB_VARIETY_HPP

#include <string>
#include <vector>

#include "baerlab/finite_group.hpp"
#include "baerlab/word.hpp"

namespace baerlab::grp {

// Variety of groups given by its defining laws.  Supported: abelian
// ([x1,x2]), abelian of exponent q ([x1,x2] and x1^q), nilpotent of class c
// (the weight-(c+1) left-normed commutator).
struct VarietySpec {
  enum class Kind { Abelian, AbelianExpQ, NilpotentC };
  Kind kind = Kind::Abelian;
  long long param = 0;  // q or c

  static VarietySpec abelian() { return {Kind::Abelian, 0}; }
  static VarietySpec abelian_exp_q(long long q);
  static VarietySpec nilpotent_c(long long c);

  std::vector<Word> laws() const;
  int law_arity(const Word& w) const { return w.max_gen() + 1; }
  std::string name() const;
  bool operator==(const VarietySpec& o) const {
    return kind == o.kind && param == o.param;
  }
};

// Verbal subgroup V(G): closure of all law values over all argument tuples.
Subgroup verbal_subgroup(GroupPtr g, const VarietySpec& v);

// Lue product [N V* G]: closure of law(g1,..,gi·x,..,gk)·law(g1,..,gk)^-1
// over all tuples, argument positions and x in N.
Subgroup lue_product(GroupPtr g, const Subgroup& n, const VarietySpec& v);

// M #_q N: closure of {[m,n]·t^q : m in M, n in N, t in M∩N}.
Subgroup sharp_q(GroupPtr g, const Subgroup& m, const Subgroup& n, long long q);

// Iterated commutator [N, G, ..., G] (c copies of G); the empirical
// comparison partner for lue_product under nilpotent laws.
Subgroup iterated_commutator(GroupPtr g, const Subgroup& n, int c);

}  // namespace baerlab::grp

#endif
