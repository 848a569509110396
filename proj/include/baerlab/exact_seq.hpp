#ifndef BAERLAB_EXACT_SEQ_HPP
#define BAERLAB_EXACT_SEQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "baerlab/fg_ab.hpp"

namespace baerlab::seq {

using ab::AbHom;
using ab::FgAbGroup;
using baerlab::Int;

// A term is either a known group or a labeled unknown; unknowns are
// first-class values, never nulls.
struct Term {
  std::optional<FgAbGroup> group;
  std::string label;
  bool known() const { return group.has_value(); }
  static Term of(FgAbGroup g, std::string label = "");
  static Term unknown(std::string label);
};

// A map slot is a concrete hom when both endpoints are known, otherwise a
// labeled symbol.
struct MapSlot {
  std::optional<AbHom> hom;
  std::string label;
  bool known() const { return hom.has_value(); }
  static MapSlot of(AbHom h, std::string label = "");
  static MapSlot symbolic(std::string label = "");
};

// Finite run of abelian groups and maps with exactness obligations at every
// interior slot.
struct ExactSeqInstance {
  std::vector<Term> terms;
  std::vector<MapSlot> maps;  // maps[i] : terms[i] -> terms[i+1]
  ExactSeqInstance(std::vector<Term> ts, std::vector<MapSlot> ms);
  int size() const { return static_cast<int>(terms.size()); }
};

enum class SlotStatus { Exact, Inexact, Undetermined };

struct SlotVerdict {
  int index = 0;  // interior term index
  SlotStatus status = SlotStatus::Undetermined;
  std::string witness;  // populated when inexact
};

// Decides image = kernel at every fully-known interior slot; returns a
// verdict per interior position.
std::vector<SlotVerdict> verify_exactness(const ExactSeqInstance& s);
bool all_determined_exact(const std::vector<SlotVerdict>& vs);

// Constraints derivable for an unknown term from the exactness obligations.
struct TermConstraint {
  int index = 0;
  std::string label;
  std::optional<FgAbGroup> forced;       // exact value when determined
  std::optional<int> rank;               // forced free rank
  std::optional<Int> order_divides;      // |X| divides this (when finite)
  Int order_multiple_of = 1;             // this divides |X|
  std::vector<FgAbGroup> candidates;     // extension enumeration, when finite
};

// Derives constraints for every unknown term; throws Errc::Inconsistent when
// the obligations cannot be satisfied.
std::vector<TermConstraint> solve_unknowns(const ExactSeqInstance& s);

// Whether a concrete value satisfies a constraint.
bool constraint_admits(const TermConstraint& c, const FgAbGroup& value);

// All abelian groups X (up to iso) fitting 0 -> A -> X -> B -> 0, for
// |A||B| <= 64; exhaustive subgroup search, ordered deterministically.
std::vector<FgAbGroup> enumerate_extensions(const FgAbGroup& a, const FgAbGroup& b);

// Two parallel exact five-term rows with four outer vertical isomorphisms
// and a candidate middle map; certifies the middle map is an isomorphism by
// direct kernel/cokernel computation after validating the five-lemma
// hypotheses (rows exact, squares commute, outer verticals iso).
struct FiveLemmaInput {
  ExactSeqInstance top, bottom;
  std::vector<AbHom> verticals;  // exactly 5, index 2 is the candidate middle
};
struct FiveLemmaVerdict {
  bool middle_is_iso = false;
  std::string detail;
};
FiveLemmaVerdict five_lemma(const FiveLemmaInput& in);

}  // namespace baerlab::seq

#endif
