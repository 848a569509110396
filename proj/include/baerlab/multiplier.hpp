#ifndef BAERLAB_MULTIPLIER_HPP
#define BAERLAB_MULTIPLIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baerlab/bar_model.hpp"
#include "baerlab/exact_seq.hpp"
#include "baerlab/simplicial_les.hpp"
#include "baerlab/variety.hpp"

namespace baerlab::mult {

enum class Method { BarModel, FreeProduct, FreeProductCoprime, LesForced, WittFormula, Unknown };
const char* method_tag(Method m);

// Value of a (triple) multiplier computation.  Bar-model values live one
// degree above the resolution picture, recorded by degree_shift.
struct MultiplierResult {
  std::optional<FgAbGroup> value;
  std::optional<FgAbGroup> lower_bound;  // forced direct summand when unknown
  std::vector<FgAbGroup> extension_candidates;
  Method method = Method::Unknown;
  bool degree_shift = false;
  std::string label;
  std::vector<std::string> notes;
  bool known() const { return value.has_value(); }
};

// Bar squares over the quotient diagram of a triple.
struct QuotientSquare {
  grp::TripleInstance triple;
  BarModel bar_g, bar_gn, bar_gm, bar_gmn;
  std::vector<ab::AbHom> alpha;  // bar(G)   -> bar(G/N)
  std::vector<ab::AbHom> beta;   // bar(G)   -> bar(G/M)
  std::vector<ab::AbHom> gamma;  // bar(G/M) -> bar(G/MN)
  std::vector<ab::AbHom> delta;  // bar(G/N) -> bar(G/MN)
};
QuotientSquare quotient_square(const grp::TripleInstance& t, int T,
                               const BarCaps& caps = {});

// Levelwise kernel of the induced map ker(beta) -> ker(delta); the returned
// include maps land in the ambient bar(G) levels.
struct DoubleKernel {
  simp::KernelObject ker_beta, ker_delta;
  simp::LevelwiseSurjection alpha_restricted;  // ker_beta ->> ker_delta
  simp::KernelObject object;                   // the double kernel itself
  std::vector<ab::AbHom> include_in_bar;       // dk level -> bar(G) level
};
DoubleKernel double_kernel(const QuotientSquare& sq);

MultiplierResult triple_multiplier_bar(const grp::TripleInstance& t,
                                       const BarCaps& caps = {});
MultiplierResult relative_multiplier_bar(grp::GroupPtr g, const grp::Subgroup& n,
                                         const BarCaps& caps = {});

// Assembled long exact sequences.  paper_sequence follows the displayed
// shape with group-engine tails; bar_sequence (abelian variety only) is the
// fully computed homotopy LES of the matching fibration.
struct LesReport {
  seq::ExactSeqInstance paper_sequence;
  std::vector<seq::SlotVerdict> paper_verdicts;
  std::optional<seq::ExactSeqInstance> bar_sequence;
  std::vector<seq::SlotVerdict> bar_verdicts;
  std::vector<std::string> checks;  // verified cross-identifications
  std::vector<std::string> notes;
  bool exact_ok = true;  // no slot anywhere verified inexact
  LesReport() : paper_sequence({seq::Term::unknown("?"), seq::Term::unknown("?")},
                               {seq::MapSlot::symbolic()}) {}
};

enum class LesDepth { TailsOnly, Full };

LesReport les_pair(grp::GroupPtr g, const grp::Subgroup& n, const grp::VarietySpec& v,
                   const BarCaps& caps = {});

struct TripleLes {
  LesReport seq_a;  // ... -> VM(G,N) -> VM(G/M,MN/M) -> pi0 -> N/[NV*G] -> MN/M[NV*G] -> 0
  LesReport seq_b;  // ... -> VM(G,M) -> VM(G/N,MN/N) -> pi0 -> M/[MV*G] -> MN/N[MV*G] -> 0
};
TripleLes les_triple(const grp::TripleInstance& t, const grp::VarietySpec& v,
                     const BarCaps& caps = {}, LesDepth depth = LesDepth::Full);

LesReport ellis_triple_tail(const grp::TripleInstance& t);

MultiplierResult freeprod_multiplier(const grp::TripleInstance& t1,
                                     const grp::TripleInstance& t2,
                                     const grp::VarietySpec& v,
                                     const BarCaps& caps = {});

// Directed system of triples; construction mirrors DirectedSystemAb
// (transitive closure, functoriality, directedness).
struct TripleSystem {
  std::vector<grp::TripleInstance> objects;
  std::map<std::pair<int, int>, grp::TripleMorphism> transitions;
  int top = -1;
  const grp::TripleMorphism& transition(int i, int j) const;
};
TripleSystem make_triple_system(std::vector<grp::TripleInstance> objects,
                                std::map<std::pair<int, int>, grp::TripleMorphism> edges);

struct ColimitVerdict {
  FgAbGroup lhs;  // multiplier of the colimit triple
  FgAbGroup rhs;  // colimit of the stage multipliers
  bool isomorphic = false;
};
ColimitVerdict colimit_multiplier(const TripleSystem& sys, const grp::VarietySpec& v,
                                  const BarCaps& caps = {});

FgAbGroup witt_multiplier_free_abelian(long long n, long long c);
MultiplierResult witt_multiplier_result(long long n, long long c);

// Torsion certificates for the pair and triple inference rules.
struct TorsionHypothesis {
  std::string name;
  bool torsion = false;
  std::string provenance;  // "computed" | "asserted"
};
enum class TorsionRule { Pair, Triple };
struct TorsionRequest {
  TorsionRule rule = TorsionRule::Pair;
  std::vector<TorsionHypothesis> hypotheses;
  long long c_target = 2;
};
struct TorsionCertificate {
  std::vector<TorsionHypothesis> hypotheses;
  std::string conclusion;
  std::string rule;  // "pair-torsion-rule" | "triple-torsion-rule"
  long long c_from = 2;
};
struct TorsionOutcome {
  bool emitted = false;
  std::optional<TorsionCertificate> certificate;
  std::string reason;
};
TorsionOutcome certify_torsion(const TorsionRequest& req, bool strict = false);

// Functorially induced map between bar-model multiplier values.
struct InducedMultiplierMap {
  MultiplierResult src_result, dst_result;
  ab::AbHom map;
};
InducedMultiplierMap induced_map(const grp::TripleMorphism& f, const grp::VarietySpec& v,
                                 const BarCaps& caps = {});

}  // namespace baerlab::mult

#endif
