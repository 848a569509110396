#include "baerlab/multiplier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "baerlab/ab_colimit.hpp"
#include "baerlab/hall.hpp"

namespace baerlab::mult {

const char* method_tag(Method m) {
  switch (m) {
    case Method::BarModel: return "bar-model";
    case Method::FreeProduct: return "free-product";
    case Method::FreeProductCoprime: return "free-product-coprime";
    case Method::LesForced: return "les-forced";
    case Method::WittFormula: return "witt-formula";
    case Method::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using grp::GroupHom;
using grp::GroupPtr;
using grp::Subgroup;
using grp::TripleInstance;
using grp::VarietySpec;

bool bar_applicable(const VarietySpec& v) {
  return v.kind == VarietySpec::Kind::Abelian ||
         (v.kind == VarietySpec::Kind::NilpotentC && v.param == 1);
}

// Quotient of a subgroup S of G by a subgroup K normal in S, with the
// projection indexed by parent elements.
struct SubQuotient {
  GroupPtr group;
  std::vector<int> proj;        // parent element -> coset, or -1 outside S
  std::vector<int> rep_parent;  // coset -> representative parent element
  bool abelian = false;
  std::optional<FgAbGroup> ab_group;
};

SubQuotient sub_quotient(GroupPtr g, const Subgroup& s, const Subgroup& k) {
  for (int x : k.elements())
    if (!s.contains(x))
      throw BaerError(Errc::InvalidArgument, "quotient kernel escapes the subgroup");
  std::vector<int> reindex;
  GroupPtr sg = grp::subgroup_as_group(s, &reindex);
  std::vector<int> local(g->order(), -1);
  for (int i = 0; i < static_cast<int>(reindex.size()); ++i) local[reindex[i]] = i;
  std::vector<int> k_local;
  for (int x : k.elements()) k_local.push_back(local[x]);
  grp::Quotient q = grp::quotient_group(sg, Subgroup(sg, k_local));
  SubQuotient out;
  out.group = q.group;
  out.proj.assign(g->order(), -1);
  for (int i = 0; i < static_cast<int>(reindex.size()); ++i)
    out.proj[reindex[i]] = q.proj[i];
  out.rep_parent.resize(q.group->order());
  for (int c = 0; c < q.group->order(); ++c) out.rep_parent[c] = reindex[q.reps[c]];
  out.abelian = q.group->is_abelian();
  if (out.abelian) out.ab_group = grp::abelian_to_fg(*q.group);
  return out;
}

GroupHom quotient_map(const SubQuotient& a, const SubQuotient& b) {
  std::vector<int> m(a.group->order());
  for (int c = 0; c < a.group->order(); ++c) {
    int img = b.proj[a.rep_parent[c]];
    if (img < 0)
      throw BaerError(Errc::InvalidArgument, "representative escapes target subgroup");
    m[c] = img;
  }
  return grp::make_hom(a.group, b.group, std::move(m));
}

bool group_exact_at(const GroupHom& in, const GroupHom& out) {
  std::set<int> image(in.map.begin(), in.map.end());
  std::set<int> kernel;
  for (int x = 0; x < out.src->order(); ++x)
    if (out.map[x] == out.dst->identity()) kernel.insert(x);
  return image == kernel;
}

FgAbGroup abelianization_fg(GroupPtr g) {
  Subgroup full = Subgroup::full(g);
  grp::Quotient q = grp::quotient_group(g, grp::commutator_subgroup(full, full));
  return grp::abelian_to_fg(*q.group);
}

std::string match_note(const std::string& what, const FgAbGroup& lhs,
                       const FgAbGroup& rhs, bool* ok) {
  bool m = lhs.same_canonical(rhs);
  if (!m && ok) *ok = false;
  return what + ": " + lhs.canonical_str() + (m ? " == " : " != ") +
         rhs.canonical_str() + (m ? " (match)" : " (MISMATCH)");
}

}  // namespace

QuotientSquare quotient_square(const TripleInstance& t, int T, const BarCaps& caps) {
  Subgroup mn = grp::subgroup_product(t.m, t.n);
  grp::Quotient qn = grp::quotient_group(t.g, t.n);
  grp::Quotient qm = grp::quotient_group(t.g, t.m);
  grp::Quotient qmn = grp::quotient_group(t.g, mn);
  BarModel bg = bar_model(t.g, T, caps);
  BarModel bgn = bar_model(qn.group, T, caps);
  BarModel bgm = bar_model(qm.group, T, caps);
  BarModel bgmn = bar_model(qmn.group, T, caps);

  GroupHom pn = grp::make_hom(t.g, qn.group, qn.proj);
  GroupHom pm = grp::make_hom(t.g, qm.group, qm.proj);
  std::vector<int> dmap(qn.group->order()), gmap(qm.group->order());
  for (int c = 0; c < qn.group->order(); ++c) dmap[c] = qmn.proj[qn.reps[c]];
  for (int c = 0; c < qm.group->order(); ++c) gmap[c] = qmn.proj[qm.reps[c]];
  GroupHom pd = grp::make_hom(qn.group, qmn.group, std::move(dmap));
  GroupHom pg = grp::make_hom(qm.group, qmn.group, std::move(gmap));

  QuotientSquare sq{t,
                    bg,
                    bgn,
                    bgm,
                    bgmn,
                    bar_induced(bg, bgn, pn),
                    bar_induced(bg, bgm, pm),
                    bar_induced(bgm, bgmn, pg),
                    bar_induced(bgn, bgmn, pd)};
  for (int n = 0; n <= T; ++n)
    if (!sq.delta[n].after(sq.alpha[n]).same_map(sq.gamma[n].after(sq.beta[n])))
      throw BaerError(Errc::Inconsistent, "bar quotient square does not commute");
  return sq;
}

DoubleKernel double_kernel(const QuotientSquare& sq) {
  int T = sq.bar_g.object->T;
  simp::LevelwiseSurjection beta_s =
      simp::make_levelwise_surjection(sq.bar_g.object, sq.bar_gm.object, sq.beta);
  simp::LevelwiseSurjection delta_s =
      simp::make_levelwise_surjection(sq.bar_gn.object, sq.bar_gmn.object, sq.delta);
  simp::KernelObject kb = simp::simplicial_kernel(beta_s);
  simp::KernelObject kd = simp::simplicial_kernel(delta_s);
  std::vector<ab::AbHom> restricted;
  for (int n = 0; n <= T; ++n)
    restricted.push_back(
        ab::factor_through(kd.include[n], sq.alpha[n].after(kb.include[n])));
  simp::LevelwiseSurjection alpha_rest =
      simp::make_levelwise_surjection(kb.object, kd.object, std::move(restricted));
  simp::KernelObject dk = simp::simplicial_kernel(alpha_rest);
  std::vector<ab::AbHom> into_bar;
  for (int n = 0; n <= T; ++n) into_bar.push_back(kb.include[n].after(dk.include[n]));
  return DoubleKernel{std::move(kb), std::move(kd), std::move(alpha_rest),
                      std::move(dk), std::move(into_bar)};
}

namespace {

// Everything a bar-model multiplier computation produces, kept together so
// induced maps can be built against the same presentations.
struct TripleBarData {
  QuotientSquare sq;
  DoubleKernel dk;
  simp::MooreComplex moore;  // of the double kernel
  simp::HomologySlot h2;
  simp::HomologySlot h1;
};

TripleBarData triple_bar_data(const TripleInstance& t, const BarCaps& caps) {
  QuotientSquare sq = quotient_square(t, 3, caps);
  DoubleKernel dk = double_kernel(sq);
  simp::MooreComplex moore = simp::moore_complex(*dk.object.object);
  simp::HomologySlot h2 = simp::homology_slot(moore.complex, 2);
  simp::HomologySlot h1 = simp::homology_slot(moore.complex, 1);
  return TripleBarData{std::move(sq), std::move(dk), std::move(moore), std::move(h2),
                       std::move(h1)};
}

ab::AbHom induced_h2(const TripleBarData& a, const TripleBarData& b,
                     const GroupHom& f) {
  std::vector<ab::AbHom> barf = bar_induced(a.sq.bar_g, b.sq.bar_g, f);
  int T = a.sq.bar_g.object->T;
  std::vector<ab::AbHom> dk_maps;
  for (int n = 0; n <= T; ++n)
    dk_maps.push_back(ab::factor_through(b.dk.include_in_bar[n],
                                         barf[n].after(a.dk.include_in_bar[n])));
  ab::AbHom moore2 =
      ab::factor_through(b.moore.include[2], dk_maps[2].after(a.moore.include[2]));
  return simp::induced_on_homology(a.h2, b.h2, moore2);
}

}  // namespace

MultiplierResult triple_multiplier_bar(const TripleInstance& t, const BarCaps& caps) {
  TripleBarData data = triple_bar_data(t, caps);
  MultiplierResult r;
  r.value = data.h2.homology;
  r.method = Method::BarModel;
  r.degree_shift = true;
  r.label = "VM(G,M,N)";
  return r;
}

MultiplierResult relative_multiplier_bar(GroupPtr g, const Subgroup& n,
                                         const BarCaps& caps) {
  if (n.parent() != g)
    throw BaerError(Errc::MismatchedParents, "subgroup of a different group");
  if (!n.is_normal()) throw BaerError(Errc::NotNormal, "pair needs a normal subgroup");
  grp::Quotient qn = grp::quotient_group(g, n);
  BarModel bg = bar_model(g, 3, caps);
  BarModel bgn = bar_model(qn.group, 3, caps);
  std::vector<ab::AbHom> alpha =
      bar_induced(bg, bgn, grp::make_hom(g, qn.group, qn.proj));
  simp::LevelwiseSurjection surj =
      simp::make_levelwise_surjection(bg.object, bgn.object, std::move(alpha));
  simp::KernelObject k = simp::simplicial_kernel(surj);
  MultiplierResult r;
  r.value = simp::homotopy(*k.object, 2);
  r.method = Method::BarModel;
  r.degree_shift = true;
  r.label = "VM(G,N)";
  return r;
}

namespace {

seq::Term tail_term(const SubQuotient& q, const std::string& label) {
  if (q.abelian) return seq::Term::of(*q.ab_group, label);
  return seq::Term::unknown(label + " (nonabelian, checked at group level)");
}

// Chain of group-side tail data: terms + element-map homs between them.
struct GroupTail {
  std::vector<SubQuotient> terms;
  std::vector<GroupHom> maps;  // maps[i] : terms[i] -> terms[i+1]
  bool exact_interior = true;  // group-level exactness at interior slots
  bool final_surjective = true;
};

GroupTail make_tail(std::vector<SubQuotient> terms) {
  GroupTail out;
  out.terms = std::move(terms);
  for (std::size_t i = 0; i + 1 < out.terms.size(); ++i)
    out.maps.push_back(quotient_map(out.terms[i], out.terms[i + 1]));
  for (std::size_t i = 1; i + 1 < out.terms.size(); ++i)
    if (!group_exact_at(out.maps[i - 1], out.maps[i])) out.exact_interior = false;
  if (!out.maps.empty() && !grp::hom_surjective(out.maps.back()))
    out.final_surjective = false;
  return out;
}

// appends [tail terms] -> 0 to a term/map list, converting abelian tail
// groups to FgAbGroups and element maps to AbHoms
void append_tail(const GroupTail& tail, std::vector<seq::Term>& terms,
                 std::vector<seq::MapSlot>& maps,
                 const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < tail.terms.size(); ++i) {
    terms.push_back(tail_term(tail.terms[i], labels[i]));
    if (i + 1 < tail.terms.size()) {
      if (tail.terms[i].abelian && tail.terms[i + 1].abelian)
        maps.push_back(seq::MapSlot::of(grp::abelian_hom_to_ab(tail.maps[i])));
      else
        maps.push_back(seq::MapSlot::symbolic("group-level map"));
    }
  }
  // trailing zero
  if (terms.back().known()) {
    maps.push_back(
        seq::MapSlot::of(ab::AbHom::zero(*terms.back().group, FgAbGroup::trivial())));
  } else {
    maps.push_back(seq::MapSlot::symbolic());
  }
  terms.push_back(seq::Term::of(FgAbGroup::trivial(), "0"));
}

void finish_report(LesReport& rep) {
  rep.paper_verdicts = seq::verify_exactness(rep.paper_sequence);
  if (!seq::all_determined_exact(rep.paper_verdicts)) rep.exact_ok = false;
  if (rep.bar_sequence) {
    rep.bar_verdicts = seq::verify_exactness(*rep.bar_sequence);
    if (!seq::all_determined_exact(rep.bar_verdicts)) rep.exact_ok = false;
  }
}

}  // namespace

LesReport les_pair(GroupPtr g, const Subgroup& n, const VarietySpec& v,
                   const BarCaps& caps) {
  if (n.parent() != g)
    throw BaerError(Errc::MismatchedParents, "subgroup of a different group");
  LesReport rep;
  Subgroup full = Subgroup::full(g);
  Subgroup lue = grp::lue_product(g, n, v);
  Subgroup vg = grp::verbal_subgroup(g, v);
  grp::Quotient qn = grp::quotient_group(g, n);
  Subgroup vq = grp::verbal_subgroup(qn.group, v);

  SubQuotient t1 = sub_quotient(g, n, lue);
  SubQuotient t2 = sub_quotient(g, full, vg);
  SubQuotient t3 = sub_quotient(qn.group, Subgroup::full(qn.group), vq);
  // reindex t3's projection through G -> G/N so quotient_map applies
  SubQuotient t3g = t3;
  t3g.proj.assign(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) t3g.proj[x] = t3.proj[qn.proj[x]];
  t3g.rep_parent.resize(t3.group->order());
  for (int c = 0; c < t3.group->order(); ++c)
    t3g.rep_parent[c] = qn.reps[t3.rep_parent[c]];

  GroupTail tail = make_tail({t1, t2, t3g});
  if (!tail.exact_interior || !tail.final_surjective) rep.exact_ok = false;
  rep.checks.push_back(std::string("group-level tail exactness: ") +
                       (tail.exact_interior && tail.final_surjective ? "pass" : "FAIL"));

  std::vector<seq::Term> terms;
  std::vector<seq::MapSlot> maps;

  if (bar_applicable(v)) {
    grp::Quotient qn2 = grp::quotient_group(g, n);
    BarModel bg = bar_model(g, 3, caps);
    BarModel bgn = bar_model(qn2.group, 3, caps);
    std::vector<ab::AbHom> alpha =
        bar_induced(bg, bgn, grp::make_hom(g, qn2.group, qn2.proj));
    simp::LevelwiseSurjection surj =
        simp::make_levelwise_surjection(bg.object, bgn.object, std::move(alpha));
    simp::LesOutcome les = simp::les_of_surjection(surj);
    rep.bar_sequence = les.sequence;
    rep.notes = les.notes;
    // paper-shaped multiplier slots come from the bar LES head
    for (int i = 0; i < 3; ++i) {
      static const char* labels[3] = {"VM(G,N)", "VM(G)", "VM(G/N)"};
      terms.push_back(seq::Term::of(*les.sequence.terms[i].group, labels[i]));
      if (i < 2) maps.push_back(les.sequence.maps[i]);
    }
    maps.push_back(seq::MapSlot::symbolic("connecting (bar-side presentation)"));
    // cross-identifications against the group-engine tails
    const FgAbGroup& pi1k = *les.sequence.terms[3].group;
    const FgAbGroup& pi1x = *les.sequence.terms[4].group;
    const FgAbGroup& pi1y = *les.sequence.terms[5].group;
    bool ok = true;
    rep.checks.push_back(match_note("pi_1(ker alpha) vs N/[NV*G]", pi1k,
                                    *t1.ab_group, &ok));
    rep.checks.push_back(match_note("pi_1(bar G) vs G/V(G)", pi1x, *t2.ab_group, &ok));
    rep.checks.push_back(
        match_note("pi_1(bar G/N) vs (G/N)/V(G/N)", pi1y, *t3.ab_group, &ok));
    rep.checks.push_back(match_note("pi_1(bar G) vs abelianization", pi1x,
                                    abelianization_fg(g), &ok));
    if (!ok) rep.exact_ok = false;
  } else {
    terms.push_back(seq::Term::unknown("VM(G,N)"));
    maps.push_back(seq::MapSlot::symbolic());
    terms.push_back(seq::Term::unknown("VM(G)"));
    maps.push_back(seq::MapSlot::symbolic());
    terms.push_back(seq::Term::unknown("VM(G/N)"));
    maps.push_back(seq::MapSlot::symbolic());
  }
  append_tail(tail, terms, maps, {"N/[NV*G]", "G/V(G)", "(G/N)/V(G/N)"});
  rep.paper_sequence = seq::ExactSeqInstance(std::move(terms), std::move(maps));
  finish_report(rep);
  return rep;
}

namespace {

struct TripleTailData {
  Subgroup mn, meet;
  Subgroup lue_n, lue_m;
  SubQuotient ta1, ta2;  // N/[NV*G], MN/M[NV*G]
  SubQuotient tb1, tb2;  // M/[MV*G], MN/N[MV*G]
};

TripleTailData triple_tails(const TripleInstance& t, const VarietySpec& v) {
  TripleTailData d{grp::subgroup_product(t.m, t.n),
                   grp::subgroup_intersection(t.m, t.n),
                   grp::lue_product(t.g, t.n, v),
                   grp::lue_product(t.g, t.m, v),
                   {}, {}, {}, {}};
  d.ta1 = sub_quotient(t.g, t.n, d.lue_n);
  d.ta2 = sub_quotient(t.g, d.mn, grp::subgroup_product(t.m, d.lue_n));
  d.tb1 = sub_quotient(t.g, t.m, d.lue_m);
  d.tb2 = sub_quotient(t.g, d.mn, grp::subgroup_product(t.n, d.lue_m));
  return d;
}

LesReport one_triple_sequence(const TripleInstance& t, const VarietySpec& v,
                              const BarCaps& caps, const TripleTailData& tails,
                              bool sequence_a, LesDepth depth) {
  LesReport rep;
  const SubQuotient& u1 = sequence_a ? tails.ta1 : tails.tb1;
  const SubQuotient& u2 = sequence_a ? tails.ta2 : tails.tb2;
  GroupTail tail = make_tail({u1, u2});
  if (!tail.exact_interior || !tail.final_surjective) rep.exact_ok = false;
  rep.checks.push_back(std::string("group-level tail surjectivity: ") +
                       (tail.final_surjective ? "pass" : "FAIL"));

  std::vector<seq::Term> terms;
  std::vector<seq::MapSlot> maps;
  const char* vm_pair = sequence_a ? "VM(G,N)" : "VM(G,M)";
  const char* vm_quot = sequence_a ? "VM(G/M,MN/M)" : "VM(G/N,MN/N)";

  // the pi0 slot: Theorem-style identification when available
  std::optional<SubQuotient> pi0_group;   // exponent-q case, with real map
  std::optional<FgAbGroup> pi0_bar;       // abelian case, symbolic maps
  bool g_is_mn = tails.mn.size() == t.g->order();
  if (v.kind == VarietySpec::Kind::AbelianExpQ && g_is_mn) {
    Subgroup sharp = grp::sharp_q(t.g, t.m, t.n, v.param);
    const Subgroup& lue = sequence_a ? tails.lue_n : tails.lue_m;
    if (!sharp.subset_of(lue))
      throw BaerError(Errc::Inconsistent,
                      "M#_qN is not contained in the Lue product");
    pi0_group = sub_quotient(t.g, tails.meet, sharp);
  }

  if (bar_applicable(v) && depth == LesDepth::Full) {
    QuotientSquare sq = quotient_square(t, 3, caps);
    DoubleKernel dk = double_kernel(sq);
    simp::LesOutcome les = [&] {
      if (!sequence_a) return simp::les_of_surjection(dk.alpha_restricted);
      // left column: ker(alpha) ->> ker(gamma), restricted beta
      simp::LevelwiseSurjection alpha_s =
          simp::make_levelwise_surjection(sq.bar_g.object, sq.bar_gn.object, sq.alpha);
      simp::LevelwiseSurjection gamma_s = simp::make_levelwise_surjection(
          sq.bar_gm.object, sq.bar_gmn.object, sq.gamma);
      simp::KernelObject ka = simp::simplicial_kernel(alpha_s);
      simp::KernelObject kg = simp::simplicial_kernel(gamma_s);
      std::vector<ab::AbHom> restricted;
      for (int n = 0; n <= 3; ++n)
        restricted.push_back(
            ab::factor_through(kg.include[n], sq.beta[n].after(ka.include[n])));
      return simp::les_of_surjection(
          simp::make_levelwise_surjection(ka.object, kg.object, std::move(restricted)));
    }();
    rep.bar_sequence = les.sequence;
    rep.notes = les.notes;
    pi0_bar = *les.sequence.terms[3].group;  // pi_1 of the double kernel
    for (int i = 0; i < 3; ++i) {
      const char* labels[3] = {"VM(G,M,N)", vm_pair, vm_quot};
      terms.push_back(seq::Term::of(*les.sequence.terms[i].group, labels[i]));
      maps.push_back(les.sequence.maps[i]);
    }
    terms.push_back(seq::Term::of(*pi0_bar, "pi0(ker(alpha_V,gamma_V))"));
    maps.push_back(seq::MapSlot::symbolic("pi0 identification"));
    // cross-identifications
    bool ok = true;
    rep.checks.push_back(match_note(
        std::string("pi_1(ker ") + (sequence_a ? "alpha" : "beta") + ") vs tail 1",
        *les.sequence.terms[4].group, *u1.ab_group, &ok));
    rep.checks.push_back(match_note(
        std::string("pi_1(ker ") + (sequence_a ? "gamma" : "delta") + ") vs tail 2",
        *les.sequence.terms[5].group, *u2.ab_group, &ok));
    if (!ok) rep.exact_ok = false;
  } else {
    terms.push_back(seq::Term::unknown("VM(G,M,N)"));
    maps.push_back(seq::MapSlot::symbolic());
    terms.push_back(seq::Term::unknown(vm_pair));
    maps.push_back(seq::MapSlot::symbolic());
    terms.push_back(seq::Term::unknown(vm_quot));
    maps.push_back(seq::MapSlot::symbolic());
    if (pi0_group) {
      terms.push_back(tail_term(*pi0_group, "(M cap N)/(M #_q N)"));
      if (pi0_group->abelian && u1.abelian) {
        maps.push_back(
            seq::MapSlot::of(grp::abelian_hom_to_ab(quotient_map(*pi0_group, u1))));
      } else {
        maps.push_back(seq::MapSlot::symbolic("group-level map"));
      }
    } else {
      terms.push_back(seq::Term::unknown("pi0(ker(alpha_V,gamma_V))"));
      maps.push_back(seq::MapSlot::symbolic());
    }
  }
  append_tail(tail, terms, maps,
              sequence_a
                  ? std::vector<std::string>{"N/[NV*G]", "MN/M[NV*G]"}
                  : std::vector<std::string>{"M/[MV*G]", "MN/N[MV*G]"});
  rep.paper_sequence = seq::ExactSeqInstance(std::move(terms), std::move(maps));
  finish_report(rep);
  return rep;
}

}  // namespace

TripleLes les_triple(const TripleInstance& t, const VarietySpec& v,
                     const BarCaps& caps, LesDepth depth) {
  TripleTailData tails = triple_tails(t, v);
  TripleLes out{one_triple_sequence(t, v, caps, tails, true, depth),
                one_triple_sequence(t, v, caps, tails, false, depth)};
  return out;
}

LesReport ellis_triple_tail(const TripleInstance& t) {
  LesReport rep;
  Subgroup full = Subgroup::full(t.g);
  Subgroup mn = grp::subgroup_product(t.m, t.n);
  Subgroup meet = grp::subgroup_intersection(t.m, t.n);
  Subgroup comm_meet_g = grp::commutator_subgroup(meet, full);
  Subgroup comm_mn = grp::commutator_subgroup(t.m, t.n);
  Subgroup comm_ng = grp::commutator_subgroup(t.n, full);

  SubQuotient e1 =
      sub_quotient(t.g, meet, grp::subgroup_product(comm_meet_g, comm_mn));
  SubQuotient e2 = sub_quotient(t.g, t.n, comm_ng);
  SubQuotient e3 = sub_quotient(t.g, mn, grp::subgroup_product(t.m, comm_ng));

  GroupTail tail = make_tail({e1, e2, e3});
  if (!tail.exact_interior || !tail.final_surjective) rep.exact_ok = false;
  rep.checks.push_back(std::string("group-level Ellis tail exactness: ") +
                       (tail.exact_interior && tail.final_surjective ? "pass" : "FAIL"));

  std::vector<seq::Term> terms;
  std::vector<seq::MapSlot> maps;
  append_tail(tail, terms, maps,
              {"McapN/[McapN,G][M,N]", "N/[N,G]", "MN/M[N,G]"});
  rep.paper_sequence = seq::ExactSeqInstance(std::move(terms), std::move(maps));
  finish_report(rep);
  return rep;
}

namespace {

std::optional<FgAbGroup> nilpotent_value_if_known(const TripleInstance& t,
                                                  const BarCaps& caps, long long c) {
  // the double kernel collapses when either subgroup is trivial
  if (t.g->order() == 1 || t.m.size() == 1 || t.n.size() == 1)
    return FgAbGroup::trivial();
  if (c == 1) return triple_multiplier_bar(t, caps).value;
  return std::nullopt;
}

}  // namespace

MultiplierResult freeprod_multiplier(const TripleInstance& t1, const TripleInstance& t2,
                                     const VarietySpec& v, const BarCaps& caps) {
  MultiplierResult out;
  out.label = "VM(G1*G2, <M1*M2>, <N1*N2>)";
  if (bar_applicable(v)) {
    MultiplierResult r1 = triple_multiplier_bar(t1, caps);
    MultiplierResult r2 = triple_multiplier_bar(t2, caps);
    out.value = ab::direct_sum(*r1.value, *r2.value);
    out.method = Method::FreeProduct;
    out.degree_shift = true;
    out.notes.push_back("factor 1: " + r1.value->canonical_str());
    out.notes.push_back("factor 2: " + r2.value->canonical_str());
    return out;
  }
  if (v.kind != VarietySpec::Kind::NilpotentC)
    throw BaerError(Errc::MethodMismatch,
                    "free-product decomposition needs the abelian or nilpotent variety");
  Int a1 = abelianization_fg(t1.g).order();
  Int a2 = abelianization_fg(t2.g).order();
  if (gcd_int(a1, a2) != 1) {
    std::ostringstream os;
    os << "abelianization orders " << a1 << " and " << a2
       << " are not coprime; the nilpotent free-product decomposition does not apply";
    throw BaerError(Errc::CoprimalityViolated, os.str());
  }
  out.method = Method::FreeProductCoprime;
  out.degree_shift = true;
  std::optional<FgAbGroup> v1 = nilpotent_value_if_known(t1, caps, v.param);
  std::optional<FgAbGroup> v2 = nilpotent_value_if_known(t2, caps, v.param);
  out.notes.push_back("factor 1: " + (v1 ? v1->canonical_str() : std::string("unknown")));
  out.notes.push_back("factor 2: " + (v2 ? v2->canonical_str() : std::string("unknown")));
  if (v1 && v2) {
    out.value = ab::direct_sum(*v1, *v2);
  } else if (v1 || v2) {
    out.lower_bound = v1 ? *v1 : *v2;
    out.notes.push_back("value open: one factor multiplier is not determined");
  } else {
    out.notes.push_back("value open: both factor multipliers are not determined");
  }
  return out;
}

const grp::TripleMorphism& TripleSystem::transition(int i, int j) const {
  auto it = transitions.find({i, j});
  if (it == transitions.end())
    throw BaerError(Errc::InvalidArgument, "transition for incomparable pair");
  return it->second;
}

TripleSystem make_triple_system(std::vector<TripleInstance> objects,
                                std::map<std::pair<int, int>, grp::TripleMorphism> edges) {
  int n = static_cast<int>(objects.size());
  for (const auto& [key, mor] : edges) {
    auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      throw BaerError(Errc::InvalidArgument, "bad edge index in triple system");
    if (mor.src.g != objects[i].g || mor.dst.g != objects[j].g)
      throw BaerError(Errc::InvalidArgument, "edge morphism does not match objects");
  }
  // transitive closure with functoriality checks
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::pair<int, int>, grp::TripleMorphism>> add;
    for (const auto& [ij, f] : edges)
      for (const auto& [jk, g] : edges) {
        if (ij.second != jk.first) continue;
        std::pair<int, int> ik{ij.first, jk.second};
        grp::TripleMorphism comp = grp::triple_morphism_compose(g, f);
        if (ik.first == ik.second) {
          for (int x = 0; x < objects[ik.first].g->order(); ++x)
            if (comp.f.map[x] != x)
              throw BaerError(Errc::InvalidArgument,
                              "triple system has a non-identity cycle");
          continue;
        }
        auto it = edges.find(ik);
        if (it == edges.end()) {
          add.emplace_back(ik, comp);
        } else if (it->second.f.map != comp.f.map) {
          throw BaerError(Errc::InvalidArgument,
                          "triple system transitions are not functorial");
        }
      }
    for (auto& [k, h] : add)
      if (edges.emplace(k, h).second) changed = true;
  }
  auto leq = [&](int i, int j) { return i == j || edges.count({i, j}) > 0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool ok = false;
      for (int k = 0; k < n && !ok; ++k) ok = leq(i, k) && leq(j, k);
      if (!ok)
        throw BaerError(Errc::ColimitNotFinite,
                        "triple system index poset is not directed; no finite colimit");
    }
  int top = 0;
  for (int k = 0; k < n; ++k) {
    bool dom = true;
    for (int i = 0; i < n; ++i)
      if (!leq(i, k)) dom = false;
    if (dom) {
      top = k;
      break;
    }
  }
  TripleSystem out;
  out.objects = std::move(objects);
  out.transitions = std::move(edges);
  out.top = top;
  return out;
}

ColimitVerdict colimit_multiplier(const TripleSystem& sys, const VarietySpec& v,
                                  const BarCaps& caps) {
  if (!bar_applicable(v))
    throw BaerError(Errc::MethodMismatch,
                    "stage multipliers are bar-computable only for the abelian variety");
  int n = static_cast<int>(sys.objects.size());
  std::vector<TripleBarData> data;
  data.reserve(n);
  for (int i = 0; i < n; ++i) data.push_back(triple_bar_data(sys.objects[i], caps));

  std::vector<FgAbGroup> stage_values;
  for (int i = 0; i < n; ++i) stage_values.push_back(data[i].h2.homology);
  std::map<std::pair<int, int>, ab::AbHom> edges;
  for (const auto& [key, mor] : sys.transitions)
    edges.emplace(key, induced_h2(data[key.first], data[key.second], mor.f));
  ab::DirectedSystemAb absys(stage_values, std::move(edges));

  ColimitVerdict out{data[sys.top].h2.homology, ab::colimit(absys), false};
  out.isomorphic = ab::is_isomorphic(out.lhs, out.rhs);
  return out;
}

FgAbGroup witt_multiplier_free_abelian(long long n, long long c) {
  if (n < 0 || c < 1)
    throw BaerError(Errc::InvalidArgument, "witt multiplier needs n >= 0, c >= 1");
  long long rank = grp::witt_number(n, c + 1);
  return FgAbGroup::free_group(static_cast<int>(rank));
}

MultiplierResult witt_multiplier_result(long long n, long long c) {
  MultiplierResult r;
  r.value = witt_multiplier_free_abelian(n, c);
  r.method = Method::WittFormula;
  r.degree_shift = false;
  std::ostringstream os;
  os << "M^(" << c << ") of free abelian of rank " << n;
  r.label = os.str();
  return r;
}

TorsionOutcome certify_torsion(const TorsionRequest& req, bool strict) {
  std::vector<std::string> expected;
  long long c_from = 2;
  std::string rule_name;
  if (req.rule == TorsionRule::Pair) {
    expected = {"M1(G,N)", "M1(G/N)", "H3(G/N)"};
    c_from = 2;
    rule_name = "pair-torsion-rule";
  } else {
    expected = {"M1(G,M,N)", "M1(G)", "H3(G/N)", "H3(G/M)", "H4(G/MN)"};
    c_from = 1;
    rule_name = "triple-torsion-rule";
  }
  std::vector<std::string> have;
  for (const auto& h : req.hypotheses) have.push_back(h.name);
  std::sort(have.begin(), have.end());
  std::vector<std::string> want = expected;
  std::sort(want.begin(), want.end());
  if (have != want) {
    TorsionOutcome out;
    out.reason = "hypothesis set does not match the rule";
    return out;
  }
  for (const auto& h : req.hypotheses) {
    if (h.provenance != "computed" && h.provenance != "asserted")
      throw BaerError(Errc::InvalidArgument, "unknown provenance: " + h.provenance);
    if (strict && h.provenance == "asserted")
      throw BaerError(Errc::HypothesisUnverified,
                      "hypothesis '" + h.name + "' is asserted, strict mode refuses it");
  }
  for (const auto& h : req.hypotheses)
    if (!h.torsion) {
      TorsionOutcome out;
      out.reason = "hypothesis '" + h.name + "' is not a torsion group";
      return out;
    }
  if (req.c_target < c_from) {
    TorsionOutcome out;
    std::ostringstream os;
    os << "the rule only covers c >= " << c_from << ", requested c = " << req.c_target;
    out.reason = os.str();
    return out;
  }
  TorsionCertificate cert;
  cert.hypotheses = req.hypotheses;
  cert.rule = rule_name;
  cert.c_from = c_from;
  std::ostringstream os;
  os << (req.rule == TorsionRule::Pair ? "M^(c)(G,N)" : "M^(c)(G,M,N)")
     << " is a torsion group for all c >= " << c_from;
  cert.conclusion = os.str();
  TorsionOutcome out;
  out.emitted = true;
  out.certificate = std::move(cert);
  return out;
}

InducedMultiplierMap induced_map(const grp::TripleMorphism& f, const VarietySpec& v,
                                 const BarCaps& caps) {
  if (!bar_applicable(v))
    throw BaerError(Errc::MethodMismatch,
                    "induced maps need bar-model values on both sides");
  TripleBarData a = triple_bar_data(f.src, caps);
  TripleBarData b = triple_bar_data(f.dst, caps);
  InducedMultiplierMap out{MultiplierResult{}, MultiplierResult{}, induced_h2(a, b, f.f)};
  out.src_result.value = a.h2.homology;
  out.src_result.method = Method::BarModel;
  out.src_result.degree_shift = true;
  out.dst_result.value = b.h2.homology;
  out.dst_result.method = Method::BarModel;
  out.dst_result.degree_shift = true;
  return out;
}

}  // namespace baerlab::mult
