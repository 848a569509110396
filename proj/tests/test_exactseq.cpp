#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "baerlab/exact_seq.hpp"
#include "oracles.hpp"

using namespace baerlab;
using namespace baerlab::seq;
using ab::AbHom;
using ab::FgAbGroup;
using ab::IntMatrix;

namespace {

FgAbGroup zn(long long n) { return FgAbGroup(IntMatrix::from_rows({{n}})); }
FgAbGroup z0() { return FgAbGroup::trivial(); }

Term T0() { return Term::of(z0(), "0"); }

// dual of a hom between finite groups in invariant-factor presentation:
// matrix entries D[i][j] = M[j][i] * a_i / b_j on the same generators
AbHom dual_hom(const AbHom& f) {
  const FgAbGroup& a = f.src();
  const FgAbGroup& b = f.dst();
  IntMatrix d = IntMatrix::zeros(a.gens(), b.gens());
  for (int i = 0; i < a.gens(); ++i)
    for (int j = 0; j < b.gens(); ++j) {
      Int num = f.matrix().at(j, i) * a.factors()[i];
      d.set(i, j, num / b.factors()[j]);
    }
  return AbHom(b, a, d);
}

}  // namespace

TEST_CASE("verify_exactness on 0 -> A -> A -> 0") {
  FgAbGroup a = zn(6);
  ExactSeqInstance s({T0(), Term::of(a), Term::of(a), T0()},
                     {MapSlot::of(AbHom::zero(z0(), a)),
                      MapSlot::of(AbHom::identity(a)),
                      MapSlot::of(AbHom::zero(a, z0()))});
  auto v = verify_exactness(s);
  REQUIRE(v.size() == 2);
  CHECK(v[0].status == SlotStatus::Exact);
  CHECK(v[1].status == SlotStatus::Exact);
}

TEST_CASE("verify_exactness finds a witness for the zero map") {
  FgAbGroup a = zn(2);
  ExactSeqInstance s({T0(), Term::of(a), Term::of(a), T0()},
                     {MapSlot::of(AbHom::zero(z0(), a)),
                      MapSlot::of(AbHom::zero(a, a)),
                      MapSlot::of(AbHom::zero(a, z0()))});
  auto v = verify_exactness(s);
  CHECK(v[0].status == SlotStatus::Inexact);
  CHECK(!v[0].witness.empty());
  CHECK(v[1].status == SlotStatus::Inexact);
}

TEST_CASE("unknown slots are undetermined, not failures") {
  FgAbGroup a = zn(4);
  ExactSeqInstance s({Term::unknown("X"), Term::of(a), Term::of(a), T0()},
                     {MapSlot::symbolic(), MapSlot::of(AbHom::identity(a)),
                      MapSlot::of(AbHom::zero(a, z0()))});
  auto v = verify_exactness(s);
  CHECK(v[0].status == SlotStatus::Undetermined);
  CHECK(v[1].status == SlotStatus::Exact);
  CHECK(all_determined_exact(v));
}

TEST_CASE("solve_unknowns: coprime short exact sequence forces Z6") {
  ExactSeqInstance s({T0(), Term::of(zn(2)), Term::unknown("X"), Term::of(zn(3)), T0()},
                     {MapSlot::of(AbHom::zero(z0(), zn(2))), MapSlot::symbolic(),
                      MapSlot::symbolic(), MapSlot::of(AbHom::zero(zn(3), z0()))});
  auto cons = solve_unknowns(s);
  REQUIRE(cons.size() == 1);
  REQUIRE(cons[0].forced.has_value());
  CHECK(cons[0].forced->factors() == std::vector<Int>{6});
  // oracle: the only abelian group of order 6 with a Z2 subgroup and Z3 quotient
  auto ext = enumerate_extensions(zn(2), zn(3));
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].factors() == std::vector<Int>{6});
}

TEST_CASE("solve_unknowns: 0 -> X -> A -> B with a known map forces the kernel") {
  FgAbGroup z4 = zn(4), z2 = zn(2);
  AbHom proj(z4, z2, IntMatrix::identity(1));
  ExactSeqInstance s({T0(), Term::unknown("X"), Term::of(z4), Term::of(z2)},
                     {MapSlot::symbolic(), MapSlot::symbolic(), MapSlot::of(proj)});
  auto cons = solve_unknowns(s);
  REQUIRE(cons.size() == 1);
  REQUIRE(cons[0].forced.has_value());
  CHECK(cons[0].forced->factors() == std::vector<Int>{2});
}

TEST_CASE("solve_unknowns: cokernel forcing at the right end") {
  FgAbGroup z = FgAbGroup::free_group(1);
  AbHom two(z, z, IntMatrix::from_rows({{2}}));
  ExactSeqInstance s({Term::of(z), Term::of(z), Term::unknown("X"), T0()},
                     {MapSlot::of(two), MapSlot::symbolic(), MapSlot::symbolic()});
  auto cons = solve_unknowns(s);
  REQUIRE(cons[0].forced.has_value());
  CHECK(cons[0].forced->factors() == std::vector<Int>{2});
}

TEST_CASE("solve_unknowns: alternating rank sum forces the free rank") {
  // 0 -> Z^2 -> X -> Z^3 -> Z -> 0 exact: rank X = 2 + 3 - 1 = 4
  ExactSeqInstance s({T0(), Term::of(FgAbGroup::free_group(2)), Term::unknown("X"),
                      Term::of(FgAbGroup::free_group(3)),
                      Term::of(FgAbGroup::free_group(1)), T0()},
                     {MapSlot::symbolic(), MapSlot::symbolic(), MapSlot::symbolic(),
                      MapSlot::symbolic(), MapSlot::symbolic()});
  auto cons = solve_unknowns(s);
  REQUIRE(cons.size() == 1);
  REQUIRE(cons[0].rank.has_value());
  CHECK(*cons[0].rank == 4);
}

TEST_CASE("solve_unknowns: non-coprime SES enumerates extensions") {
  ExactSeqInstance s({T0(), Term::of(zn(2)), Term::unknown("X"), Term::of(zn(2)), T0()},
                     {MapSlot::of(AbHom::zero(z0(), zn(2))), MapSlot::symbolic(),
                      MapSlot::symbolic(), MapSlot::of(AbHom::zero(zn(2), z0()))});
  auto cons = solve_unknowns(s);
  REQUIRE(cons.size() == 1);
  CHECK(!cons[0].forced.has_value());
  REQUIRE(cons[0].candidates.size() == 2);  // Z2+Z2 and Z4, factor-lex order
  CHECK(cons[0].candidates[0].factors() == std::vector<Int>{2, 2});
  CHECK(cons[0].candidates[1].factors() == std::vector<Int>{4});
  CHECK(constraint_admits(cons[0], zn(4)));
  CHECK(constraint_admits(cons[0], FgAbGroup::from_invariants(0, {2, 2})));
  CHECK(!constraint_admits(cons[0], zn(6)));
}

TEST_CASE("solve_unknowns: |X| = |A||B| bound in a SES") {
  ExactSeqInstance s({T0(), Term::of(zn(4)), Term::unknown("X"), Term::of(zn(2)), T0()},
                     {MapSlot::of(AbHom::zero(z0(), zn(4))), MapSlot::symbolic(),
                      MapSlot::symbolic(), MapSlot::of(AbHom::zero(zn(2), z0()))});
  auto cons = solve_unknowns(s);
  REQUIRE(cons[0].order_divides.has_value());
  CHECK(*cons[0].order_divides == 8);
  CHECK(cons[0].order_multiple_of == 8);
}

TEST_CASE("verify_exactness is stable under dualization") {
  // exact: 0 -> Z2 --x2--> Z4 --proj--> Z2 -> 0, plus an inexact variant
  FgAbGroup z2 = zn(2), z4 = zn(4);
  AbHom inc(z2, z4, IntMatrix::from_rows({{2}}));
  AbHom proj(z4, z2, IntMatrix::identity(1));
  ExactSeqInstance s({T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()},
                     {MapSlot::of(AbHom::zero(z0(), z2)), MapSlot::of(inc),
                      MapSlot::of(proj), MapSlot::of(AbHom::zero(z2, z0()))});
  auto v = verify_exactness(s);
  CHECK(all_determined_exact(v));
  for (const auto& sv : v) CHECK(sv.status == SlotStatus::Exact);

  // dual sequence: reverse arrows, dualize maps
  ExactSeqInstance dual({T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()},
                        {MapSlot::of(AbHom::zero(z0(), z2)), MapSlot::of(dual_hom(proj)),
                         MapSlot::of(dual_hom(inc)), MapSlot::of(AbHom::zero(z2, z0()))});
  auto dv = verify_exactness(dual);
  for (const auto& sv : dv) CHECK(sv.status == SlotStatus::Exact);

  // inexact stays inexact under dualization
  ExactSeqInstance bad({T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()},
                       {MapSlot::of(AbHom::zero(z0(), z2)),
                        MapSlot::of(AbHom::zero(z2, z4)), MapSlot::of(proj),
                        MapSlot::of(AbHom::zero(z2, z0()))});
  ExactSeqInstance bad_dual({T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()},
                            {MapSlot::of(AbHom::zero(z0(), z2)),
                             MapSlot::of(dual_hom(proj)),
                             MapSlot::of(AbHom::zero(z4, z2)),
                             MapSlot::of(AbHom::zero(z2, z0()))});
  CHECK(!all_determined_exact(verify_exactness(bad)));
  CHECK(!all_determined_exact(verify_exactness(bad_dual)));
}

TEST_CASE("five lemma: identity verticals certified") {
  FgAbGroup z2 = zn(2), z4 = zn(4);
  AbHom inc(z2, z4, IntMatrix::from_rows({{2}}));
  AbHom proj(z4, z2, IntMatrix::identity(1));
  std::vector<Term> terms{T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()};
  std::vector<MapSlot> maps{MapSlot::of(AbHom::zero(z0(), z2)), MapSlot::of(inc),
                            MapSlot::of(proj), MapSlot::of(AbHom::zero(z2, z0()))};
  ExactSeqInstance row(terms, maps);
  FiveLemmaInput in{row, row,
                    {AbHom::identity(z0()), AbHom::identity(z2), AbHom::identity(z4),
                     AbHom::identity(z2), AbHom::identity(z0())}};
  FiveLemmaVerdict v = five_lemma(in);
  CHECK(v.middle_is_iso);
}

TEST_CASE("five lemma: refuses when an outer vertical is not iso") {
  FgAbGroup z2 = zn(2), z4 = zn(4);
  AbHom inc(z2, z4, IntMatrix::from_rows({{2}}));
  AbHom proj(z4, z2, IntMatrix::identity(1));
  ExactSeqInstance row({T0(), Term::of(z2), Term::of(z4), Term::of(z2), T0()},
                       {MapSlot::of(AbHom::zero(z0(), z2)), MapSlot::of(inc),
                        MapSlot::of(proj), MapSlot::of(AbHom::zero(z2, z0()))});
  FiveLemmaInput in{row, row,
                    {AbHom::identity(z0()), AbHom::zero(z2, z2), AbHom::identity(z4),
                     AbHom::identity(z2), AbHom::identity(z0())}};
  FiveLemmaVerdict v = five_lemma(in);
  CHECK(!v.middle_is_iso);
  CHECK(v.detail.find("refusing") != std::string::npos);
}

TEST_CASE("five lemma: rejects inexact rows") {
  FgAbGroup z2 = zn(2);
  ExactSeqInstance bad({T0(), Term::of(z2), Term::of(z2), Term::of(z2), T0()},
                       {MapSlot::of(AbHom::zero(z0(), z2)),
                        MapSlot::of(AbHom::zero(z2, z2)),
                        MapSlot::of(AbHom::zero(z2, z2)),
                        MapSlot::of(AbHom::zero(z2, z0()))});
  FiveLemmaInput in{bad, bad,
                    {AbHom::identity(z0()), AbHom::identity(z2), AbHom::identity(z2),
                     AbHom::identity(z2), AbHom::identity(z0())}};
  CHECK_THROWS_AS(five_lemma(in), BaerError);
}

TEST_CASE("inconsistent constraints raise") {
  // 0 -> Z -> X -> Z -> 0 with X forced rank 2, but we also force an order
  // via a contradictory window: build directly through a negative rank sum
  ExactSeqInstance s({T0(), Term::of(FgAbGroup::free_group(2)), Term::unknown("X"),
                      T0()},
                     {MapSlot::symbolic(), MapSlot::symbolic(), MapSlot::symbolic()});
  // exactness 0 -> Z^2 -> X -> 0 forces X = Z^2; rank = 2, never negative
  auto ok = solve_unknowns(s);
  CHECK(ok[0].rank.has_value());
  CHECK(*ok[0].rank == 2);

  ExactSeqInstance neg({T0(), Term::unknown("X"), Term::of(FgAbGroup::free_group(1)),
                        Term::of(FgAbGroup::free_group(2)), T0()},
                       {MapSlot::symbolic(), MapSlot::symbolic(), MapSlot::symbolic(),
                        MapSlot::symbolic()});
  // 0 -> X -> Z -> Z^2 -> 0 would need rank X = -1
  CHECK_THROWS_AS(solve_unknowns(neg), BaerError);
}
