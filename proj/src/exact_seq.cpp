#include "baerlab/exact_seq.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "baerlab/catalog.hpp"
#include "baerlab/finite_group.hpp"

namespace baerlab::seq {

Term Term::of(FgAbGroup g, std::string label) {
  Term t;
  if (label.empty()) label = g.canonical_str();
  t.group = std::move(g);
  t.label = std::move(label);
  return t;
}

Term Term::unknown(std::string label) {
  Term t;
  t.label = std::move(label);
  return t;
}

MapSlot MapSlot::of(AbHom h, std::string label) {
  MapSlot m;
  m.hom = std::move(h);
  m.label = std::move(label);
  return m;
}

MapSlot MapSlot::symbolic(std::string label) {
  MapSlot m;
  m.label = std::move(label);
  return m;
}

ExactSeqInstance::ExactSeqInstance(std::vector<Term> ts, std::vector<MapSlot> ms)
    : terms(std::move(ts)), maps(std::move(ms)) {
  if (terms.size() < 2 || maps.size() + 1 != terms.size())
    throw BaerError(Errc::InvalidArgument, "sequence shape mismatch");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i].known()) continue;
    if (!terms[i].known() || !terms[i + 1].known())
      throw BaerError(Errc::InvalidArgument, "known map next to unknown term");
    if (maps[i].hom->src().gens() != terms[i].group->gens() ||
        maps[i].hom->dst().gens() != terms[i + 1].group->gens())
      throw BaerError(Errc::InvalidArgument, "map endpoints do not match terms");
  }
}

std::vector<SlotVerdict> verify_exactness(const ExactSeqInstance& s) {
  std::vector<SlotVerdict> out;
  for (int i = 1; i + 1 < s.size(); ++i) {
    SlotVerdict v;
    v.index = i;
    const MapSlot& in = s.maps[i - 1];
    const MapSlot& outm = s.maps[i];
    if (!in.known() || !outm.known() || !s.terms[i].known()) {
      v.status = SlotStatus::Undetermined;
      out.push_back(v);
      continue;
    }
    ab::HomParts pin = ab::hom_parts(*in.hom);
    ab::HomParts pout = ab::hom_parts(*outm.hom);
    // image(in) vs kernel(out) as subgroups of term i
    const ab::IntMatrix& rel = s.terms[i].group->relations();
    auto img_in_ker = ab::solve_columns_mod(pout.kernel_incl.matrix(), rel,
                                            pin.image_incl.matrix());
    auto ker_in_img = ab::solve_columns_mod(pin.image_incl.matrix(), rel,
                                            pout.kernel_incl.matrix());
    if (img_in_ker && ker_in_img) {
      v.status = SlotStatus::Exact;
    } else {
      v.status = SlotStatus::Inexact;
      std::ostringstream os;
      if (!img_in_ker) {
        os << "composite nonzero: an image generator of the incoming map "
              "escapes the kernel of the outgoing map";
      } else {
        // find the first kernel generator not in the image
        const ab::IntMatrix& kin = pout.kernel_incl.matrix();
        for (int j = 0; j < kin.cols(); ++j) {
          auto one = ab::solve_columns_mod(pin.image_incl.matrix(), rel, kin.columns({j}));
          if (!one) {
            os << "witness: kernel generator (";
            for (int r = 0; r < kin.rows(); ++r) os << (r ? "," : "") << kin.at(r, j);
            os << ") of term " << i << " is not hit by the incoming map";
            break;
          }
        }
      }
      v.witness = os.str();
    }
    out.push_back(v);
  }
  return out;
}

bool all_determined_exact(const std::vector<SlotVerdict>& vs) {
  for (const auto& v : vs)
    if (v.status == SlotStatus::Inexact) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// all abelian groups of order n (invariant factor form), deterministic order
std::vector<FgAbGroup> abelian_groups_of_order(const Int& n) {
  if (n > 64)
    throw BaerError(Errc::InvalidArgument, "extension enumeration capped at order 64");
  long long nn = n.convert_to<long long>();
  // factorize
  std::vector<std::pair<long long, int>> fac;
  long long m = nn;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  if (m > 1) fac.emplace_back(m, 1);
  // per-prime partitions, then assemble invariant factors
  std::vector<std::vector<std::vector<int>>> parts;
  for (auto& [p, e] : fac) parts.push_back(partitions_of(e));
  std::vector<FgAbGroup> out;
  std::vector<std::size_t> pick(fac.size(), 0);
  for (;;) {
    // combine: d_k = prod over primes of p^(partition part aligned from largest)
    std::size_t maxlen = 0;
    for (std::size_t i = 0; i < fac.size(); ++i)
      maxlen = std::max(maxlen, parts[i][pick[i]].size());
    std::vector<Int> factors(maxlen, Int(1));
    for (std::size_t i = 0; i < fac.size(); ++i) {
      const auto& part = parts[i][pick[i]];
      for (std::size_t k = 0; k < part.size(); ++k) {
        Int pw = 1;
        for (int t = 0; t < part[k]; ++t) pw *= fac[i].first;
        factors[k] *= pw;  // both sorted descending -> divisibility holds
      }
    }
    std::reverse(factors.begin(), factors.end());  // ascending
    std::vector<Int> keep;
    for (auto& f : factors)
      if (f >= 2) keep.push_back(f);
    out.push_back(FgAbGroup::from_invariants(0, keep));
    // advance
    std::size_t i = 0;
    for (; i < fac.size(); ++i) {
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
    }
    if (i == fac.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const FgAbGroup& a, const FgAbGroup& b) {
    return a.factors() < b.factors();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FgAbGroup& a, const FgAbGroup& b) {
                          return a.same_canonical(b);
                        }),
            out.end());
  return out;
}

grp::GroupPtr finite_table_of(const FgAbGroup& g);

}  // namespace

std::vector<FgAbGroup> enumerate_extensions(const FgAbGroup& a, const FgAbGroup& b) {
  if (!a.is_finite() || !b.is_finite())
    throw BaerError(Errc::InvalidArgument, "extension enumeration needs finite ends");
  Int n = a.order() * b.order();
  std::vector<FgAbGroup> out;
  if (n == 1) {
    out.push_back(FgAbGroup::trivial());
    return out;
  }
  if (n > 64)
    throw BaerError(Errc::InvalidArgument, "extension enumeration capped at order 64");
  for (const auto& x : abelian_groups_of_order(n)) {
    // X admits 0 -> A -> X -> B -> 0 iff some subgroup ≅ A has quotient ≅ B
    grp::GroupPtr xt = finite_table_of(x);
    bool fits = false;
    for (const auto& sub : grp::all_subgroups(xt)) {
      if (static_cast<Int>(sub.size()) != a.order()) continue;
      grp::GroupPtr sg = grp::subgroup_as_group(sub);
      if (!grp::abelian_to_fg(*sg).same_canonical(a)) continue;
      grp::Quotient q = grp::quotient_group(xt, sub);
      if (grp::abelian_to_fg(*q.group).same_canonical(b)) {
        fits = true;
        break;
      }
    }
    if (fits) out.push_back(x);
  }
  return out;
}

namespace {

grp::GroupPtr finite_table_of(const FgAbGroup& g) {
  // elements = canonical coordinate tuples
  std::vector<Int> orders = g.factors();
  long long n = 1;
  for (auto& d : orders) n *= d.convert_to<long long>();
  std::vector<std::vector<long long>> elems;
  std::vector<long long> cur(orders.size(), 0);
  for (long long i = 0; i < n; ++i) {
    elems.push_back(cur);
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (++cur[k] < orders[k].convert_to<long long>()) break;
      cur[k] = 0;
    }
  }
  auto index_of = [&](const std::vector<long long>& e) {
    long long idx = 0, mult = 1;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      idx += e[k] * mult;
      mult *= orders[k].convert_to<long long>();
    }
    return static_cast<int>(idx);
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (long long i = 0; i < n; ++i) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < orders.size(); ++k) os << (k ? "," : "") << elems[i][k];
    os << ")";
    names[i] = os.str();
    for (long long j = 0; j < n; ++j) {
      std::vector<long long> sum(orders.size());
      for (std::size_t k = 0; k < orders.size(); ++k)
        sum[k] = (elems[i][k] + elems[j][k]) % orders[k].convert_to<long long>();
      table[i][j] = index_of(sum);
    }
  }
  return grp::make_group(std::move(names), std::move(table));
}

bool window_is_zero(const Term& t) { return t.known() && t.group->is_trivial(); }

}  // namespace

std::vector<TermConstraint> solve_unknowns(const ExactSeqInstance& s) {
  std::vector<TermConstraint> out;
  int n = s.size();
  for (int u = 0; u < n; ++u) {
    if (s.terms[u].known()) continue;
    TermConstraint c;
    c.index = u;
    c.label = s.terms[u].label;

    // endpoint forcing: 0 -> X -> A -f-> B with f known gives X = ker f
    if (u >= 1 && window_is_zero(s.terms[u - 1]) && u + 2 < n && s.maps[u + 1].known()) {
      c.forced = ab::hom_parts(*s.maps[u + 1].hom).kernel;
    }
    // dual: A -f-> B -> X -> 0 with f known gives X = coker f
    if (!c.forced && u + 1 < n && window_is_zero(s.terms[u + 1]) && u >= 2 &&
        s.maps[u - 2].known()) {
      c.forced = ab::hom_parts(*s.maps[u - 2].hom).cokernel;
    }
    // short exact 0 -> A -> X -> B -> 0
    if (u >= 2 && u + 2 < n && window_is_zero(s.terms[u - 2]) &&
        window_is_zero(s.terms[u + 2]) && s.terms[u - 1].known() &&
        s.terms[u + 1].known()) {
      const FgAbGroup& a = *s.terms[u - 1].group;
      const FgAbGroup& b = *s.terms[u + 1].group;
      if (!c.rank) c.rank = a.rank() + b.rank();
      if (a.is_finite() && b.is_finite()) {
        Int oa = a.order(), ob = b.order();
        c.order_divides = oa * ob;
        c.order_multiple_of = oa * ob;  // |X| = |A||B| exactly in a SES
        if (gcd_int(oa, ob) == 1 && !c.forced) {
          c.forced = ab::direct_sum(a, b);
        } else if (!c.forced && oa * ob <= 64) {
          c.candidates = enumerate_extensions(a, b);
          if (c.candidates.size() == 1) c.forced = c.candidates.front();
        }
      }
    }
    // order bounds from exactness at u: |X| divides |A| * |B|
    if (!c.order_divides && u >= 1 && u + 1 < n && s.terms[u - 1].known() &&
        s.terms[u + 1].known() && s.terms[u - 1].group->is_finite() &&
        s.terms[u + 1].group->is_finite()) {
      c.order_divides = s.terms[u - 1].group->order() * s.terms[u + 1].group->order();
    }
    // alternating rank sum over a zero-bounded window with a single unknown
    if (!c.rank) {
      int lo = u;
      while (lo > 0 && s.terms[lo - 1].known() && !window_is_zero(s.terms[lo - 1])) --lo;
      int hi = u;
      while (hi + 1 < n && s.terms[hi + 1].known() && !window_is_zero(s.terms[hi + 1]))
        ++hi;
      bool lo_zero = (lo > 0 && window_is_zero(s.terms[lo - 1]));
      bool hi_zero = (hi + 1 < n && window_is_zero(s.terms[hi + 1]));
      if (lo_zero && hi_zero) {
        long long acc = 0;
        for (int i = lo; i <= hi; ++i) {
          if (i == u) continue;
          long long sgn = ((i - lo) % 2 == 0) ? 1 : -1;
          acc += sgn * s.terms[i].group->rank();
        }
        long long sgn = ((u - lo) % 2 == 0) ? 1 : -1;
        long long rank = -sgn * acc;
        if (rank < 0)
          throw BaerError(Errc::Inconsistent,
                          "alternating rank sum forces a negative rank for " + c.label);
        c.rank = static_cast<int>(rank);
      }
    }
    // consistency between forced value and the other constraints
    if (c.forced) {
      if (c.rank && *c.rank != c.forced->rank())
        throw BaerError(Errc::Inconsistent, "forced value violates rank constraint");
      if (c.order_divides && c.forced->is_finite() &&
          *c.order_divides % c.forced->order() != 0)
        throw BaerError(Errc::Inconsistent, "forced value violates order bound");
      if (!c.rank) c.rank = c.forced->rank();
    }
    if (c.order_divides && c.order_multiple_of > 1 &&
        *c.order_divides % c.order_multiple_of != 0)
      throw BaerError(Errc::Inconsistent,
                      "order bounds are unsatisfiable for " + c.label);
    out.push_back(std::move(c));
  }
  return out;
}

bool constraint_admits(const TermConstraint& c, const FgAbGroup& value) {
  if (c.forced) return c.forced->same_canonical(value);
  if (c.rank && value.rank() != *c.rank) return false;
  if (c.order_divides) {
    if (!value.is_finite()) return false;
    if (*c.order_divides % value.order() != 0) return false;
  }
  if (c.order_multiple_of > 1) {
    if (!value.is_finite() || value.order() % c.order_multiple_of != 0) return false;
  }
  if (!c.candidates.empty()) {
    bool hit = false;
    for (const auto& x : c.candidates)
      if (x.same_canonical(value)) hit = true;
    if (!hit) return false;
  }
  return true;
}

namespace {
bool hom_is_iso(const AbHom& f) {
  ab::HomParts p = ab::hom_parts(f);
  return p.kernel.is_trivial() && p.cokernel.is_trivial();
}
}  // namespace

FiveLemmaVerdict five_lemma(const FiveLemmaInput& in) {
  if (in.top.size() != 5 || in.bottom.size() != 5 || in.verticals.size() != 5)
    throw BaerError(Errc::InvalidArgument, "five_lemma wants five-term rows");
  for (const auto& row : {in.top, in.bottom}) {
    for (const auto& t : row.terms)
      if (!t.known())
        throw BaerError(Errc::InvalidArgument, "five_lemma rows must be fully known");
    for (const auto& m : row.maps)
      if (!m.known())
        throw BaerError(Errc::InvalidArgument, "five_lemma rows must be fully known");
    if (!all_determined_exact(verify_exactness(row)))
      throw BaerError(Errc::InvalidArgument, "five_lemma row is not exact");
  }
  for (int i : {0, 1, 3, 4})
    if (!hom_is_iso(in.verticals[i])) {
      FiveLemmaVerdict v;
      v.middle_is_iso = false;
      std::ostringstream os;
      os << "outer vertical " << i << " is not an isomorphism; refusing";
      v.detail = os.str();
      return v;
    }
  // commuting squares
  for (int i = 0; i < 4; ++i) {
    AbHom lhs = in.bottom.maps[i].hom->after(in.verticals[i]);
    AbHom rhs = in.verticals[i + 1].after(*in.top.maps[i].hom);
    if (!lhs.same_map(rhs))
      throw BaerError(Errc::InvalidArgument, "five_lemma square does not commute");
  }
  FiveLemmaVerdict v;
  v.middle_is_iso = hom_is_iso(in.verticals[2]);
  v.detail = v.middle_is_iso
                 ? "middle vertical verified: trivial kernel and cokernel"
                 : "middle vertical failed the direct kernel/cokernel check";
  return v;
}

}  // namespace baerlab::seq
