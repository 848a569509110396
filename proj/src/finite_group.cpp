#include "baerlab/finite_group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace baerlab::grp {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<int>> table, int max_order)
    : names_(std::move(names)), table_(std::move(table)) {
  int n = static_cast<int>(table_.size());
  if (n == 0) throw BaerError(Errc::InvalidArgument, "empty multiplication table");
  if (n > max_order) {
    std::ostringstream os;
    os << "table group of order " << n << " exceeds cap " << max_order;
    throw BaerError(Errc::SizeCapExceeded, os.str());
  }
  if (static_cast<int>(names_.size()) != n)
    throw BaerError(Errc::InvalidArgument, "name count does not match table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw BaerError(Errc::InvalidArgument, "ragged multiplication table");
    for (int v : row)
      if (v < 0 || v >= n)
        throw BaerError(Errc::InvalidArgument, "table entry out of range");
  }
  // Latin square
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table_[i][j]]++)
        throw BaerError(Errc::InvalidArgument, "table row is not a permutation");
      if (seen_col[table_[j][i]]++)
        throw BaerError(Errc::InvalidArgument, "table column is not a permutation");
    }
  }
  // identity
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw BaerError(Errc::InvalidArgument, "table has no identity");
  // inverses
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0) throw BaerError(Errc::InvalidArgument, "element has no inverse");
  // associativity, exhaustive at desk scale
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw BaerError(Errc::InvalidArgument, "table is not associative");
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) return pow(inv_[a], -e);
  int acc = identity_;
  for (long long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int p = a, o = 1;
  while (p != identity_) {
    p = mul(p, a);
    ++o;
  }
  return o;
}

int FiniteGroup::eval_word(const Word& w, const std::vector<int>& assignment) const {
  int acc = identity_;
  for (const auto& [g, e] : w.syl) {
    if (g >= static_cast<int>(assignment.size()))
      throw BaerError(Errc::InvalidArgument, "word variable out of range");
    acc = mul(acc, pow(assignment[g], e));
  }
  return acc;
}

GroupPtr make_group(std::vector<std::string> names, std::vector<std::vector<int>> table,
                    int max_order) {
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table),
                                             max_order);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements, std::vector<int> gens)
    : parent_(std::move(parent)), elems_(std::move(elements)), gens_(std::move(gens)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!contains(parent_->identity()))
    throw BaerError(Errc::InvalidArgument, "subgroup misses the identity");
  for (int a : elems_) {
    if (!contains(parent_->inv(a)))
      throw BaerError(Errc::InvalidArgument, "subgroup not closed under inverse");
    for (int b : elems_)
      if (!contains(parent_->mul(a, b)))
        throw BaerError(Errc::InvalidArgument, "subgroup not closed under product");
  }
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

Subgroup Subgroup::closure(GroupPtr g, const std::vector<int>& gens) {
  std::set<int> seen{g->identity()};
  std::vector<int> queue{g->identity()};
  for (int x : gens)
    if (seen.insert(x).second) queue.push_back(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int a = queue[i];
    if (seen.insert(g->inv(a)).second) queue.push_back(g->inv(a));
    for (std::size_t j = 0; j <= i; ++j) {
      for (int p : {g->mul(a, queue[j]), g->mul(queue[j], a)})
        if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return Subgroup(std::move(g), std::vector<int>(seen.begin(), seen.end()), gens);
}

Subgroup Subgroup::trivial(GroupPtr g) {
  int e = g->identity();
  return Subgroup(std::move(g), {e});
}

Subgroup Subgroup::full(GroupPtr g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup(std::move(g), std::move(all));
}

bool Subgroup::is_normal() const {
  for (int h : elems_)
    for (int x = 0; x < parent_->order(); ++x)
      if (!contains(parent_->conj(h, x))) return false;
  return true;
}

bool Subgroup::same_as(const Subgroup& o) const {
  return parent_ == o.parent_ && elems_ == o.elems_;
}

bool Subgroup::subset_of(const Subgroup& o) const {
  if (parent_ != o.parent_) return false;
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

namespace {
void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent())
    throw BaerError(Errc::MismatchedParents, "subgroups have different parents");
}
}  // namespace

Subgroup normal_closure(GroupPtr g, const std::vector<int>& gens) {
  std::vector<int> cur = gens;
  for (;;) {
    Subgroup s = Subgroup::closure(g, cur);
    std::vector<int> extra;
    for (int h : s.elements())
      for (int x = 0; x < g->order(); ++x) {
        int c = g->conj(h, x);
        if (!s.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return s;
    cur = s.elements();
    cur.insert(cur.end(), extra.begin(), extra.end());
  }
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const FiniteGroup& g = *a.parent();
  std::vector<int> gens;
  for (int x : a.elements())
    for (int y : b.elements()) gens.push_back(g.comm(x, y));
  return Subgroup::closure(a.parent(), gens);
}

Subgroup subgroup_product(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (!a.is_normal() && !b.is_normal())
    throw BaerError(Errc::NotNormal, "product needs at least one normal factor");
  const FiniteGroup& g = *a.parent();
  std::vector<int> elems;
  for (int x : a.elements())
    for (int y : b.elements()) elems.push_back(g.mul(x, y));
  return Subgroup(a.parent(), std::move(elems));
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<int> elems;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(elems));
  return Subgroup(a.parent(), std::move(elems));
}

std::vector<Subgroup> gamma_series(GroupPtr g, int c) {
  std::vector<Subgroup> out;
  out.push_back(Subgroup::full(g));
  Subgroup whole = Subgroup::full(g);
  for (int i = 0; i < c; ++i) out.push_back(commutator_subgroup(out.back(), whole));
  return out;
}

namespace {
// Shortlex on element names: length first, then lexicographic.
bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
}  // namespace

Quotient quotient_group(GroupPtr g, const Subgroup& k) {
  if (k.parent() != g)
    throw BaerError(Errc::MismatchedParents, "subgroup of a different group");
  if (!k.is_normal()) throw BaerError(Errc::NotNormal, "quotient by non-normal subgroup");
  int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    // coset xK; pick the shortlex-least member name as representative
    int rep = x;
    for (int h : k.elements()) {
      int y = g->mul(x, h);
      coset_of[y] = c;
      if (shortlex_less(g->name(y), g->name(rep))) rep = y;
    }
    reps.push_back(rep);
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[g->mul(reps[i], reps[j])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "[" + g->name(reps[i]) + "]";
  GroupPtr qg = make_group(std::move(names), std::move(table));
  return Quotient{std::move(qg), std::move(coset_of), std::move(reps)};
}

GroupHom make_hom(GroupPtr src, GroupPtr dst, std::vector<int> map) {
  if (static_cast<int>(map.size()) != src->order())
    throw BaerError(Errc::NotAHomomorphism, "element map has wrong length");
  for (int v : map)
    if (v < 0 || v >= dst->order())
      throw BaerError(Errc::NotAHomomorphism, "element map value out of range");
  for (int a = 0; a < src->order(); ++a)
    for (int b = 0; b < src->order(); ++b)
      if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
        throw BaerError(Errc::NotAHomomorphism, "map does not preserve products");
  return GroupHom{std::move(src), std::move(dst), std::move(map)};
}

GroupHom hom_compose(const GroupHom& g, const GroupHom& f) {
  if (f.dst != g.src)
    throw BaerError(Errc::NotAHomomorphism, "composition endpoint mismatch");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
  return GroupHom{f.src, g.dst, std::move(m)};
}

GroupHom hom_identity(GroupPtr g) {
  std::vector<int> m(g->order());
  for (int i = 0; i < g->order(); ++i) m[i] = i;
  return GroupHom{g, g, std::move(m)};
}

bool hom_surjective(const GroupHom& f) {
  std::set<int> img(f.map.begin(), f.map.end());
  return static_cast<int>(img.size()) == f.dst->order();
}

TripleInstance::TripleInstance(GroupPtr group, Subgroup m_sub, Subgroup n_sub)
    : g(std::move(group)), m(std::move(m_sub)), n(std::move(n_sub)) {
  if (m.parent() != g || n.parent() != g)
    throw BaerError(Errc::MismatchedParents, "triple subgroups of a different group");
  if (!m.is_normal()) throw BaerError(Errc::NotNormal, "M is not normal in G");
  if (!n.is_normal()) throw BaerError(Errc::NotNormal, "N is not normal in G");
}

TripleMorphism triple_hom_apply(const std::vector<int>& f, const TripleInstance& src,
                                const TripleInstance& dst) {
  GroupHom hom = make_hom(src.g, dst.g, f);
  for (int x : src.m.elements())
    if (!dst.m.contains(hom.map[x]))
      throw BaerError(Errc::SubgroupNotPreserved, "map sends M1 outside M2");
  for (int x : src.n.elements())
    if (!dst.n.contains(hom.map[x]))
      throw BaerError(Errc::SubgroupNotPreserved, "map sends N1 outside N2");
  return TripleMorphism{src, dst, std::move(hom)};
}

TripleMorphism triple_morphism_compose(const TripleMorphism& g, const TripleMorphism& f) {
  return TripleMorphism{f.src, g.dst, hom_compose(g.f, f.f)};
}

ab::FgAbGroup abelian_to_fg(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw BaerError(Errc::InvalidArgument, "Cayley presentation needs an abelian group");
  int n = g.order();
  std::vector<ab::Triplet> ts;
  int col = 0;
  ts.push_back({g.identity(), col++, Int(1)});
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      ts.push_back({a, col, Int(1)});
      ts.push_back({b, col, Int(1)});
      ts.push_back({g.mul(a, b), col, Int(-1)});
      ++col;
    }
  return ab::FgAbGroup(ab::IntMatrix::from_triplets(n, col, std::move(ts)));
}

ab::AbHom abelian_hom_to_ab(const GroupHom& f) {
  ab::FgAbGroup src = abelian_to_fg(*f.src);
  ab::FgAbGroup dst = abelian_to_fg(*f.dst);
  std::vector<ab::Triplet> ts;
  for (int x = 0; x < f.src->order(); ++x) ts.push_back({f.map[x], x, Int(1)});
  return ab::AbHom(std::move(src), std::move(dst),
                   ab::IntMatrix::from_triplets(f.dst->order(), f.src->order(),
                                                std::move(ts)));
}

GroupPtr subgroup_as_group(const Subgroup& s, std::vector<int>* index_map) {
  const FiniteGroup& g = *s.parent();
  const std::vector<int>& el = s.elements();
  int n = static_cast<int>(el.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[el[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = g.name(el[i]);
    for (int j = 0; j < n; ++j) table[i][j] = pos[g.mul(el[i], el[j])];
  }
  if (index_map) *index_map = el;
  return make_group(std::move(names), std::move(table));
}

}  // namespace baerlab::grp
