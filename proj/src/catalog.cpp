#include "baerlab/catalog.hpp"

#include <set>
#include <sstream>

#include "baerlab/todd_coxeter.hpp"

namespace baerlab::grp {

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(int n) {
  if (n < 1) throw BaerError(Errc::InvalidArgument, "cyclic group order must be >= 1");
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    os << i;
    names[i] = os.str();
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return make_group(std::move(names), std::move(table));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  int na = a->order(), nb = b->order();
  auto idx = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::string> names(na * nb);
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      names[idx(x, y)] = "(" + a->name(x) + "," + b->name(y) + ")";
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v)
          table[idx(x, y)][idx(u, v)] = idx(a->mul(x, u), b->mul(y, v));
    }
  return make_group(std::move(names), std::move(table));
}

GroupPtr klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

namespace {
GroupPtr from_presentation(const std::vector<std::string>& gens,
                           const std::vector<std::string>& rels) {
  std::vector<Word> relators;
  for (const auto& r : rels) relators.push_back(parse_word(r, gens));
  Presentation p(gens, relators);
  return todd_coxeter_group(p);
}
}  // namespace

GroupPtr symmetric_3() { return from_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^2"}); }

GroupPtr dihedral(int n) {
  std::ostringstream rn;
  rn << "a^" << n;
  return from_presentation({"a", "b"}, {rn.str(), "b^2", "(a b)^2"});
}

GroupPtr quaternion_8() {
  return from_presentation({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"});
}

GroupPtr alternating_4() { return from_presentation({"a", "b"}, {"a^3", "b^2", "(a b)^3"}); }

GroupPtr dicyclic_3() {
  return from_presentation({"a", "b"}, {"a^6", "a^3 b^-2", "b^-1 a b a"});
}

std::vector<NamedGroup> catalog_groups_leq_12() {
  auto c = [](int n) { return cyclic_group(n); };
  std::vector<NamedGroup> out;
  out.push_back({"1", trivial_group()});
  out.push_back({"Z2", c(2)});
  out.push_back({"Z3", c(3)});
  out.push_back({"Z4", c(4)});
  out.push_back({"Z2xZ2", klein_four()});
  out.push_back({"Z5", c(5)});
  out.push_back({"Z6", c(6)});
  out.push_back({"S3", symmetric_3()});
  out.push_back({"Z7", c(7)});
  out.push_back({"Z8", c(8)});
  out.push_back({"Z4xZ2", direct_product(c(4), c(2))});
  out.push_back({"Z2xZ2xZ2", direct_product(klein_four(), c(2))});
  out.push_back({"D4", dihedral(4)});
  out.push_back({"Q8", quaternion_8()});
  out.push_back({"Z9", c(9)});
  out.push_back({"Z3xZ3", direct_product(c(3), c(3))});
  out.push_back({"Z10", c(10)});
  out.push_back({"D5", dihedral(5)});
  out.push_back({"Z11", c(11)});
  out.push_back({"Z12", c(12)});
  out.push_back({"Z6xZ2", direct_product(c(6), c(2))});
  out.push_back({"D6", dihedral(6)});
  out.push_back({"A4", alternating_4()});
  out.push_back({"Dic3", dicyclic_3()});
  return out;
}

std::vector<NamedGroup> triple_catalog_groups() {
  return {{"Z2xZ2", klein_four()},
          {"Z4", cyclic_group(4)},
          {"D4", dihedral(4)},
          {"S3", symmetric_3()},
          {"Q8", quaternion_8()}};
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<int>> queue;
  Subgroup triv = Subgroup::trivial(g);
  seen.insert(triv.elements());
  out.push_back(triv);
  queue.push_back(triv.elements());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<int> base = queue[i];
    for (int x = 0; x < g->order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup s = Subgroup::closure(g, gens);
      if (seen.insert(s.elements()).second) {
        out.push_back(s);
        queue.push_back(s.elements());
      }
    }
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.is_normal()) out.push_back(s);
  return out;
}

std::vector<TripleInstance> catalog_triples() {
  std::vector<TripleInstance> out;
  for (const auto& ng : triple_catalog_groups()) {
    std::vector<Subgroup> normals = normal_subgroups(ng.group);
    for (const auto& m : normals)
      for (const auto& n : normals) out.emplace_back(ng.group, m, n);
  }
  return out;
}

}  // namespace baerlab::grp
