#ifndef BAERLAB_FINITE_GROUP_HPP
#define BAERLAB_FINITE_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "baerlab/fg_ab.hpp"
#include "baerlab/word.hpp"

namespace baerlab::grp {

// Finite group by multiplication table with named elements.  Construction
// validates the table is a Latin square, has an identity and inverses, and
// is associative (exhaustively; tables are desk-scale by design).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table,
              int max_order = 64);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const {  // x^-1 g x
    return mul(mul(inv_[x], g), x);
  }
  int comm(int a, int b) const {  // [a,b] = a^-1 b^-1 a b
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  int pow(int a, long long e) const;
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_abelian() const;
  int element_order(int a) const;
  int eval_word(const Word& w, const std::vector<int>& assignment) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;
GroupPtr make_group(std::vector<std::string> names, std::vector<std::vector<int>> table,
                    int max_order = 64);

// Subgroup as a closed, sorted element-index set of a shared parent.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements,
           std::vector<int> generators = {});
  static Subgroup closure(GroupPtr g, const std::vector<int>& gens);
  static Subgroup trivial(GroupPtr g);
  static Subgroup full(GroupPtr g);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elems_; }
  const std::vector<int>& generators() const { return gens_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;
  bool is_normal() const;
  bool same_as(const Subgroup& o) const;
  bool subset_of(const Subgroup& o) const;

 private:
  GroupPtr parent_;
  std::vector<int> elems_;
  std::vector<int> gens_;
};

Subgroup normal_closure(GroupPtr g, const std::vector<int>& gens);
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_product(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

// Lower central series gamma_1 = G, gamma_{i+1} = [gamma_i, G]; returns
// c+1 terms.
std::vector<Subgroup> gamma_series(GroupPtr g, int c);

struct Quotient {
  GroupPtr group;
  std::vector<int> proj;  // element -> coset index
  std::vector<int> reps;  // coset index -> representative element
};
Quotient quotient_group(GroupPtr g, const Subgroup& k);

// Verified homomorphism between table groups.
struct GroupHom {
  GroupPtr src, dst;
  std::vector<int> map;
};
GroupHom make_hom(GroupPtr src, GroupPtr dst, std::vector<int> map);
GroupHom hom_compose(const GroupHom& g, const GroupHom& f);  // g ∘ f
GroupHom hom_identity(GroupPtr g);
bool hom_surjective(const GroupHom& f);

struct TripleInstance {
  GroupPtr g;
  Subgroup m, n;
  TripleInstance(GroupPtr group, Subgroup m_sub, Subgroup n_sub);
};

struct TripleMorphism {
  TripleInstance src, dst;
  GroupHom f;
};
TripleMorphism triple_hom_apply(const std::vector<int>& f, const TripleInstance& src,
                                const TripleInstance& dst);
TripleMorphism triple_morphism_compose(const TripleMorphism& g, const TripleMorphism& f);

// Finite abelian group -> FgAbGroup on the Cayley presentation (one
// generator per element, relations e_x + e_y - e_{xy} and e_identity); a
// group hom then transports to the matching AbHom.
ab::FgAbGroup abelian_to_fg(const FiniteGroup& g);
ab::AbHom abelian_hom_to_ab(const GroupHom& f);

// Standalone group on the elements of a subgroup (restriction of the table).
GroupPtr subgroup_as_group(const Subgroup& s, std::vector<int>* index_map = nullptr);

}  // namespace baerlab::grp

#endif
