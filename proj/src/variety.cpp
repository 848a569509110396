#include "baerlab/variety.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace baerlab::grp {

VarietySpec VarietySpec::abelian_exp_q(long long q) {
  if (q < 2) throw BaerError(Errc::InvalidArgument, "exponent q must be >= 2");
  return {Kind::AbelianExpQ, q};
}

VarietySpec VarietySpec::nilpotent_c(long long c) {
  if (c < 1) throw BaerError(Errc::InvalidArgument, "class c must be >= 1");
  return {Kind::NilpotentC, c};
}

std::vector<Word> VarietySpec::laws() const {
  switch (kind) {
    case Kind::Abelian:
      return {word_commutator(word_gen(0), word_gen(1))};
    case Kind::AbelianExpQ:
      return {word_commutator(word_gen(0), word_gen(1)), word_power(word_gen(0), param)};
    case Kind::NilpotentC: {
      std::vector<Word> vars;
      for (long long i = 0; i <= param; ++i) vars.push_back(word_gen(static_cast<int>(i)));
      return {left_normed_commutator(vars)};
    }
  }
  return {};
}

std::string VarietySpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Abelian: os << "abelian"; break;
    case Kind::AbelianExpQ: os << "burnside-" << param; break;
    case Kind::NilpotentC: os << "nilpotent-" << param; break;
  }
  return os.str();
}

namespace {

// Enumerate all assignments of k group elements, calling fn on each.
void for_all_tuples(int order, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(k, 0);
  for (;;) {
    fn(tuple);
    int i = k - 1;
    while (i >= 0 && ++tuple[i] == order) tuple[i--] = 0;
    if (i < 0) break;
  }
}

}  // namespace

Subgroup verbal_subgroup(GroupPtr g, const VarietySpec& v) {
  std::set<int> values;
  for (const Word& law : v.laws()) {
    int k = std::max(v.law_arity(law), 1);
    for_all_tuples(g->order(), k, [&](const std::vector<int>& tuple) {
      values.insert(g->eval_word(law, tuple));
    });
  }
  return Subgroup::closure(g, std::vector<int>(values.begin(), values.end()));
}

Subgroup lue_product(GroupPtr g, const Subgroup& n, const VarietySpec& v) {
  if (n.parent() != g)
    throw BaerError(Errc::MismatchedParents, "subgroup of a different group");
  if (!n.is_normal()) throw BaerError(Errc::NotNormal, "Lue product needs normal N");
  std::set<int> values;
  for (const Word& law : v.laws()) {
    int k = std::max(v.law_arity(law), 1);
    for_all_tuples(g->order(), k, [&](const std::vector<int>& tuple) {
      int base = g->eval_word(law, tuple);
      int base_inv = g->inv(base);
      std::vector<int> perturbed = tuple;
      for (int pos = 0; pos < k; ++pos) {
        for (int x : n.elements()) {
          perturbed[pos] = g->mul(tuple[pos], x);
          values.insert(g->mul(g->eval_word(law, perturbed), base_inv));
        }
        perturbed[pos] = tuple[pos];
      }
    });
  }
  return Subgroup::closure(g, std::vector<int>(values.begin(), values.end()));
}

Subgroup sharp_q(GroupPtr g, const Subgroup& m, const Subgroup& n, long long q) {
  if (m.parent() != g || n.parent() != g)
    throw BaerError(Errc::MismatchedParents, "subgroup of a different group");
  if (!m.is_normal() || !n.is_normal())
    throw BaerError(Errc::NotNormal, "sharp_q needs normal M and N");
  Subgroup meet = subgroup_intersection(m, n);
  std::set<int> values;
  for (int x : m.elements())
    for (int y : n.elements()) {
      int c = g->comm(x, y);
      for (int t : meet.elements()) values.insert(g->mul(c, g->pow(t, q)));
    }
  return Subgroup::closure(g, std::vector<int>(values.begin(), values.end()));
}

Subgroup iterated_commutator(GroupPtr g, const Subgroup& n, int c) {
  Subgroup acc = n;
  Subgroup whole = Subgroup::full(g);
  for (int i = 0; i < c; ++i) acc = commutator_subgroup(acc, whole);
  return acc;
}

}  // namespace baerlab::grp
