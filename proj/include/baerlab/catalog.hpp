#ifndef BAERLAB_CATALOG_HPP
#define BAERLAB_CATALOG_HPP

#include <string>
#include <vector>

#include "baerlab/finite_group.hpp"

namespace baerlab::grp {

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr direct_product(GroupPtr a, GroupPtr b);
GroupPtr klein_four();
GroupPtr symmetric_3();
GroupPtr dihedral(int n);  // order 2n
GroupPtr quaternion_8();
GroupPtr alternating_4();
GroupPtr dicyclic_3();  // order 12

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

// All groups of order <= 12 up to isomorphism (28 of them).
std::vector<NamedGroup> catalog_groups_leq_12();

// The five groups whose normal-subgroup pairs form the triple catalog.
std::vector<NamedGroup> triple_catalog_groups();

std::vector<Subgroup> all_subgroups(GroupPtr g);
std::vector<Subgroup> normal_subgroups(GroupPtr g);

// Every (M, N) pair of normal subgroups across the triple catalog groups.
std::vector<TripleInstance> catalog_triples();

}  // namespace baerlab::grp

#endif
