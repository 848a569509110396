#include "baerlab/ab_colimit.hpp"

#include <sstream>

namespace baerlab::ab {

DirectedSystemAb::DirectedSystemAb(std::vector<FgAbGroup> objects,
                                   std::map<std::pair<int, int>, AbHom> edges)
    : objects_(std::move(objects)) {
  int n = size();
  for (const auto& [key, hom] : edges) {
    auto [i, j] = key;
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      throw BaerError(Errc::InvalidArgument, "bad edge index in directed system");
    if (hom.src().gens() != objects_[i].gens() ||
        hom.dst().gens() != objects_[j].gens())
      throw BaerError(Errc::InvalidArgument, "edge hom does not match objects");
  }
  transitions_ = std::move(edges);

  // Transitive closure; composite transitions along different paths must
  // agree (functoriality), otherwise the system is rejected.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::pair<int, int>, AbHom>> add;
    for (const auto& [ij, f] : transitions_)
      for (const auto& [jk, g] : transitions_) {
        if (ij.second != jk.first) continue;
        std::pair<int, int> ik{ij.first, jk.second};
        if (ik.first == ik.second) {
          if (!g.after(f).same_map(AbHom::identity(objects_[ik.first])))
            throw BaerError(Errc::InvalidArgument,
                            "directed system has a non-identity cycle");
          continue;
        }
        AbHom comp = g.after(f);
        auto it = transitions_.find(ik);
        if (it == transitions_.end()) {
          add.emplace_back(ik, comp);
        } else if (!it->second.same_map(comp)) {
          throw BaerError(Errc::InvalidArgument,
                          "directed system transitions are not functorial");
        }
      }
    for (auto& [k, h] : add)
      if (transitions_.emplace(k, h).second) changed = true;
  }
  for (const auto& [k, h] : transitions_) pairs_.push_back(k);

  // Directedness: every pair must have an upper bound; a finite directed
  // poset then has a maximum, which identifies the colimit stage.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool ok = false;
      for (int k = 0; k < n && !ok; ++k)
        ok = (k == i || leq(i, k)) && (k == j || leq(j, k));
      if (!ok) {
        std::ostringstream os;
        os << "index poset is not directed: indices " << i << " and " << j
           << " have no upper bound";
        throw BaerError(Errc::ColimitNotFinite, os.str());
      }
    }
  top_ = 0;
  for (int k = 0; k < n; ++k) {
    bool dominates = true;
    for (int i = 0; i < n; ++i)
      if (i != k && !leq(i, k)) dominates = false;
    if (dominates) {
      top_ = k;
      break;
    }
  }
}

bool DirectedSystemAb::leq(int i, int j) const {
  if (i == j) return true;
  return transitions_.count({i, j}) > 0;
}

const AbHom& DirectedSystemAb::transition(int i, int j) const {
  auto it = transitions_.find({i, j});
  if (it == transitions_.end())
    throw BaerError(Errc::InvalidArgument, "transition for incomparable pair");
  return it->second;
}

FgAbGroup colimit(const DirectedSystemAb& sys) {
  int n = sys.size();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + sys.object(i).gens();
  int total = offset[n];

  std::vector<Triplet> ts;
  int col = 0;
  for (int i = 0; i < n; ++i) {
    const IntMatrix& rel = sys.object(i).relations();
    for (int c = 0; c < rel.cols(); ++c) {
      for (const auto& [r, v] : rel.sparse_col(c)) ts.push_back({offset[i] + r, col, v});
      ++col;
    }
  }
  for (const auto& [i, j] : sys.comparable_pairs()) {
    const IntMatrix& f = sys.transition(i, j).matrix();
    for (int g = 0; g < sys.object(i).gens(); ++g) {
      ts.push_back({offset[i] + g, col, Int(1)});
      for (const auto& [r, v] : f.sparse_col(g)) ts.push_back({offset[j] + r, col, -v});
      ++col;
    }
  }
  return FgAbGroup(IntMatrix::from_triplets(total, col, std::move(ts)));
}

}  // namespace baerlab::ab
