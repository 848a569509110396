#include "baerlab/simplicial_group.hpp"

#include <algorithm>
#include <sstream>

namespace baerlab::simp {

using grp::GroupHom;
using grp::GroupPtr;
using grp::Subgroup;

namespace {
bool same_hom(const GroupHom& a, const GroupHom& b) { return a.map == b.map; }
}  // namespace

IdentityReport check_simplicial_identities(const TruncSimplicialGrp& x) {
  IdentityReport rep;
  auto flag = [&](char fam, int n, int i, int j) {
    rep.ok = false;
    rep.violations.push_back({fam, n, i, j});
  };
  for (int n = 2; n <= x.T; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        if (!same_hom(grp::hom_compose(x.d(n - 1, j), x.d(n, i)),
                      grp::hom_compose(x.d(n - 1, i - 1), x.d(n, j))))
          flag('d', n, i, j);
  for (int n = 0; n + 2 <= x.T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j)
        if (!same_hom(grp::hom_compose(x.s(n + 1, j), x.s(n, i)),
                      grp::hom_compose(x.s(n + 1, i + 1), x.s(n, j))))
          flag('s', n, i, j);
  for (int n = 0; n + 1 <= x.T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n + 1; ++j) {
        GroupHom lhs = grp::hom_compose(x.d(n + 1, j), x.s(n, i));
        if (j == i || j == i + 1) {
          if (!same_hom(lhs, grp::hom_identity(x.levels[n]))) flag('m', n, i, j);
        } else if (j < i) {
          if (n >= 1 &&
              !same_hom(lhs, grp::hom_compose(x.s(n - 1, i - 1), x.d(n, j))))
            flag('m', n, i, j);
        } else {
          if (n >= 1 &&
              !same_hom(lhs, grp::hom_compose(x.s(n - 1, i), x.d(n, j - 1))))
            flag('m', n, i, j);
        }
      }
  return rep;
}

TruncSimplicialGrp constant_group_object(GroupPtr g, int T) {
  TruncSimplicialGrp x;
  x.T = T;
  x.levels.assign(T + 1, g);
  x.faces.resize(T + 1);
  x.degens.resize(std::max(T, 0));
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(grp::hom_identity(g));
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i) x.degens[n].push_back(grp::hom_identity(g));
  return x;
}

namespace {

void require_valid(const TruncSimplicialGrp& x) {
  IdentityReport rep = check_simplicial_identities(x);
  if (!rep.ok)
    throw BaerError(Errc::InvalidArgument,
                    "simplicial group identities fail: " +
                        rep.violations.front().describe());
}

Subgroup moore_subgroup(const TruncSimplicialGrp& x, int n) {
  // N_n = intersection of ker d_0..d_{n-1}
  GroupPtr level = x.levels[n];
  std::vector<int> elems;
  for (int e = 0; e < level->order(); ++e) {
    bool in = true;
    for (int i = 0; i < n && in; ++i)
      in = x.d(n, i).map[e] == x.levels[n - 1]->identity();
    if (in) elems.push_back(e);
  }
  return Subgroup(level, elems);
}

}  // namespace

GroupPtr pi0_finite(const TruncSimplicialGrp& x) {
  require_valid(x);
  if (x.T < 1)
    throw BaerError(Errc::DegreeOutOfRange, "pi0 needs truncation >= 1");
  Subgroup n1 = moore_subgroup(x, 1);
  std::vector<int> image;
  for (int e : n1.elements()) image.push_back(x.d(1, 1).map[e]);
  Subgroup img = grp::normal_closure(x.levels[0], image);
  return grp::quotient_group(x.levels[0], img).group;
}

FgAbGroup pi1_finite(const TruncSimplicialGrp& x) {
  require_valid(x);
  if (x.T < 2)
    throw BaerError(Errc::DegreeOutOfRange, "pi1 needs truncation >= 2");
  Subgroup n1 = moore_subgroup(x, 1);
  // cycles: elements of N_1 killed by d_1
  std::vector<int> cyc;
  for (int e : n1.elements())
    if (x.d(1, 1).map[e] == x.levels[0]->identity()) cyc.push_back(e);
  Subgroup cycles(x.levels[1], cyc);
  Subgroup n2 = moore_subgroup(x, 2);
  std::vector<int> bnd;
  for (int e : n2.elements()) bnd.push_back(x.d(2, 2).map[e]);
  Subgroup boundaries = Subgroup::closure(x.levels[1], bnd);
  if (!boundaries.subset_of(cycles))
    throw BaerError(Errc::ModelDefect, "boundaries escape cycles at level 1");

  std::vector<int> reindex;
  GroupPtr cg = grp::subgroup_as_group(cycles, &reindex);
  // boundaries inside the standalone cycle group
  std::vector<int> bnd_local;
  for (int e : boundaries.elements()) {
    int pos = static_cast<int>(std::lower_bound(reindex.begin(), reindex.end(), e) -
                               reindex.begin());
    bnd_local.push_back(pos);
  }
  Subgroup bsub = Subgroup::closure(cg, bnd_local);
  if (!bsub.is_normal())
    throw BaerError(Errc::ModelDefect, "boundary subgroup not normal in cycles");
  grp::Quotient q = grp::quotient_group(cg, bsub);
  if (!q.group->is_abelian())
    throw BaerError(Errc::ModelDefect,
                    "pi1-not-abelian: homotopy of a malformed simplicial group");
  return grp::abelian_to_fg(*q.group);
}

GroupPtr finite_model(const FgAbGroup& g) {
  if (!g.is_finite())
    throw BaerError(Errc::InvalidArgument, "finite_model needs a finite group");
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

namespace {

struct Codec {
  FgAbGroup group;
  ab::SmithCoords coords;
  GroupPtr table;
  std::vector<std::vector<Int>> canon;  // element index -> canonical coords
};

Codec codec_for(const FgAbGroup& g) {
  Codec c{g, ab::smith_coords(g), finite_model(g), {}};
  std::vector<Int> orders = g.factors();
  long long n = c.table->order();
  std::vector<Int> cur(orders.size(), Int(0));
  for (long long i = 0; i < n; ++i) {
    c.canon.push_back(cur);
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (++cur[k] < orders[k]) break;
      cur[k] = 0;
    }
  }
  return c;
}

GroupHom transport(const Codec& src, const Codec& dst, const AbHom& f) {
  std::vector<int> map(src.table->order());
  for (int e = 0; e < src.table->order(); ++e) {
    std::vector<Int> gen = src.coords.gen_coords_of(src.canon[e]);
    std::vector<Int> img = f.matrix().apply(gen);
    std::vector<Int> can = dst.coords.canonical_of(img);
    // locate the element with these canonical coordinates
    long long idx = 0, mult = 1;
    for (std::size_t k = 0; k < can.size(); ++k) {
      idx += can[k].convert_to<long long>() * mult;
      mult *= dst.group.factors()[k].convert_to<long long>();
    }
    map[e] = static_cast<int>(idx);
  }
  return grp::make_hom(src.table, dst.table, std::move(map));
}

}  // namespace

TruncSimplicialGrp to_group_object(const TruncSimplicialAb& x) {
  std::vector<Codec> codecs;
  for (const auto& lvl : x.levels) codecs.push_back(codec_for(lvl));
  TruncSimplicialGrp out;
  out.T = x.T;
  for (const auto& c : codecs) out.levels.push_back(c.table);
  out.faces.resize(x.T + 1);
  out.degens.resize(std::max(x.T, 0));
  for (int n = 1; n <= x.T; ++n)
    for (int i = 0; i <= n; ++i)
      out.faces[n].push_back(transport(codecs[n], codecs[n - 1], x.d(n, i)));
  for (int n = 0; n < x.T; ++n)
    for (int i = 0; i <= n; ++i)
      out.degens[n].push_back(transport(codecs[n], codecs[n + 1], x.s(n, i)));
  return out;
}

}  // namespace baerlab::simp
