#include "baerlab/dold_kan.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace baerlab::simp {

namespace {

// Monotone surjections [n] ->> [k] as value vectors of length n+1.
std::vector<std::vector<int>> monotone_surjections(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n + 1, 0);
  // choose positions 1..n where the value steps up (k steps total)
  std::vector<int> steps(k);
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == k) {
      int v = 0;
      std::size_t s = 0;
      for (int t = 0; t <= n; ++t) {
        while (s < steps.size() && steps[s] == t) {
          ++v;
          ++s;
        }
        cur[t] = v;
      }
      out.push_back(cur);
      return;
    }
    for (int pos = from; pos <= n; ++pos) {
      steps[idx] = pos;
      rec(idx + 1, pos + 1);
    }
  };
  if (k == 0) {
    out.push_back(std::vector<int>(n + 1, 0));
  } else if (k <= n) {
    rec(0, 1);
  }
  return out;
}

struct Summand {
  int k;
  std::vector<int> eta;
  int offset;
};

struct Level {
  std::vector<Summand> summands;
  std::map<std::vector<int>, int> index;  // eta -> summand position
  int total = 0;
};

// summand layout for levels 0..T over a complex of the given length
std::vector<Level> build_levels(const ChainComplexAb& c, int T) {
  int len = c.length();
  std::vector<Level> levels(T + 1);
  for (int n = 0; n <= T; ++n) {
    for (int k = 0; k <= std::min(n, len); ++k) {
      for (auto& eta : monotone_surjections(n, k)) {
        Summand s{k, eta, levels[n].total};
        levels[n].index[eta] = static_cast<int>(levels[n].summands.size());
        levels[n].total += c.groups[k].gens();
        levels[n].summands.push_back(std::move(s));
      }
    }
  }
  return levels;
}

// factor a monotone map f: [m] -> [k] as injection ∘ surjection
struct Factored {
  std::vector<int> eta;  // [m] ->> [j]
  int j;
  bool eps_identity;     // image = {0..k}
  bool eps_top_face;     // image = {0..k-1}
};

Factored factor_monotone(const std::vector<int>& f, int k) {
  std::vector<int> vals;
  for (int v : f)
    if (vals.empty() || vals.back() != v) vals.push_back(v);
  Factored out;
  out.j = static_cast<int>(vals.size()) - 1;
  out.eta.resize(f.size());
  for (std::size_t t = 0; t < f.size(); ++t)
    out.eta[t] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), f[t]) -
                                  vals.begin());
  out.eps_identity = (out.j == k);
  out.eps_top_face = false;
  if (out.j == k - 1) {
    bool initial = true;
    for (int r = 0; r <= out.j; ++r)
      if (vals[r] != r) initial = false;
    out.eps_top_face = initial;  // image {0..k-1}, only the top vertex missing
  }
  return out;
}

}  // namespace

TruncSimplicialAb dold_kan(const ChainComplexAb& c, int T) {
  if (T < c.length())
    throw BaerError(Errc::InvalidArgument, "dold_kan truncation below complex length");

  std::vector<Level> levels = build_levels(c, T);

  TruncSimplicialAb out;
  out.T = T;
  for (int n = 0; n <= T; ++n) {
    std::vector<ab::Triplet> ts;
    int col = 0;
    for (const auto& s : levels[n].summands) {
      const IntMatrix& rel = c.groups[s.k].relations();
      for (int rc = 0; rc < rel.cols(); ++rc) {
        for (const auto& [r, v] : rel.sparse_col(rc)) ts.push_back({s.offset + r, col, v});
        ++col;
      }
    }
    out.levels.push_back(
        FgAbGroup(IntMatrix::from_triplets(levels[n].total, col, std::move(ts))));
  }

  // structure map for alpha: [m] -> [n], assembled summand by summand
  auto build = [&](int n, int m, const std::vector<int>& alpha) {
    std::vector<ab::Triplet> ts;
    for (const auto& s : levels[n].summands) {
      std::vector<int> comp(alpha.size());
      for (std::size_t t = 0; t < alpha.size(); ++t) comp[t] = s.eta[alpha[t]];
      Factored f = factor_monotone(comp, s.k);
      if (f.eps_identity) {
        const Summand& dst = levels[m].summands[levels[m].index.at(f.eta)];
        for (int g = 0; g < c.groups[s.k].gens(); ++g)
          ts.push_back({dst.offset + g, s.offset + g, Int(1)});
      } else if (f.eps_top_face && s.k >= 1) {
        const Summand& dst = levels[m].summands[levels[m].index.at(f.eta)];
        const IntMatrix& d = c.boundary_from(s.k).matrix();
        for (int g = 0; g < d.cols(); ++g)
          for (const auto& [r, v] : d.sparse_col(g))
            ts.push_back({dst.offset + r, s.offset + g, v});
      }
      // all other injections act by zero
    }
    return IntMatrix::from_triplets(levels[m].total, levels[n].total, std::move(ts));
  };

  out.faces.resize(T + 1);
  out.degens.resize(std::max(T, 0));
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> delta(n);  // [n-1] -> [n] skipping i
      for (int t = 0; t < n; ++t) delta[t] = t < i ? t : t + 1;
      out.faces[n].emplace_back(out.levels[n], out.levels[n - 1], build(n, n - 1, delta));
    }
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> sigma(n + 2);  // [n+1] -> [n] repeating i
      for (int t = 0; t <= n + 1; ++t) sigma[t] = t <= i ? t : t - 1;
      out.degens[n].emplace_back(out.levels[n], out.levels[n + 1], build(n, n + 1, sigma));
    }
  out.verified = false;
  return out;
}

std::vector<AbHom> dold_kan_map(const ChainComplexAb& src_c,
                                const TruncSimplicialAb& src_obj,
                                const ChainComplexAb& dst_c,
                                const TruncSimplicialAb& dst_obj,
                                const std::vector<AbHom>& chain_map) {
  if (src_obj.T != dst_obj.T)
    throw BaerError(Errc::InvalidArgument, "dold_kan_map: truncation mismatch");
  int T = src_obj.T;
  std::vector<Level> src_levels = build_levels(src_c, T);
  std::vector<Level> dst_levels = build_levels(dst_c, T);
  std::vector<AbHom> out;
  for (int n = 0; n <= T; ++n) {
    std::vector<ab::Triplet> ts;
    for (const auto& s : src_levels[n].summands) {
      if (s.k > dst_c.length()) continue;  // zero component
      if (s.k >= static_cast<int>(chain_map.size())) continue;
      const IntMatrix& f = chain_map[s.k].matrix();
      const Summand& dst = dst_levels[n].summands[dst_levels[n].index.at(s.eta)];
      for (int g = 0; g < f.cols(); ++g)
        for (const auto& [r, v] : f.sparse_col(g))
          ts.push_back({dst.offset + r, s.offset + g, v});
    }
    out.emplace_back(src_obj.levels[n], dst_obj.levels[n],
                     IntMatrix::from_triplets(dst_levels[n].total,
                                              src_levels[n].total, std::move(ts)));
  }
  return out;
}

ChainComplexAb chain_direct_sum(const ChainComplexAb& a, const ChainComplexAb& b) {
  int len = std::max(a.length(), b.length());
  auto group_at = [](const ChainComplexAb& c, int k) {
    return k <= c.length() ? c.groups[k] : FgAbGroup::trivial();
  };
  std::vector<FgAbGroup> groups;
  for (int k = 0; k <= len; ++k)
    groups.push_back(ab::direct_sum(group_at(a, k), group_at(b, k)));
  std::vector<AbHom> diffs;
  for (int k = 1; k <= len; ++k) {
    int ga1 = group_at(a, k).gens(), gb1 = group_at(b, k).gens();
    int ga0 = group_at(a, k - 1).gens();
    std::vector<ab::Triplet> ts;
    if (k <= a.length()) {
      const IntMatrix& d = a.boundary_from(k).matrix();
      for (int g = 0; g < d.cols(); ++g)
        for (const auto& [r, v] : d.sparse_col(g)) ts.push_back({r, g, v});
    }
    if (k <= b.length()) {
      const IntMatrix& d = b.boundary_from(k).matrix();
      for (int g = 0; g < d.cols(); ++g)
        for (const auto& [r, v] : d.sparse_col(g)) ts.push_back({ga0 + r, ga1 + g, v});
    }
    diffs.emplace_back(groups[k], groups[k - 1],
                       IntMatrix::from_triplets(groups[k - 1].gens(),
                                                ga1 + gb1, std::move(ts)));
  }
  return ChainComplexAb(std::move(groups), std::move(diffs));
}

}  // namespace baerlab::simp
