#include "baerlab/bar_model.hpp"

#include <sstream>

namespace baerlab::mult {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

constexpr long long kAbsoluteRankCap = 200000;

std::vector<int> decode(long long idx, int order, int n) {
  std::vector<int> t(n);
  for (int k = 0; k < n; ++k) {
    t[k] = static_cast<int>(idx % order);
    idx /= order;
  }
  return t;
}

long long encode(const std::vector<int>& t, int order) {
  long long idx = 0, mult = 1;
  for (int x : t) {
    idx += x * mult;
    mult *= order;
  }
  return idx;
}

}  // namespace

BarModel bar_model(grp::GroupPtr g, int T, const BarCaps& caps) {
  int order = g->order();
  if (order > caps.max_order) {
    std::ostringstream os;
    os << "bar model cap: |G| = " << order << " exceeds max_order = " << caps.max_order;
    throw BaerError(Errc::SizeCapExceeded, os.str());
  }
  if (T > caps.trunc) {
    std::ostringstream os;
    os << "bar model cap: truncation " << T << " exceeds " << caps.trunc;
    throw BaerError(Errc::SizeCapExceeded, os.str());
  }
  if (ipow(order, T) > kAbsoluteRankCap)
    throw BaerError(Errc::SizeCapExceeded, "bar model top level rank too large");

  simp::TruncSimplicialAb x;
  x.T = T;
  for (int n = 0; n <= T; ++n)
    x.levels.push_back(FgAbGroup::free_group(static_cast<int>(ipow(order, n))));
  x.faces.resize(T + 1);
  x.degens.resize(std::max(T, 0));
  for (int n = 1; n <= T; ++n) {
    long long src_rank = ipow(order, n);
    long long dst_rank = ipow(order, n - 1);
    for (int i = 0; i <= n; ++i) {
      std::vector<ab::Triplet> ts;
      ts.reserve(src_rank);
      for (long long idx = 0; idx < src_rank; ++idx) {
        std::vector<int> t = decode(idx, order, n);
        std::vector<int> img;
        img.reserve(n - 1);
        if (i == 0) {
          img.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          img.assign(t.begin(), t.end() - 1);
        } else {
          img.assign(t.begin(), t.end() - 1);
          img[i - 1] = g->mul(t[i - 1], t[i]);
          for (int k = i; k < n - 1; ++k) img[k] = t[k + 1];
        }
        ts.push_back({static_cast<int>(encode(img, order)), static_cast<int>(idx),
                      Int(1)});
      }
      x.faces[n].emplace_back(x.levels[n], x.levels[n - 1],
                              ab::IntMatrix::from_triplets(
                                  static_cast<int>(dst_rank),
                                  static_cast<int>(src_rank), std::move(ts)));
    }
  }
  for (int n = 0; n < T; ++n) {
    long long src_rank = ipow(order, n);
    long long dst_rank = ipow(order, n + 1);
    for (int i = 0; i <= n; ++i) {
      std::vector<ab::Triplet> ts;
      ts.reserve(src_rank);
      for (long long idx = 0; idx < src_rank; ++idx) {
        std::vector<int> t = decode(idx, order, n);
        std::vector<int> img(t.begin(), t.begin() + i);
        img.push_back(g->identity());
        img.insert(img.end(), t.begin() + i, t.end());
        ts.push_back({static_cast<int>(encode(img, order)), static_cast<int>(idx),
                      Int(1)});
      }
      x.degens[n].emplace_back(x.levels[n], x.levels[n + 1],
                               ab::IntMatrix::from_triplets(
                                   static_cast<int>(dst_rank),
                                   static_cast<int>(src_rank), std::move(ts)));
    }
  }
  simp::IdentityReport rep = simp::check_simplicial_identities(x);
  if (!rep.ok)
    throw BaerError(Errc::Inconsistent, "bar model violates simplicial identities");
  x.verified = true;
  return BarModel{std::move(g), simp::share(std::move(x))};
}

std::vector<ab::AbHom> bar_induced(const BarModel& src, const BarModel& dst,
                                   const grp::GroupHom& f) {
  if (f.src != src.group || f.dst != dst.group)
    throw BaerError(Errc::InvalidArgument, "bar_induced: hom endpoints mismatch");
  int T = std::min(src.object->T, dst.object->T);
  int so = src.group->order(), do_ = dst.group->order();
  std::vector<ab::AbHom> out;
  for (int n = 0; n <= T; ++n) {
    long long src_rank = ipow(so, n);
    std::vector<ab::Triplet> ts;
    ts.reserve(src_rank);
    for (long long idx = 0; idx < src_rank; ++idx) {
      std::vector<int> t = decode(idx, so, n);
      std::vector<int> img(n);
      for (int k = 0; k < n; ++k) img[k] = f.map[t[k]];
      ts.push_back({static_cast<int>(encode(img, do_)), static_cast<int>(idx), Int(1)});
    }
    out.emplace_back(src.object->levels[n], dst.object->levels[n],
                     ab::IntMatrix::from_triplets(static_cast<int>(ipow(do_, n)),
                                                  static_cast<int>(src_rank),
                                                  std::move(ts)));
  }
  return out;
}

FgAbGroup homology_group(grp::GroupPtr g, int n, const BarCaps& caps) {
  if (n < 0) throw BaerError(Errc::DegreeOutOfRange, "negative homology degree");
  if (n + 1 > caps.trunc)
    throw BaerError(Errc::SizeCapExceeded,
                    "homology degree needs truncation beyond the cap");
  BarModel b = bar_model(g, n + 1, caps);
  return simp::homotopy(*b.object, n);
}

FgAbGroup normalized_bar_homology(grp::GroupPtr g, int n) {
  int order = g->order();
  int nd = order - 1;  // non-identity elements per slot
  int e = g->identity();
  // element index <-> non-identity code
  std::vector<int> code_of(order, -1), elem_of(nd);
  int c = 0;
  for (int x = 0; x < order; ++x)
    if (x != e) {
      code_of[x] = c;
      elem_of[c] = x;
      ++c;
    }
  auto rank = [&](int k) { return static_cast<long long>(ipow(nd, k)); };
  auto decode_nd = [&](long long idx, int k) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) {
      t[i] = elem_of[idx % nd];
      idx /= nd;
    }
    return t;
  };
  auto encode_nd = [&](const std::vector<int>& t) {
    long long idx = 0, mult = 1;
    for (int x : t) {
      idx += code_of[x] * mult;
      mult *= nd;
    }
    return idx;
  };

  std::vector<FgAbGroup> groups;
  std::vector<ab::AbHom> diffs;
  for (int k = 0; k <= n + 1; ++k)
    groups.push_back(FgAbGroup::free_group(static_cast<int>(rank(k))));
  for (int k = 1; k <= n + 1; ++k) {
    std::vector<ab::Triplet> ts;
    for (long long idx = 0; idx < rank(k); ++idx) {
      std::vector<int> t = decode_nd(idx, k);
      // d_0 and d_k drop an entry; inner faces multiply (degenerate -> 0)
      {
        std::vector<int> img(t.begin() + 1, t.end());
        ts.push_back({static_cast<int>(encode_nd(img)), static_cast<int>(idx), Int(1)});
      }
      Int sign = -1;
      for (int i = 1; i < k; ++i) {
        int prod = g->mul(t[i - 1], t[i]);
        if (prod != e) {
          std::vector<int> img(t.begin(), t.end() - 1);
          img[i - 1] = prod;
          for (int q = i; q < k - 1; ++q) img[q] = t[q + 1];
          ts.push_back({static_cast<int>(encode_nd(img)), static_cast<int>(idx), sign});
        }
        sign = -sign;
      }
      {
        std::vector<int> img(t.begin(), t.end() - 1);
        ts.push_back({static_cast<int>(encode_nd(img)), static_cast<int>(idx), sign});
      }
    }
    diffs.emplace_back(groups[k], groups[k - 1],
                       ab::IntMatrix::from_triplets(static_cast<int>(rank(k - 1)),
                                                    static_cast<int>(rank(k)),
                                                    std::move(ts)));
  }
  return simp::chain_homology(simp::ChainComplexAb(std::move(groups), std::move(diffs)),
                              n);
}

}  // namespace baerlab::mult
