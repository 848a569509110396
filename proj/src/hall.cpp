#include "baerlab/hall.hpp"

#include <sstream>

namespace baerlab::grp {

std::vector<int> HallBasis::of_weight(int w) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    if (elements[i].weight == w) out.push_back(i);
  return out;
}

std::string HallBasis::bracket_string(int idx) const {
  const BasicCommutator& b = elements[idx];
  if (b.weight == 1) {
    std::ostringstream os;
    os << "x" << (b.gen + 1);
    return os.str();
  }
  return "[" + bracket_string(b.left) + "," + bracket_string(b.right) + "]";
}

HallWittResult hall_witt(int n, int w) {
  if (n < 1 || w < 1)
    throw BaerError(Errc::InvalidArgument, "hall_witt needs n >= 1 and w >= 1");
  HallBasis basis;
  basis.ngens = n;
  for (int g = 0; g < n; ++g) {
    BasicCommutator b;
    b.weight = 1;
    b.gen = g;
    basis.elements.push_back(b);
  }
  // Hall condition for [u, v]: weight(u)+weight(v) = target, u > v in basis
  // order, and if u = [u1, u2] then u2 <= v.  Basis order is list order.
  for (int weight = 2; weight <= w; ++weight) {
    int cur = static_cast<int>(basis.elements.size());
    for (int u = 0; u < cur; ++u)
      for (int v = 0; v < u; ++v) {
        const auto& bu = basis.elements[u];
        const auto& bv = basis.elements[v];
        if (bu.weight + bv.weight != weight) continue;
        if (bu.weight > 1 && bu.right > v) continue;
        BasicCommutator b;
        b.weight = weight;
        b.left = u;
        b.right = v;
        basis.elements.push_back(b);
      }
  }
  HallWittResult res;
  res.weight_w_indices = basis.of_weight(w);
  res.count = static_cast<long long>(res.weight_w_indices.size());
  res.basis = std::move(basis);
  long long formula = witt_number(n, w);
  if (formula != res.count)
    throw BaerError(Errc::Inconsistent,
                    "Hall basis count disagrees with Witt's formula");
  return res;
}

long long witt_number(long long n, long long w) {
  auto mobius = [](long long d) {
    long long m = 1;
    for (long long p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0ll;
        m = -m;
      }
    if (d > 1) m = -m;
    return m;
  };
  long long acc = 0;
  for (long long d = 1; d <= w; ++d) {
    if (w % d != 0) continue;
    long long pw = 1;
    for (long long i = 0; i < w / d; ++i) pw *= n;
    acc += mobius(d) * pw;
  }
  return acc / w;
}

}  // namespace baerlab::grp
