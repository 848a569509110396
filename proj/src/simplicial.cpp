#include "baerlab/simplicial.hpp"

#include <sstream>

namespace baerlab::simp {

std::string IdentityViolation::describe() const {
  std::ostringstream os;
  switch (family) {
    case 'd': os << "d_" << j << " d_" << i << " != d_" << (i - 1) << " d_" << j; break;
    case 's': os << "s_" << j << " s_" << i << " != s_" << (i + 1) << " s_" << j; break;
    default: os << "d_" << j << " s_" << i << " identity fails"; break;
  }
  os << " at level " << level;
  return os.str();
}

IdentityReport check_simplicial_identities(const TruncSimplicialAb& x) {
  IdentityReport rep;
  auto flag = [&](char fam, int n, int i, int j) {
    rep.ok = false;
    rep.violations.push_back({fam, n, i, j});
  };
  // d_j d_i = d_{i-1} d_j for j < i (maps level n -> n-2)
  for (int n = 2; n <= x.T; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        if (!x.d(n - 1, j).after(x.d(n, i)).same_map(x.d(n - 1, i - 1).after(x.d(n, j))))
          flag('d', n, i, j);
  // s_j s_i = s_{i+1} s_j for j <= i (maps level n -> n+2)
  for (int n = 0; n + 2 <= x.T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j)
        if (!x.s(n + 1, j).after(x.s(n, i)).same_map(x.s(n + 1, i + 1).after(x.s(n, j))))
          flag('s', n, i, j);
  // mixed: d_j s_i
  for (int n = 0; n + 1 <= x.T; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n + 1; ++j) {
        AbHom lhs = x.d(n + 1, j).after(x.s(n, i));
        if (j == i || j == i + 1) {
          if (!lhs.same_map(AbHom::identity(x.levels[n]))) flag('m', n, i, j);
        } else if (j < i) {
          if (n >= 1 && !lhs.same_map(x.s(n - 1, i - 1).after(x.d(n, j)))) flag('m', n, i, j);
        } else {  // j > i + 1
          if (n >= 1 && !lhs.same_map(x.s(n - 1, i).after(x.d(n, j - 1)))) flag('m', n, i, j);
        }
      }
  return rep;
}

TruncSimplicialAb constant_object(const FgAbGroup& a, int T) {
  TruncSimplicialAb x;
  x.T = T;
  x.levels.assign(T + 1, a);
  x.faces.resize(T + 1);
  x.degens.resize(T);
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(AbHom::identity(a));
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i) x.degens[n].push_back(AbHom::identity(a));
  x.verified = true;
  return x;
}

namespace {
void require_valid(const TruncSimplicialAb& x) {
  if (x.verified) return;
  IdentityReport rep = check_simplicial_identities(x);
  if (!rep.ok) {
    std::ostringstream os;
    os << "simplicial identities fail (" << rep.violations.size()
       << " violations, first: " << rep.violations.front().describe() << ")";
    throw BaerError(Errc::InvalidArgument, os.str());
  }
}
}  // namespace

MooreComplex moore_complex(const TruncSimplicialAb& x) {
  require_valid(x);
  MooreComplex out{ChainComplexAb({x.levels[0]}, {}), {}};
  std::vector<FgAbGroup> groups{x.levels[0]};
  std::vector<AbHom> incl{AbHom::identity(x.levels[0])};
  for (int n = 1; n <= x.T; ++n) {
    FgAbGroup cur = x.levels[n];
    AbHom inc = AbHom::identity(cur);
    for (int i = 0; i < n; ++i) {
      ab::HomParts p = ab::hom_parts(x.d(n, i).after(inc));
      inc = inc.after(p.kernel_incl);
      cur = p.kernel;
    }
    groups.push_back(cur);
    incl.push_back(inc);
  }
  std::vector<AbHom> diffs;
  for (int n = 1; n <= x.T; ++n) {
    // restriction of d_n to N_n lands in N_{n-1}
    AbHom ambient = x.d(n, n).after(incl[n]);
    diffs.push_back(ab::factor_through(incl[n - 1], ambient));
  }
  out.complex = ChainComplexAb(std::move(groups), std::move(diffs));
  out.include = std::move(incl);
  return out;
}

FgAbGroup homotopy(const TruncSimplicialAb& x, int n) {
  if (n < 0 || n > x.T - 1)
    throw BaerError(Errc::DegreeOutOfRange,
                    "homotopy degree must satisfy 0 <= n <= T-1");
  return chain_homology(moore_complex(x).complex, n);
}

TruncSimplicialAb tensor_diagonal(const TruncSimplicialAb& x,
                                  const TruncSimplicialAb& y, int out_trunc) {
  require_valid(x);
  require_valid(y);
  int T = std::min({out_trunc, x.T, y.T});
  TruncSimplicialAb out;
  out.T = T;
  for (int n = 0; n <= T; ++n)
    out.levels.push_back(ab::tensor_group(x.levels[n], y.levels[n]));
  out.faces.resize(T + 1);
  out.degens.resize(std::max(T, 0));
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i)
      out.faces[n].emplace_back(out.levels[n], out.levels[n - 1],
                                IntMatrix::kronecker(x.d(n, i).matrix(),
                                                     y.d(n, i).matrix()));
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i)
      out.degens[n].emplace_back(out.levels[n], out.levels[n + 1],
                                 IntMatrix::kronecker(x.s(n, i).matrix(),
                                                      y.s(n, i).matrix()));
  out.verified = false;  // re-checked by consumers
  return out;
}

SAbPtr share(TruncSimplicialAb x) {
  return std::make_shared<const TruncSimplicialAb>(std::move(x));
}

}  // namespace baerlab::simp
