#include "baerlab/simplicial_les.hpp"

#include <sstream>

namespace baerlab::simp {

LevelwiseSurjection make_levelwise_surjection(SAbPtr total, SAbPtr base,
                                              std::vector<AbHom> maps) {
  if (total->T != base->T)
    throw BaerError(Errc::InvalidArgument, "surjection endpoints differ in truncation");
  if (static_cast<int>(maps.size()) != total->T + 1)
    throw BaerError(Errc::InvalidArgument, "level map count mismatch");
  for (int n = 0; n <= total->T; ++n) {
    if (!ab::hom_parts(maps[n]).cokernel.is_trivial()) {
      std::ostringstream os;
      os << "level " << n << " map is not surjective";
      throw BaerError(Errc::InvalidArgument, os.str());
    }
  }
  for (int n = 1; n <= total->T; ++n)
    for (int i = 0; i <= n; ++i)
      if (!maps[n - 1].after(total->d(n, i)).same_map(base->d(n, i).after(maps[n])))
        throw BaerError(Errc::InvalidArgument, "map does not commute with faces");
  for (int n = 0; n < total->T; ++n)
    for (int i = 0; i <= n; ++i)
      if (!maps[n + 1].after(total->s(n, i)).same_map(base->s(n, i).after(maps[n])))
        throw BaerError(Errc::InvalidArgument, "map does not commute with degeneracies");
  return LevelwiseSurjection{std::move(total), std::move(base), std::move(maps)};
}

KernelObject simplicial_kernel(const LevelwiseSurjection& f) {
  int T = f.total->T;
  TruncSimplicialAb k;
  k.T = T;
  std::vector<AbHom> incl;
  for (int n = 0; n <= T; ++n) {
    ab::HomParts p = ab::hom_parts(f.level_maps[n]);
    k.levels.push_back(p.kernel);
    incl.push_back(p.kernel_incl);
  }
  k.faces.resize(T + 1);
  k.degens.resize(std::max(T, 0));
  for (int n = 1; n <= T; ++n)
    for (int i = 0; i <= n; ++i)
      k.faces[n].push_back(
          ab::factor_through(incl[n - 1], f.total->d(n, i).after(incl[n])));
  for (int n = 0; n < T; ++n)
    for (int i = 0; i <= n; ++i)
      k.degens[n].push_back(
          ab::factor_through(incl[n + 1], f.total->s(n, i).after(incl[n])));
  IdentityReport rep = check_simplicial_identities(k);
  if (!rep.ok)
    throw BaerError(Errc::Inconsistent, "kernel object fails identities");
  k.verified = true;
  return KernelObject{share(std::move(k)), std::move(incl)};
}

namespace {

// Moore-level maps induced by a simplicial map (levelwise factoring).
std::vector<AbHom> moore_maps(const MooreComplex& src, const MooreComplex& dst,
                              const std::vector<AbHom>& level_maps) {
  std::vector<AbHom> out;
  for (std::size_t n = 0; n < src.include.size(); ++n)
    out.push_back(
        ab::factor_through(dst.include[n], level_maps[n].after(src.include[n])));
  return out;
}

}  // namespace

LesOutcome les_of_surjection(const LevelwiseSurjection& f) {
  int T = f.total->T;
  if (T < 1)
    throw BaerError(Errc::DegreeOutOfRange, "les_of_surjection needs truncation >= 1");
  KernelObject K = simplicial_kernel(f);

  MooreComplex mk = moore_complex(*K.object);
  MooreComplex mx = moore_complex(*f.total);
  MooreComplex my = moore_complex(*f.base);

  std::vector<AbHom> k_to_x = moore_maps(mk, mx, K.include);
  std::vector<AbHom> x_to_y = moore_maps(mx, my, f.level_maps);

  std::vector<HomologySlot> hk(T + 1), hx(T + 1), hy(T + 1);
  for (int n = 0; n < T; ++n) {
    hk[n] = homology_slot(mk.complex, n);
    hx[n] = homology_slot(mx.complex, n);
    hy[n] = homology_slot(my.complex, n);
  }

  // connecting map H_n(Y) -> H_{n-1}(K): lift a cycle through the Moore
  // surjection, push with the boundary, pull back into the kernel.
  auto connecting = [&](int n) {
    const HomologySlot& sy = hy[n];
    const HomologySlot& tk = hk[n - 1];
    const IntMatrix& cyc = sy.cycle_incl.matrix();  // cycles in NY_n coords
    auto lift = ab::solve_columns_mod(x_to_y[n].matrix(),
                                      my.complex.groups[n].relations(), cyc);
    if (!lift)
      throw BaerError(Errc::Inconsistent, "Moore-level lift failed in connecting map");
    IntMatrix pushed = mx.complex.boundary_from(n).matrix() * *lift;
    auto in_k = ab::solve_columns_mod(k_to_x[n - 1].matrix(),
                                      mx.complex.groups[n - 1].relations(), pushed);
    if (!in_k)
      throw BaerError(Errc::Inconsistent,
                      "boundary of lift escapes the kernel in connecting map");
    auto in_cycles = ab::solve_columns_mod(tk.cycle_incl.matrix(),
                                           mk.complex.groups[n - 1].relations(), *in_k);
    if (!in_cycles)
      throw BaerError(Errc::Inconsistent, "connecting image is not a cycle");
    AbHom to_homology = tk.cycle_to_homology.after(
        AbHom(sy.cycles, tk.cycles, *in_cycles));
    return AbHom(sy.homology, tk.homology, to_homology.matrix());
  };

  std::vector<seq::Term> terms;
  std::vector<seq::MapSlot> maps;
  for (int n = T - 1; n >= 0; --n) {
    std::ostringstream lk, lx, ly;
    lk << "pi_" << n << "(ker)";
    lx << "pi_" << n << "(total)";
    ly << "pi_" << n << "(base)";
    terms.push_back(seq::Term::of(hk[n].homology, lk.str()));
    maps.push_back(
        seq::MapSlot::of(induced_on_homology(hk[n], hx[n], k_to_x[n]), "induced"));
    terms.push_back(seq::Term::of(hx[n].homology, lx.str()));
    maps.push_back(seq::MapSlot::of(induced_on_homology(hx[n], hy[n], x_to_y[n]),
                                    "induced"));
    terms.push_back(seq::Term::of(hy[n].homology, ly.str()));
    if (n > 0)
      maps.push_back(seq::MapSlot::of(connecting(n), "connecting"));
  }
  terms.push_back(seq::Term::of(FgAbGroup::trivial(), "0"));
  maps.push_back(seq::MapSlot::of(
      AbHom::zero(*terms[terms.size() - 2].group, FgAbGroup::trivial()), "zero"));

  LesOutcome out{seq::ExactSeqInstance(std::move(terms), std::move(maps)),
                 std::move(K),
                 {}};
  std::ostringstream note;
  note << "connecting map out of degree " << T
       << " is indeterminate at this truncation; exactness at pi_" << (T - 1)
       << "(ker) is not an obligation";
  out.notes.push_back(note.str());
  return out;
}

KunnethReport kunneth_check(const TruncSimplicialAb& x, const TruncSimplicialAb& y,
                            int n) {
  int T = std::min(x.T, y.T);
  if (n < 0 || n > T - 2)
    throw BaerError(Errc::DegreeOutOfRange, "kunneth_check needs 0 <= n <= T-2");
  KunnethReport rep;
  TruncSimplicialAb prod = tensor_diagonal(x, y, n + 2);
  rep.via_simplicial = homotopy(prod, n);
  MooreComplex mx = moore_complex(x);
  MooreComplex my = moore_complex(y);
  rep.via_moore_tensor = chain_homology(tensor_complex(mx.complex, my.complex, n + 1), n);
  // Kuenneth expansion from homotopy groups (valid degrees only)
  FgAbGroup acc = FgAbGroup::trivial();
  for (int i = 0; i <= n; ++i)
    acc = ab::direct_sum(acc, ab::tensor(homotopy(x, i), homotopy(y, n - i)));
  for (int i = 0; i <= n - 1; ++i)
    acc = ab::direct_sum(acc, ab::tor(homotopy(x, i), homotopy(y, n - 1 - i)));
  rep.via_formula = acc;
  rep.all_agree = rep.via_simplicial.same_canonical(rep.via_moore_tensor) &&
                  rep.via_simplicial.same_canonical(rep.via_formula);
  return rep;
}

}  // namespace baerlab::simp
