#include "baerlab/fg_ab.hpp"

#include <algorithm>
#include <sstream>

namespace baerlab::ab {

FgAbGroup::FgAbGroup() : relations_(IntMatrix::zeros(0, 0)) {}

FgAbGroup::FgAbGroup(IntMatrix relations) : relations_(std::move(relations)) {
  std::vector<Int> diag = smith_diagonal(relations_);
  rank_ = gens() - static_cast<int>(diag.size());
  for (auto& d : diag)
    if (d >= 2) factors_.push_back(d);
}

FgAbGroup FgAbGroup::free_group(int n) { return FgAbGroup(IntMatrix::zeros(n, 0)); }

FgAbGroup FgAbGroup::from_invariants(int rank, const std::vector<Int>& factors) {
  int k = static_cast<int>(factors.size());
  IntMatrix rel = IntMatrix::zeros(rank + k, k);
  for (int i = 0; i < k; ++i) rel.set(i, i, factors[i]);
  return FgAbGroup(rel);
}

FgAbGroup FgAbGroup::trivial() { return FgAbGroup(IntMatrix::zeros(0, 0)); }

Int FgAbGroup::order() const {
  if (!is_finite()) throw BaerError(Errc::InvalidArgument, "order of infinite group");
  Int o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string FgAbGroup::canonical_str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z";
    if (rank_ > 1) os << "^" << rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a.same_canonical(b); }

SmithCoords smith_coords(const FgAbGroup& g) {
  SmithLeft sl = smith_left(g.relations());
  SmithCoords sc;
  sc.to_smith = sl.u;
  sc.from_smith = sl.u_inv;
  int n = g.gens();
  int k = static_cast<int>(sl.diag.size());
  for (int i = 0; i < k; ++i) {
    if (sl.diag[i] == 1) {
      sc.unit_rows.push_back(i);
    } else {
      sc.torsion_rows.push_back(i);
      sc.torsion_orders.push_back(sl.diag[i]);
    }
  }
  for (int i = k; i < n; ++i) sc.free_rows.push_back(i);
  return sc;
}

std::vector<Int> SmithCoords::canonical_of(const std::vector<Int>& gen_coords) const {
  std::vector<Int> smith = to_smith.apply(gen_coords);
  std::vector<Int> out;
  out.reserve(torsion_rows.size() + free_rows.size());
  for (std::size_t i = 0; i < torsion_rows.size(); ++i) {
    Int v = smith[torsion_rows[i]] % torsion_orders[i];
    if (v < 0) v += torsion_orders[i];
    out.push_back(v);
  }
  for (int r : free_rows) out.push_back(smith[r]);
  return out;
}

std::vector<Int> SmithCoords::gen_coords_of(const std::vector<Int>& canonical) const {
  std::vector<Int> smith(to_smith.rows(), Int(0));
  for (std::size_t i = 0; i < torsion_rows.size(); ++i)
    smith[torsion_rows[i]] = canonical[i];
  for (std::size_t i = 0; i < free_rows.size(); ++i)
    smith[free_rows[i]] = canonical[torsion_rows.size() + i];
  return from_smith.apply(smith);
}

AbHom::AbHom() : src_(), dst_(), mat_(IntMatrix::zeros(0, 0)) {}

AbHom::AbHom(FgAbGroup src, FgAbGroup dst, IntMatrix mat)
    : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
  if (mat_.rows() != dst_.gens() || mat_.cols() != src_.gens())
    throw BaerError(Errc::IllDefinedHom, "hom matrix has wrong shape");
  if (src_.relations().cols() > 0) {
    IntMatrix mapped = mat_ * src_.relations();
    if (!lattice_contains(dst_.relations(), mapped))
      throw BaerError(Errc::IllDefinedHom,
                      "hom does not map source relations into target relations");
  }
}

AbHom AbHom::identity(const FgAbGroup& g) {
  return AbHom(g, g, IntMatrix::identity(g.gens()));
}

AbHom AbHom::zero(const FgAbGroup& src, const FgAbGroup& dst) {
  return AbHom(src, dst, IntMatrix::zeros(dst.gens(), src.gens()));
}

AbHom AbHom::after(const AbHom& inner) const {
  if (inner.dst().gens() != src_.gens())
    throw BaerError(Errc::IllDefinedHom, "composition shape mismatch");
  return AbHom(inner.src(), dst_, mat_ * inner.matrix());
}

AbHom AbHom::plus(const AbHom& o) const { return AbHom(src_, dst_, mat_ + o.mat_); }
AbHom AbHom::minus(const AbHom& o) const { return AbHom(src_, dst_, mat_ - o.mat_); }

bool AbHom::same_map(const AbHom& o) const {
  if (src_.gens() != o.src_.gens() || dst_.gens() != o.dst_.gens()) return false;
  IntMatrix diff = mat_ - o.mat_;
  if (diff.is_zero()) return true;
  return lattice_contains(dst_.relations(), diff);
}

bool AbHom::is_zero_map() const {
  if (mat_.is_zero()) return true;
  return lattice_contains(dst_.relations(), mat_);
}

HomParts hom_parts(const AbHom& f) {
  const FgAbGroup& A = f.src();
  const FgAbGroup& B = f.dst();
  // Columns (x; y) of ker[F | R_B] have F x = -R_B y, so the x-blocks
  // generate the full preimage P of the relation lattice of B.
  IntMatrix k_big = kernel_basis(f.matrix().hstack(B.relations()));
  IntMatrix P = k_big.top_rows(A.gens());

  // image = A / P, on the generators f(e_i)
  FgAbGroup image(P);
  AbHom image_incl(image, B, f.matrix());
  AbHom image_proj(A, image, IntMatrix::identity(A.gens()));

  // kernel = P / col(R_A), on the columns of P as generators
  IntMatrix kr = kernel_basis(P.hstack(A.relations())).top_rows(P.cols());
  FgAbGroup kernel(kr);
  AbHom kernel_incl(kernel, A, P);

  FgAbGroup cokernel(f.matrix().hstack(B.relations()));
  AbHom coker_proj(B, cokernel, IntMatrix::identity(B.gens()));

  if (A.rank() != kernel.rank() + image.rank())
    throw BaerError(Errc::Inconsistent, "hom_parts: rank-nullity violated");
  return HomParts{std::move(kernel), std::move(kernel_incl), std::move(image),
                  std::move(image_incl), std::move(image_proj), std::move(cokernel),
                  std::move(coker_proj)};
}

AbHom factor_through(const AbHom& inc, const AbHom& g) {
  if (inc.dst().gens() != g.dst().gens())
    throw BaerError(Errc::IllDefinedHom, "factor_through: ambient mismatch");
  auto x = solve_columns_mod(inc.matrix(), inc.dst().relations(), g.matrix());
  if (!x)
    throw BaerError(Errc::Inconsistent,
                    "factor_through: map does not land in the subgroup");
  return AbHom(g.src(), inc.src(), *x);
}

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b) {
  int ga = a.gens(), gb = b.gens();
  std::vector<Triplet> ts;
  int col = 0;
  int ncols = a.relations().cols() * gb + ga * b.relations().cols();
  for (int rc = 0; rc < a.relations().cols(); ++rc) {
    SparseCol r = a.relations().sparse_col(rc);
    for (int j = 0; j < gb; ++j) {
      for (const auto& [i, v] : r) ts.push_back({i * gb + j, col, v});
      ++col;
    }
  }
  for (int i = 0; i < ga; ++i) {
    for (int rc = 0; rc < b.relations().cols(); ++rc) {
      for (const auto& [j, v] : b.relations().sparse_col(rc))
        ts.push_back({i * gb + j, col, v});
      ++col;
    }
  }
  return FgAbGroup(IntMatrix::from_triplets(ga * gb, ncols, std::move(ts)));
}

AbHom tensor_hom(const AbHom& f, const AbHom& g) {
  FgAbGroup src = tensor_group(f.src(), g.src());
  FgAbGroup dst = tensor_group(f.dst(), g.dst());
  return AbHom(std::move(src), std::move(dst),
               IntMatrix::kronecker(f.matrix(), g.matrix()));
}

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) { return tensor_group(a, b); }

FgAbGroup tor(const FgAbGroup& a, const FgAbGroup& b) {
  // Tor kills free parts; Tor(Z/m, Z/n) = Z/gcd(m,n).
  std::vector<Int> ds;
  for (const auto& da : a.factors())
    for (const auto& db : b.factors()) {
      Int g = gcd_int(da, db);
      if (g >= 2) ds.push_back(g);
    }
  std::sort(ds.begin(), ds.end());
  IntMatrix rel = IntMatrix::zeros(static_cast<int>(ds.size()), static_cast<int>(ds.size()));
  for (int i = 0; i < static_cast<int>(ds.size()); ++i) rel.set(i, i, ds[i]);
  return FgAbGroup(rel);
}

DirectSum direct_sum_full(const FgAbGroup& a, const FgAbGroup& b) {
  int ga = a.gens(), gb = b.gens();
  int ra = a.relations().cols(), rb = b.relations().cols();
  std::vector<Triplet> ts;
  for (int c = 0; c < ra; ++c)
    for (const auto& [i, v] : a.relations().sparse_col(c)) ts.push_back({i, c, v});
  for (int c = 0; c < rb; ++c)
    for (const auto& [i, v] : b.relations().sparse_col(c))
      ts.push_back({ga + i, ra + c, v});
  FgAbGroup sum(IntMatrix::from_triplets(ga + gb, ra + rb, std::move(ts)));

  IntMatrix ia = IntMatrix::zeros(ga + gb, ga);
  for (int i = 0; i < ga; ++i) ia.set(i, i, 1);
  IntMatrix ib = IntMatrix::zeros(ga + gb, gb);
  for (int i = 0; i < gb; ++i) ib.set(ga + i, i, 1);
  IntMatrix pa = IntMatrix::zeros(ga, ga + gb);
  for (int i = 0; i < ga; ++i) pa.set(i, i, 1);
  IntMatrix pb = IntMatrix::zeros(gb, ga + gb);
  for (int i = 0; i < gb; ++i) pb.set(i, ga + i, 1);

  AbHom inj_a(a, sum, std::move(ia));
  AbHom inj_b(b, sum, std::move(ib));
  AbHom proj_a(sum, a, std::move(pa));
  AbHom proj_b(sum, b, std::move(pb));
  return DirectSum{std::move(sum), std::move(inj_a), std::move(inj_b),
                   std::move(proj_a), std::move(proj_b)};
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return direct_sum_full(a, b).group;
}

FgAbGroup exterior_square(const FgAbGroup& a) {
  // On a Smith basis x_1..x_n with orders d_i (0 = infinite), Λ² is
  // presented by generators x_i ∧ x_j (i < j) with d_i and d_j killing the
  // pair; Λ² of a cyclic summand vanishes.
  std::vector<Int> orders;
  for (const auto& d : a.factors()) orders.push_back(d);
  for (int i = 0; i < a.rank(); ++i) orders.push_back(0);
  int n = static_cast<int>(orders.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Triplet> ts;
  int col = 0;
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    auto [i, j] = pairs[p];
    if (orders[i] != 0) ts.push_back({p, col++, orders[i]});
    if (orders[j] != 0) ts.push_back({p, col++, orders[j]});
  }
  return FgAbGroup(
      IntMatrix::from_triplets(static_cast<int>(pairs.size()), col, std::move(ts)));
}

bool same_subgroup(const AbHom& inc_a, const AbHom& inc_b) {
  if (inc_a.dst().gens() != inc_b.dst().gens()) return false;
  const IntMatrix& rel = inc_a.dst().relations();
  bool a_in_b =
      solve_columns_mod(inc_b.matrix(), rel, inc_a.matrix()).has_value();
  bool b_in_a =
      solve_columns_mod(inc_a.matrix(), rel, inc_b.matrix()).has_value();
  return a_in_b && b_in_a;
}

}  // namespace baerlab::ab
