#include "artifact/abelian.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace artifact {

// ---------------------------------------------------------------- groups

FgAbGroup::FgAbGroup(int free_rank, std::vector<Int> torsion, std::vector<std::string> labels)
    : free_rank_(free_rank), torsion_(std::move(torsion)), labels_(std::move(labels)) {
  if (free_rank_ < 0) throw std::invalid_argument("negative free rank");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < Int(2)) throw std::invalid_argument("invariant factor below 2");
    if (i && !(torsion_[i] % torsion_[i - 1]).is_zero())
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != gens())
    throw std::invalid_argument("label count does not match generator count");
}

FgAbGroup FgAbGroup::free(int r, std::vector<std::string> labels) { return FgAbGroup(r, {}, std::move(labels)); }

FgAbGroup FgAbGroup::cyclic(const Int &d) {
  if (d.is_zero()) return free(1);
  if (abs(d).is_one()) return FgAbGroup();
  return FgAbGroup(0, {abs(d)});
}

FgAbGroup FgAbGroup::homogeneous(int n, const Int &order, std::vector<std::string> labels) {
  if (order.is_zero()) return FgAbGroup(n, {}, std::move(labels));
  return FgAbGroup(0, std::vector<Int>(n, order), std::move(labels));
}

FgAbGroup FgAbGroup::with_labels(std::vector<std::string> labels) const {
  return FgAbGroup(free_rank_, torsion_, std::move(labels));
}

std::string FgAbGroup::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels_.size())) return labels_[i];
  return "g" + std::to_string(i);
}

Int FgAbGroup::order_of(int i) const {
  if (i < free_rank_) return Int(0);
  return torsion_.at(i - free_rank_);
}

std::vector<Int> FgAbGroup::orders() const {
  std::vector<Int> o(free_rank_, Int(0));
  o.insert(o.end(), torsion_.begin(), torsion_.end());
  return o;
}

Int FgAbGroup::exponent() const {
  if (free_rank_ > 0) return Int(0);
  return torsion_.empty() ? Int(1) : torsion_.back();
}

std::vector<Int> FgAbGroup::reduce(std::vector<Int> coords) const {
  if (static_cast<int>(coords.size()) != gens()) throw std::invalid_argument("coordinate count mismatch");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    auto &c = coords[free_rank_ + i];
    c = mod(c, torsion_[i]);
  }
  return coords;
}

std::string FgAbGroup::str() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto &d : torsion_) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

FgAbGroup direct_sum(const std::vector<FgAbGroup> &parts) {
  // only valid when the concatenation is already canonical
  int r = 0;
  std::vector<Int> t;
  std::vector<std::string> labels;
  bool all_labeled = true;
  for (const auto &p : parts) {
    if (r > 0 && p.free_rank() > 0 && !t.empty())
      throw std::invalid_argument("direct_sum: free part after torsion");
    r += p.free_rank();
    t.insert(t.end(), p.invariant_factors().begin(), p.invariant_factors().end());
    if (p.labels().empty() && p.gens() > 0) all_labeled = false;
    labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  }
  return FgAbGroup(r, t, all_labeled ? labels : std::vector<std::string>{});
}

GroupElement::GroupElement(FgAbGroup g, std::vector<Int> c) : group(std::move(g)), coords(group.reduce(std::move(c))) {}

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int &x) { return x.is_zero(); });
}

// ---------------------------------------------------------------- homs

void GroupHom::check_well_defined(const FgAbGroup &s, const FgAbGroup &t, const Matrix &m) {
  if (m.rows() != t.gens() || m.cols() != s.gens())
    throw StructuralError("homomorphism matrix has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(t.gens()) + "x" +
                          std::to_string(s.gens()));
  for (int i = 0; i < m.rows(); ++i) {
    Int ti = t.order_of(i);
    for (const auto &[j, v] : m.row(i)) {
      Int sj = s.order_of(j);
      if (sj.is_zero()) continue;
      Int w = v * sj;
      bool ok = ti.is_zero() ? w.is_zero() : (w % ti).is_zero();
      if (!ok)
        throw StructuralError("homomorphism not well defined on torsion: generator " + std::to_string(j) +
                              " of order " + sj.str() + " has image coordinate " + v.str() + " in row " +
                              std::to_string(i));
    }
  }
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, Matrix m, bool check)
    : source_(std::move(source)), target_(std::move(target)) {
  if (check) check_well_defined(source_, target_, m);
  m_ = m.reduced_rows(target_.orders());
}

GroupHom GroupHom::identity(const FgAbGroup &g) { return GroupHom(g, g, Matrix::identity(g.gens()), false); }

GroupHom GroupHom::zero(const FgAbGroup &s, const FgAbGroup &t) { return GroupHom(s, t, Matrix(t.gens(), s.gens()), false); }

std::vector<Int> GroupHom::apply(const std::vector<Int> &x) const { return target_.reduce(m_.apply(x)); }

GroupElement GroupHom::operator()(const GroupElement &x) const {
  if (!(x.group == source_)) throw StructuralError("element not in source group");
  return GroupElement(target_, m_.apply(x.coords));
}

bool GroupHom::operator==(const GroupHom &o) const {
  return source_ == o.source_ && target_ == o.target_ && m_ == o.m_;
}

GroupHom GroupHom::operator+(const GroupHom &o) const {
  if (!(source_ == o.source_ && target_ == o.target_)) throw StructuralError("sum of homs with different shapes");
  return GroupHom(source_, target_, m_ + o.m_, false);
}

GroupHom GroupHom::operator-(const GroupHom &o) const {
  if (!(source_ == o.source_ && target_ == o.target_)) throw StructuralError("difference of homs with different shapes");
  return GroupHom(source_, target_, m_ - o.m_, false);
}

GroupHom GroupHom::operator-() const { return GroupHom(source_, target_, -m_, false); }

GroupHom compose(const GroupHom &g, const GroupHom &f) {
  if (!(f.target() == g.source())) throw StructuralError("compose: target/source mismatch");
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix(), false);
}

// ---------------------------------------------------------------- normal forms

namespace {

struct Raw {
  std::vector<Int> orders;     // 0 = free
  std::vector<SparseVec> proj; // one row (over old coordinates) per generator
  std::vector<SparseVec> sec;  // one column (over old coordinates) per generator
};

Matrix rows_to_matrix(const std::vector<SparseVec> &rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row_mut(static_cast<int>(i)) = rows[i];
  return m;
}

// Put a raw list of cyclic generators into canonical invariant-factor form.
void canonicalize(const Raw &raw, int old_dim, FgAbGroup &G, Matrix &P, Matrix &S) {
  std::vector<int> freeidx, toridx;
  for (std::size_t i = 0; i < raw.orders.size(); ++i) {
    if (raw.orders[i].is_zero())
      freeidx.push_back(static_cast<int>(i));
    else if (!raw.orders[i].is_one())
      toridx.push_back(static_cast<int>(i));
  }
  std::stable_sort(toridx.begin(), toridx.end(),
                   [&](int a, int b) { return raw.orders[a] < raw.orders[b]; });
  bool chain = true;
  for (std::size_t k = 1; k < toridx.size(); ++k)
    if (!(raw.orders[toridx[k]] % raw.orders[toridx[k - 1]]).is_zero()) chain = false;

  std::vector<int> order = freeidx;
  order.insert(order.end(), toridx.begin(), toridx.end());
  std::vector<SparseVec> prow, scol;
  std::vector<Int> tors;
  for (int i : order) {
    prow.push_back(raw.proj[i]);
    scol.push_back(raw.sec[i]);
  }
  for (int i : toridx) tors.push_back(raw.orders[i]);
  Matrix P0 = rows_to_matrix(prow, old_dim);
  Matrix S0 = Matrix::from_columns(old_dim, scol);
  if (chain) {
    G = FgAbGroup(static_cast<int>(freeidx.size()), tors);
    P = P0.reduced_rows(G.orders());
    S = S0;
    return;
  }
  std::vector<Int> ords(freeidx.size(), Int(0));
  ords.insert(ords.end(), tors.begin(), tors.end());
  DiagonalNormalization dn = normalize_diagonal(ords);
  G = dn.group;
  P = (dn.projection * P0).reduced_rows(G.orders());
  S = S0 * dn.section;
}

} // namespace

DiagonalNormalization normalize_diagonal(const std::vector<Int> &orders) {
  int k = static_cast<int>(orders.size());
  Matrix R = Matrix::diagonal(orders);
  ElimOptions opt;
  opt.chain = true;
  opt.want_U = opt.want_Uinv = true;
  Elimination e = eliminate(R, opt);
  int r = static_cast<int>(e.pivots.size());
  std::vector<int> keep_free, keep_tor;
  for (int i = r; i < k; ++i) keep_free.push_back(i);
  for (int i = 0; i < r; ++i)
    if (!e.pivots[i].is_one()) keep_tor.push_back(i);
  DiagonalNormalization dn;
  std::vector<Int> tors;
  for (int i : keep_tor) tors.push_back(e.pivots[i]);
  dn.group = FgAbGroup(static_cast<int>(keep_free.size()), tors);
  std::vector<SparseVec> prow, scol;
  for (int i : keep_free) {
    prow.push_back(e.U_rows[i]);
    scol.push_back(e.Uinv_cols[i]);
  }
  for (int i : keep_tor) {
    prow.push_back(e.U_rows[i]);
    scol.push_back(e.Uinv_cols[i]);
  }
  dn.projection = rows_to_matrix(prow, k).reduced_rows(dn.group.orders());
  dn.section = Matrix::from_columns(k, scol);
  return dn;
}

CokernelResult hom_cokernel(const GroupHom &f) {
  const FgAbGroup &B = f.target();
  const int m = B.gens();
  CokernelResult res;
  if (f.is_zero()) {
    res.group = B;
    res.projection = GroupHom::identity(B);
    res.section = Matrix::identity(m);
    return res;
  }
  Raw raw;
  if (B.is_torsion()) {
    Int q = B.exponent();
    std::vector<SparseVec> extra;
    for (int i = 0; i < m; ++i)
      if (B.order_of(i) != q) extra.push_back(SparseVec{{i, B.order_of(i)}});
    Matrix M = Matrix::hstack(f.matrix(), Matrix::from_columns(m, extra));
    ElimOptions opt;
    opt.modulus = q;
    opt.chain = false;
    opt.reduce_accumulators = true;
    opt.want_U = opt.want_Uinv = true;
    Elimination e = eliminate(M, opt);
    int r = static_cast<int>(e.pivots.size());
    for (int i = 0; i < m; ++i) {
      raw.orders.push_back(i < r ? gcd(e.pivots[i], q) : q);
      raw.proj.push_back(e.U_rows[i]);
      raw.sec.push_back(e.Uinv_cols[i]);
    }
  } else {
    std::vector<SparseVec> extra;
    for (int i = 0; i < m; ++i)
      if (!B.order_of(i).is_zero()) extra.push_back(SparseVec{{i, B.order_of(i)}});
    Matrix M = Matrix::hstack(f.matrix(), Matrix::from_columns(m, extra));
    ElimOptions opt;
    opt.chain = true;
    opt.want_U = opt.want_Uinv = true;
    Elimination e = eliminate(M, opt);
    int r = static_cast<int>(e.pivots.size());
    for (int i = 0; i < m; ++i) {
      raw.orders.push_back(i < r ? e.pivots[i] : Int(0));
      raw.proj.push_back(e.U_rows[i]);
      raw.sec.push_back(e.Uinv_cols[i]);
    }
  }
  Matrix P, S;
  canonicalize(raw, m, res.group, P, S);
  res.projection = GroupHom(B, res.group, P, false);
  res.section = S;
  return res;
}

namespace {

using CoordFn = std::function<std::vector<Int>(const std::vector<Int> &)>;

// Quotient a kernel given by generators of known orders by extra relations
// (given as source elements that lie in the kernel) and finish it.
KernelResult finish_kernel(const GroupHom &f, const std::vector<SparseVec> &gens,
                           const std::vector<Int> &gen_orders, CoordFn pre,
                           const std::vector<std::vector<Int>> &relations) {
  const FgAbGroup &A = f.source();
  const int n = A.gens();
  const int k = static_cast<int>(gens.size());

  // presentation Z^k / (diag(gen_orders) + relations)
  std::vector<SparseVec> relcols;
  for (int i = 0; i < k; ++i)
    if (!gen_orders[i].is_zero()) relcols.push_back(SparseVec{{i, gen_orders[i]}});
  for (const auto &rel : relations) {
    std::vector<Int> z = pre(rel);
    SparseVec col;
    for (int i = 0; i < k; ++i)
      if (!z[i].is_zero()) col.emplace_back(i, z[i]);
    if (!col.empty()) relcols.push_back(col);
  }
  Matrix G = Matrix::from_columns(n, gens);
  KernelResult res;
  res.map = f;
  Matrix P, S;
  if (relations.empty()) {
    Raw raw;
    raw.orders = gen_orders;
    for (int i = 0; i < k; ++i) {
      raw.proj.push_back(SparseVec{{i, Int(1)}});
      raw.sec.push_back(SparseVec{{i, Int(1)}});
    }
    canonicalize(raw, k, res.group, P, S);
  } else {
    GroupHom rel(FgAbGroup::free(static_cast<int>(relcols.size())), FgAbGroup::free(k),
                 Matrix::from_columns(k, relcols), false);
    CokernelResult c = hom_cokernel(rel);
    res.group = c.group;
    P = c.projection.matrix();
    S = c.section;
  }
  res.inclusion = GroupHom(res.group, A, G * S, false);
  auto Pp = std::make_shared<Matrix>(P);
  auto grp = res.group;
  res.to_coords = [pre, Pp, grp](const std::vector<Int> &x) { return grp.reduce(Pp->apply(pre(x))); };
  return res;
}

KernelResult kernel_modular(const GroupHom &f, const FgAbGroup &A, const Matrix &F) {
  // A is either entirely free or homogeneous torsion; target is torsion
  const FgAbGroup &B = f.target();
  const int n = A.gens();
  Int a = A.is_torsion() ? A.exponent() : Int(0);
  Int q = B.exponent();
  if (!a.is_zero()) q = lcm(q, a);
  std::vector<Int> scale(B.gens());
  for (int i = 0; i < B.gens(); ++i) scale[i] = q / B.order_of(i);
  Matrix Fs = F;
  for (int i = 0; i < Fs.rows(); ++i)
    for (auto &e : Fs.row_mut(i)) e.second *= scale[i];
  ElimOptions opt;
  opt.modulus = q;
  opt.chain = false;
  opt.reduce_accumulators = !a.is_zero();
  opt.want_V = opt.want_Vinv = true;
  Elimination e = eliminate(Fs, opt);
  const int r = static_cast<int>(e.pivots.size());
  std::vector<Int> lambda(n, Int(1));
  for (int i = 0; i < r; ++i) lambda[i] = q / gcd(e.pivots[i], q);

  std::vector<SparseVec> gens;
  std::vector<Int> orders;
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    Int o = a.is_zero() ? Int(0) : a / lambda[i];
    if (!a.is_zero() && o.is_one()) continue;
    SparseVec col = e.V_cols[i];
    for (auto &x : col) x.second *= lambda[i];
    if (!a.is_zero()) {
      SparseVec red;
      for (auto &[j, v] : col) {
        Int w = mod(v, a);
        if (!w.is_zero()) red.emplace_back(j, w);
      }
      col = red;
    }
    gens.push_back(col);
    orders.push_back(o);
    idx.push_back(i);
  }
  auto vinv = std::make_shared<std::vector<SparseVec>>();
  std::vector<Int> lam;
  for (int i : idx) {
    vinv->push_back(e.Vinv_rows[i]);
    lam.push_back(lambda[i]);
  }
  bool torsion = !a.is_zero();
  CoordFn pre = [vinv, lam, q, torsion](const std::vector<Int> &x) {
    std::vector<Int> z(vinv->size());
    for (std::size_t i = 0; i < vinv->size(); ++i) {
      Int y;
      for (const auto &[j, v] : (*vinv)[i])
        if (!x[j].is_zero()) y += v * x[j];
      if (torsion) y = mod(y, q);
      if (!(y % lam[i]).is_zero()) throw StructuralError("element is not in the kernel");
      z[i] = y / lam[i];
    }
    return z;
  };
  return finish_kernel(f, gens, orders, pre, {});
}

KernelResult kernel_integer(const GroupHom &f) {
  const FgAbGroup &A = f.source();
  const FgAbGroup &B = f.target();
  const int n = A.gens();
  const int m = B.gens();
  std::vector<int> trows;
  std::vector<SparseVec> extra;
  for (int i = 0; i < m; ++i)
    if (!B.order_of(i).is_zero()) {
      trows.push_back(i);
      extra.push_back(SparseVec{{i, B.order_of(i)}});
    }
  Matrix M = Matrix::hstack(f.matrix(), Matrix::from_columns(m, extra));
  ElimOptions opt;
  opt.chain = false;
  opt.want_V = opt.want_Vinv = true;
  Elimination e = eliminate(M, opt);
  const int r = static_cast<int>(e.pivots.size());
  const int N = M.cols();
  std::vector<SparseVec> gens;
  auto vinv = std::make_shared<std::vector<SparseVec>>();
  for (int i = r; i < N; ++i) {
    SparseVec col;
    for (const auto &[j, v] : e.V_cols[i])
      if (j < n) col.emplace_back(j, v);
    gens.push_back(col);
    vinv->push_back(e.Vinv_rows[i]);
  }
  std::vector<Int> orders(gens.size(), Int(0));
  auto F = std::make_shared<Matrix>(f.matrix());
  auto bord = std::make_shared<std::vector<Int>>(B.orders());
  auto tr = std::make_shared<std::vector<int>>(trows);
  CoordFn pre = [vinv, F, bord, tr](const std::vector<Int> &x) {
    std::vector<Int> w = x;
    std::vector<Int> Fx = F->apply(x);
    for (int t : *tr) {
      const Int &b = (*bord)[t];
      if (!(Fx[t] % b).is_zero()) throw StructuralError("element is not in the kernel");
      w.push_back(-(Fx[t] / b));
    }
    for (std::size_t i = 0; i < Fx.size(); ++i)
      if ((*bord)[i].is_zero() && !Fx[i].is_zero()) throw StructuralError("element is not in the kernel");
    std::vector<Int> z(vinv->size());
    for (std::size_t i = 0; i < vinv->size(); ++i)
      for (const auto &[j, v] : (*vinv)[i])
        if (!w[j].is_zero()) z[i] += v * w[j];
    return z;
  };
  std::vector<std::vector<Int>> rels;
  for (int j = 0; j < n; ++j) {
    Int o = A.order_of(j);
    if (o.is_zero()) continue;
    std::vector<Int> x(n);
    x[j] = o;
    rels.push_back(x);
  }
  return finish_kernel(f, gens, orders, pre, rels);
}

} // namespace

KernelResult hom_kernel(const GroupHom &f) {
  const FgAbGroup &A = f.source();
  const FgAbGroup &B = f.target();
  if (B.is_trivial() || f.is_zero()) {
    KernelResult res;
    res.map = f;
    res.group = A;
    res.inclusion = GroupHom::identity(A);
    res.to_coords = [A](const std::vector<Int> &x) { return A.reduce(x); };
    return res;
  }
  if (B.is_torsion()) {
    if (A.free_rank() == A.gens()) return kernel_modular(f, A, f.matrix());
    if (A.is_torsion()) {
      Int a = A.exponent();
      bool homogeneous = std::all_of(A.invariant_factors().begin(), A.invariant_factors().end(),
                                     [&](const Int &d) { return d == a; });
      if (homogeneous) return kernel_modular(f, A, f.matrix());
      // view A as a quotient of (Z/a)^n and divide out the extra relations
      FgAbGroup Ah = FgAbGroup::homogeneous(A.gens(), a);
      GroupHom fh(Ah, B, f.matrix(), false);
      KernelResult kh = kernel_modular(fh, Ah, f.matrix());
      std::vector<SparseVec> relcols;
      for (int j = 0; j < A.gens(); ++j) {
        Int o = A.order_of(j);
        if (o == a) continue;
        std::vector<Int> x(A.gens());
        x[j] = o;
        std::vector<Int> z = kh.to_coords(x);
        SparseVec col;
        for (int i = 0; i < static_cast<int>(z.size()); ++i)
          if (!z[i].is_zero()) col.emplace_back(i, z[i]);
        relcols.push_back(col);
      }
      GroupHom rel(FgAbGroup::free(static_cast<int>(relcols.size())), kh.group,
                   Matrix::from_columns(kh.group.gens(), relcols), false);
      CokernelResult c = hom_cokernel(rel);
      KernelResult res;
      res.map = f;
      res.group = c.group;
      res.inclusion = GroupHom(c.group, A, kh.inclusion.matrix() * c.section, false);
      auto proj = c.projection;
      auto inner = kh.to_coords;
      res.to_coords = [proj, inner](const std::vector<Int> &x) { return proj.apply(inner(x)); };
      return res;
    }
  }
  return kernel_integer(f);
}

std::vector<Int> KernelResult::coords(const std::vector<Int> &x) const {
  if (!contains(x)) throw StructuralError("element is not in the kernel");
  return to_coords(x);
}

bool KernelResult::contains(const std::vector<Int> &x) const {
  auto y = map.apply(x);
  return std::all_of(y.begin(), y.end(), [](const Int &v) { return v.is_zero(); });
}

FgAbGroup normalize_group(const MatrixPresentation &p) {
  if (p.relations.rows() != p.generator_count) throw std::invalid_argument("presentation shape mismatch");
  GroupHom rel(FgAbGroup::free(p.relations.cols()), FgAbGroup::free(p.generator_count), p.relations, false);
  return hom_cokernel(rel).group;
}

DirectSum make_direct_sum(const std::vector<FgAbGroup> &parts) {
  DirectSum ds;
  std::vector<Int> ords;
  std::vector<std::string> labels;
  bool all_labeled = true;
  for (const auto &p : parts) {
    ds.offsets.push_back(ds.concat_dim);
    ds.concat_dim += p.gens();
    auto o = p.orders();
    ords.insert(ords.end(), o.begin(), o.end());
    if (p.labels().empty() && p.gens() > 0) all_labeled = false;
    for (int i = 0; i < p.gens(); ++i) labels.push_back(p.label(i));
  }
  if (!all_labeled) labels.clear();
  // already canonical?
  bool canonical = true;
  int nfree = 0;
  for (std::size_t i = 0; i < ords.size(); ++i) {
    if (ords[i].is_zero()) {
      if (i != static_cast<std::size_t>(nfree)) canonical = false;
      ++nfree;
    } else if (i > 0 && !ords[i - 1].is_zero() && !(ords[i] % ords[i - 1]).is_zero()) {
      canonical = false;
    }
  }
  if (canonical) {
    std::vector<Int> tors(ords.begin() + nfree, ords.end());
    ds.group = FgAbGroup(nfree, tors, labels);
    ds.to_canonical = Matrix::identity(ds.concat_dim);
    ds.from_canonical = Matrix::identity(ds.concat_dim);
    return ds;
  }
  ds.trivial_basis = false;
  Raw raw;
  raw.orders = ords;
  for (int i = 0; i < ds.concat_dim; ++i) {
    raw.proj.push_back(SparseVec{{i, Int(1)}});
    raw.sec.push_back(SparseVec{{i, Int(1)}});
  }
  canonicalize(raw, ds.concat_dim, ds.group, ds.to_canonical, ds.from_canonical);
  // keep labels when the canonical basis is a permutation of the old one
  if (!labels.empty() && ds.group.gens() == ds.concat_dim) {
    std::vector<std::string> perm(ds.concat_dim);
    bool is_perm = true;
    auto cols = ds.from_canonical.columns();
    for (int i = 0; i < ds.concat_dim && is_perm; ++i) {
      if (cols[i].size() != 1 || !cols[i][0].second.is_one()) is_perm = false;
      else perm[i] = labels[cols[i][0].first];
    }
    if (is_perm) ds.group = ds.group.with_labels(perm);
  }
  return ds;
}

bool iso_check(const FgAbGroup &a, const FgAbGroup &b) { return a == b; }

bool is_injective(const GroupHom &f) { return hom_kernel(f).group.is_trivial(); }
bool is_surjective(const GroupHom &f) { return hom_cokernel(f).group.is_trivial(); }
bool is_isomorphism(const GroupHom &f) { return is_injective(f) && is_surjective(f); }

} // namespace artifact
