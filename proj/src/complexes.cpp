#include "artifact/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace artifact {

namespace {
const FgAbGroup &trivial_group() {
  static const FgAbGroup g;
  return g;
}

std::vector<Int> dense_column(const std::vector<SparseVec> &cols, int j, int n) {
  std::vector<Int> v(n);
  for (const auto &[i, x] : cols[j]) v[i] = x;
  return v;
}

// matrix whose columns are the coordinates of the columns of m in a kernel
Matrix lift_into_kernel(const Matrix &m, const KernelResult &k) {
  auto cols = m.columns();
  std::vector<SparseVec> out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto z = k.to_coords(dense_column(cols, static_cast<int>(j), m.rows()));
    for (int i = 0; i < static_cast<int>(z.size()); ++i)
      if (!z[i].is_zero()) out[j].emplace_back(i, z[i]);
  }
  return Matrix::from_columns(k.group.gens(), out);
}
} // namespace

// ---------------------------------------------------------------- realization

std::vector<Int> Realization::to_ambient(const std::vector<Int> &x) const {
  switch (kind) {
  case Kind::direct: return ambient.reduce(x);
  case Kind::sub: return sub->inclusion.apply(x);
  case Kind::quotient: return ambient.reduce(quot->section.apply(x));
  }
  return {};
}

std::vector<Int> Realization::from_ambient(const std::vector<Int> &a) const {
  switch (kind) {
  case Kind::direct: return ambient.reduce(a);
  case Kind::sub: return sub->coords(a);
  case Kind::quotient: return quot->projection.apply(a);
  }
  return {};
}

// ---------------------------------------------------------------- complexes

ChainComplex::ChainComplex(int lo, std::vector<FgAbGroup> groups, std::vector<GroupHom> diffs, bool check)
    : lo_(lo), groups_(std::move(groups)), diffs_(std::move(diffs)) {
  std::size_t want = groups_.empty() ? 0 : groups_.size() - 1;
  if (diffs_.size() != want) throw StructuralError("complex: wrong number of differentials");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!(diffs_[k].source() == groups_[k + 1]) || !(diffs_[k].target() == groups_[k]))
      throw StructuralError("complex: differential out of degree " + std::to_string(lo_ + static_cast<int>(k) + 1) +
                            " has the wrong shape");
  }
  if (check && !is_complex()) throw StructuralError("complex: differential does not square to zero");
}

const FgAbGroup &ChainComplex::group(int n) const {
  if (!in_range(n)) return trivial_group();
  return groups_[n - lo_];
}

GroupHom ChainComplex::diff(int n) const {
  if (n - 1 >= lo() && n <= hi()) return diffs_[n - lo_ - 1];
  return GroupHom::zero(group(n), group(n - 1));
}

bool ChainComplex::is_complex() const {
  for (int n = lo() + 2; n <= hi(); ++n)
    if (!compose(diff(n - 1), diff(n)).is_zero()) return false;
  return true;
}

Realization ChainComplex::realization(int n) const {
  auto it = real_.find(n);
  if (it != real_.end()) return it->second;
  Realization r;
  r.ambient = group(n);
  return r;
}

GroupHom ChainMap::at(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return GroupHom::zero(source.group(n), target.group(n));
}

ChainMap ChainMap::identity(const ChainComplex &c) {
  ChainMap f{c, c, {}};
  for (int n = c.lo(); n <= c.hi(); ++n) f.components[n] = GroupHom::identity(c.group(n));
  return f;
}

ChainMap compose(const ChainMap &g, const ChainMap &f) {
  ChainMap h{f.source, g.target, {}};
  for (int n = f.source.lo(); n <= f.source.hi(); ++n) h.components[n] = compose(g.at(n), f.at(n));
  return h;
}

ChainMap operator-(const ChainMap &f, const ChainMap &g) {
  ChainMap h{f.source, f.target, {}};
  for (int n = f.source.lo(); n <= f.source.hi(); ++n) h.components[n] = f.at(n) - g.at(n);
  return h;
}

GroupHom ChainHomotopy::at(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return GroupHom::zero(f.source.group(n), f.target.group(n + 1));
}

// ---------------------------------------------------------------- double complexes

DoubleComplex::DoubleComplex(int p0, int p1, int q0, int q1) : p0_(p0), p1_(p1), q0_(q0), q1_(q1) {
  if (p1 < p0 || q1 < q0) throw StructuralError("double complex: empty or infinite index rectangle");
  std::size_t n = static_cast<std::size_t>(p1 - p0 + 1) * static_cast<std::size_t>(q1 - q0 + 1);
  groups_.resize(n);
  h_.resize(n);
  v_.resize(n);
}

int DoubleComplex::idx(int p, int q) const { return (p - p0_) * (q1_ - q0_ + 1) + (q - q0_); }

const FgAbGroup &DoubleComplex::group(int p, int q) const {
  if (p < p0_ || p > p1_ || q < q0_ || q > q1_) return trivial_group();
  return groups_[idx(p, q)];
}

void DoubleComplex::set_group(int p, int q, FgAbGroup g) {
  if (p < p0_ || p > p1_ || q < q0_ || q > q1_) throw StructuralError("double complex: index out of range");
  groups_[idx(p, q)] = std::move(g);
}

GroupHom DoubleComplex::horizontal(int p, int q) const {
  if (p >= p0_ && p <= p1_ && q >= q0_ && q <= q1_ && h_[idx(p, q)]) return *h_[idx(p, q)];
  return GroupHom::zero(group(p, q), group(p, q - 1));
}

GroupHom DoubleComplex::vertical(int p, int q) const {
  if (p >= p0_ && p <= p1_ && q >= q0_ && q <= q1_ && v_[idx(p, q)]) return *v_[idx(p, q)];
  return GroupHom::zero(group(p, q), group(p - 1, q));
}

void DoubleComplex::set_horizontal(int p, int q, GroupHom h) {
  if (!(h.source() == group(p, q)) || !(h.target() == group(p, q - 1)))
    throw StructuralError("double complex: horizontal map has the wrong shape");
  h_[idx(p, q)] = std::make_unique<GroupHom>(std::move(h));
}

void DoubleComplex::set_vertical(int p, int q, GroupHom v) {
  if (!(v.source() == group(p, q)) || !(v.target() == group(p - 1, q)))
    throw StructuralError("double complex: vertical map has the wrong shape");
  v_[idx(p, q)] = std::make_unique<GroupHom>(std::move(v));
}

bool DoubleComplex::check(std::string *why) const {
  auto fail = [&](const std::string &m, int p, int q) {
    if (why) *why = m + " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
    return false;
  };
  for (int p = p0_; p <= p1_; ++p)
    for (int q = q0_; q <= q1_; ++q) {
      if (!compose(horizontal(p, q - 1), horizontal(p, q)).is_zero()) return fail("horizontal square nonzero", p, q);
      if (!compose(vertical(p - 1, q), vertical(p, q)).is_zero()) return fail("vertical square nonzero", p, q);
      if (!(compose(vertical(p, q - 1), horizontal(p, q)) == compose(horizontal(p - 1, q), vertical(p, q))))
        return fail("square does not commute", p, q);
    }
  return true;
}

ChainComplex total_complex(const DoubleComplex &d, SumMode /*mode: finite, so sums and products agree*/, Truncation t) {
  std::string why;
  if (!d.check(&why)) throw StructuralError("total_complex: " + why);
  const int nlo = d.p0() + d.q0(), nhi = d.p1() + d.q1();
  std::vector<DirectSum> sums;
  std::vector<std::vector<int>> pieces; // p values present in each degree
  for (int n = nlo; n <= nhi; ++n) {
    std::vector<FgAbGroup> parts;
    std::vector<int> ps;
    for (int p = d.p0(); p <= d.p1(); ++p) {
      int q = n - p;
      if (q < d.q0() || q > d.q1()) continue;
      ps.push_back(p);
      FgAbGroup g = d.group(p, q);
      std::vector<std::string> labels;
      for (int i = 0; i < g.gens(); ++i) labels.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")" + g.label(i));
      parts.push_back(g.with_labels(labels));
    }
    sums.push_back(make_direct_sum(parts));
    pieces.push_back(ps);
  }
  std::vector<FgAbGroup> groups;
  for (auto &s : sums) groups.push_back(s.group);
  std::vector<GroupHom> diffs;
  for (int n = nlo + 1; n <= nhi; ++n) {
    const DirectSum &src = sums[n - nlo], &dst = sums[n - 1 - nlo];
    Matrix m(dst.concat_dim, src.concat_dim);
    auto offset_in = [&](int deg, int p) {
      const auto &ps = pieces[deg - nlo];
      auto it = std::find(ps.begin(), ps.end(), p);
      return it == ps.end() ? -1 : sums[deg - nlo].offsets[it - ps.begin()];
    };
    for (std::size_t k = 0; k < pieces[n - nlo].size(); ++k) {
      int p = pieces[n - nlo][k], q = n - p;
      int so = src.offsets[k];
      int vo = offset_in(n - 1, p - 1);
      if (vo >= 0 && p - 1 >= d.p0()) m.add_block(vo, so, d.vertical(p, q).matrix());
      int ho = offset_in(n - 1, p);
      if (ho >= 0 && q - 1 >= d.q0()) {
        Matrix h = d.horizontal(p, q).matrix();
        m.add_block(ho, so, (p % 2 == 0) ? h : -h);
      }
    }
    Matrix conv = src.trivial_basis && dst.trivial_basis ? m : dst.to_canonical * m * src.from_canonical;
    diffs.emplace_back(groups[n - nlo], groups[n - 1 - nlo], conv, false);
  }

  auto direct = [&](int n) {
    Realization r;
    r.ambient = groups[n - nlo];
    return r;
  };

  if (t == Truncation::none) {
    ChainComplex c(nlo, groups, diffs);
    for (int n = nlo; n <= nhi; ++n) c.set_realization(n, direct(n));
    return c;
  }
  if (t == Truncation::nonneg) {
    if (nhi < 0) return ChainComplex();
    int lo = std::max(nlo, 0);
    std::vector<FgAbGroup> g;
    std::vector<GroupHom> dd;
    auto diff_out = [&](int n) { return diffs[n - nlo - 1]; };
    std::shared_ptr<KernelResult> ker;
    if (lo == 0 && nlo < 0) {
      ker = std::make_shared<KernelResult>(hom_kernel(diff_out(0)));
      g.push_back(ker->group);
    } else {
      g.push_back(groups[lo - nlo]);
    }
    for (int n = lo + 1; n <= nhi; ++n) {
      g.push_back(groups[n - nlo]);
      if (n == 1 && ker)
        dd.emplace_back(groups[n - nlo], ker->group, lift_into_kernel(diff_out(1).matrix(), *ker), false);
      else
        dd.push_back(diff_out(n));
    }
    ChainComplex c(lo, g, dd);
    for (int n = lo; n <= nhi; ++n) c.set_realization(n, direct(n));
    if (ker) {
      Realization r;
      r.kind = Realization::Kind::sub;
      r.ambient = groups[0 - nlo];
      r.sub = ker;
      c.set_realization(0, r);
    }
    return c;
  }
  // nonpos
  if (nlo > 0) return ChainComplex();
  int hi = std::min(nhi, 0);
  std::vector<FgAbGroup> g;
  std::vector<GroupHom> dd;
  std::shared_ptr<CokernelResult> cok;
  if (hi == 0 && nhi > 0) cok = std::make_shared<CokernelResult>(hom_cokernel(diffs[1 - nlo - 1]));
  for (int n = nlo; n <= hi; ++n) {
    g.push_back(n == 0 && cok ? cok->group : groups[n - nlo]);
    if (n > nlo) {
      const GroupHom &dn = diffs[n - nlo - 1];
      if (n == 0 && cok)
        dd.emplace_back(cok->group, groups[n - 1 - nlo], dn.matrix() * cok->section, false);
      else
        dd.push_back(dn);
    }
  }
  ChainComplex c(nlo, g, dd);
  for (int n = nlo; n <= hi; ++n) c.set_realization(n, direct(n));
  if (cok) {
    Realization r;
    r.kind = Realization::Kind::quotient;
    r.ambient = groups[0 - nlo];
    r.quot = cok;
    c.set_realization(0, r);
  }
  return c;
}

// ---------------------------------------------------------------- homology

std::vector<Int> HomologyAt::class_of(const std::vector<Int> &cycle) const {
  return classes->projection.apply(cycles->coords(cycle));
}

std::vector<Int> HomologyAt::representative(int gen) const {
  auto col = classes->section.column(gen);
  std::vector<Int> z(cycles->group.gens());
  for (const auto &[i, v] : col) z[i] = v;
  return cycles->inclusion.apply(z);
}

HomologyAt homology_at(const ChainComplex &c, int n) {
  HomologyAt h;
  h.degree = n;
  auto cyc = std::make_shared<KernelResult>(hom_kernel(c.diff(n)));
  GroupHom din = c.diff(n + 1);
  GroupHom lifted(din.source(), cyc->group, lift_into_kernel(din.matrix(), *cyc), false);
  auto cls = std::make_shared<CokernelResult>(hom_cokernel(lifted));
  h.group = cls->group;
  h.cycles = cyc;
  h.classes = cls;
  return h;
}

std::map<int, FgAbGroup> homology(const ChainComplex &c) {
  if (!c.is_complex()) throw StructuralError("homology: differential does not square to zero");
  std::map<int, FgAbGroup> h;
  for (int n = c.lo(); n <= c.hi(); ++n) h[n] = homology_at(c, n).group;
  return h;
}

std::string homology_report(const std::map<int, FgAbGroup> &h) {
  std::ostringstream os;
  for (const auto &[n, g] : h) os << "H_" << n << " = " << g.str() << "\n";
  return os.str();
}

// ---------------------------------------------------------------- maps

bool verify_chain_map(const ChainMap &f, std::string *why) {
  const auto &C = f.source;
  const auto &D = f.target;
  int lo = std::min(C.lo(), D.lo()), hi = std::max(C.hi(), D.hi());
  for (int n = lo; n <= hi; ++n) {
    GroupHom fn = f.at(n);
    if (!(fn.source() == C.group(n)) || !(fn.target() == D.group(n)))
      throw StructuralError("chain map component in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = lo; n <= hi + 1; ++n) {
    if (!(compose(D.diff(n), f.at(n)) == compose(f.at(n - 1), C.diff(n)))) {
      if (why) *why = "chain map does not commute with differentials out of degree " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool verify_homotopy(const ChainHomotopy &h, std::string *why) {
  const auto &C = h.f.source;
  const auto &D = h.f.target;
  if (!(h.g.source.lo() == C.lo() && h.g.source.hi() == C.hi() && h.g.target.lo() == D.lo() && h.g.target.hi() == D.hi()))
    throw StructuralError("homotopy between maps with different source or target");
  int lo = std::min(C.lo(), D.lo()) - 1, hi = std::max(C.hi(), D.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    GroupHom hn = h.at(n);
    if (!(hn.source() == C.group(n)) || !(hn.target() == D.group(n + 1)))
      throw StructuralError("homotopy component in degree " + std::to_string(n) + " has the wrong shape");
  }
  for (int n = lo; n <= hi; ++n) {
    GroupHom lhs = h.f.at(n) - h.g.at(n);
    GroupHom rhs = compose(D.diff(n + 1), h.at(n)) + compose(h.at(n - 1), C.diff(n));
    if (!(lhs == rhs)) {
      if (why) *why = "f - g differs from dh + hd in degree " + std::to_string(n);
      return false;
    }
  }
  return true;
}

ChainComplex mapping_cone(const ChainMap &f) {
  const auto &C = f.source;
  const auto &D = f.target;
  int lo = std::min(C.lo() + 1, D.lo()), hi = std::max(C.hi() + 1, D.hi());
  std::vector<DirectSum> sums;
  for (int n = lo; n <= hi; ++n) sums.push_back(make_direct_sum({C.group(n - 1), D.group(n)}));
  std::vector<FgAbGroup> groups;
  for (auto &s : sums) groups.push_back(s.group);
  std::vector<GroupHom> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const auto &src = sums[n - lo];
    const auto &dst = sums[n - 1 - lo];
    Matrix m(dst.concat_dim, src.concat_dim);
    int cdst = dst.offsets[1], csrc = src.offsets[1];
    m.add_block(0, 0, -C.diff(n - 1).matrix());
    m.add_block(cdst, 0, f.at(n - 1).matrix());
    m.add_block(cdst, csrc, D.diff(n).matrix());
    Matrix conv = dst.to_canonical * m * src.from_canonical;
    diffs.emplace_back(groups[n - lo], groups[n - 1 - lo], conv, false);
  }
  return ChainComplex(lo, groups, diffs);
}

GroupHom induced_map(const ChainMap &f, int n) {
  HomologyAt hc = homology_at(f.source, n);
  HomologyAt hd = homology_at(f.target, n);
  std::vector<SparseVec> cols;
  GroupHom fn = f.at(n);
  for (int g = 0; g < hc.group.gens(); ++g) {
    auto img = fn.apply(hc.representative(g));
    auto cls = hd.class_of(img);
    SparseVec col;
    for (int i = 0; i < static_cast<int>(cls.size()); ++i)
      if (!cls[i].is_zero()) col.emplace_back(i, cls[i]);
    cols.push_back(col);
  }
  return GroupHom(hc.group, hd.group, Matrix::from_columns(hd.group.gens(), cols));
}

bool quasi_iso_check(const ChainMap &f) {
  std::string why;
  if (!verify_chain_map(f, &why)) throw StructuralError("quasi_iso_check on an unverified chain map: " + why);
  int lo = std::min(f.source.lo(), f.target.lo()), hi = std::max(f.source.hi(), f.target.hi());
  bool induced = true;
  for (int n = lo; n <= hi && induced; ++n) induced = is_isomorphism(induced_map(f, n));
  ChainComplex cone = mapping_cone(f);
  bool acyclic = true;
  for (const auto &[n, g] : homology(cone))
    if (!g.is_trivial()) acyclic = false;
  if (induced != acyclic) throw std::logic_error("quasi_iso_check: induced maps and mapping cone disagree");
  return induced;
}

} // namespace artifact
