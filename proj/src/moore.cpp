#include "artifact/moore.hpp"

#include <algorithm>

namespace artifact {

namespace {
bool fail(std::string *why, const std::string &msg) {
  if (why) *why = msg;
  return false;
}

std::string idx(const char *what, int n, int i) {
  return std::string(what) + "[" + std::to_string(n) + "][" + std::to_string(i) + "]";
}

bool shapes_ok(const std::vector<FgAbGroup> &levels, const std::vector<std::vector<GroupHom>> &down,
               const std::vector<std::vector<GroupHom>> &up, bool simplicial, std::string *why) {
  int N = static_cast<int>(levels.size()) - 1;
  if (static_cast<int>(down.size()) < N + 1 || static_cast<int>(up.size()) < N)
    return fail(why, "structure maps missing below the cutoff");
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(down[n].size()) != n + 1) return fail(why, "level " + std::to_string(n) + " needs n+1 face maps");
    for (int i = 0; i <= n; ++i) {
      const auto &f = down[n][i];
      const FgAbGroup &s = simplicial ? levels[n] : levels[n - 1];
      const FgAbGroup &t = simplicial ? levels[n - 1] : levels[n];
      if (!(f.source() == s) || !(f.target() == t)) return fail(why, idx("face", n, i) + " has the wrong shape");
    }
  }
  for (int n = 0; n < N; ++n) {
    if (static_cast<int>(up[n].size()) != n + 1) return fail(why, "level " + std::to_string(n) + " needs n+1 degeneracies");
    for (int i = 0; i <= n; ++i) {
      const auto &f = up[n][i];
      const FgAbGroup &s = simplicial ? levels[n] : levels[n + 1];
      const FgAbGroup &t = simplicial ? levels[n + 1] : levels[n];
      if (!(f.source() == s) || !(f.target() == t)) return fail(why, idx("degeneracy", n, i) + " has the wrong shape");
    }
  }
  return true;
}

bool same(const GroupHom &a, const GroupHom &b) { return a.matrix() == b.matrix(); }
} // namespace

bool SimplicialGroup::check_identities(std::string *why) const {
  if (levels.empty()) return fail(why, "no levels");
  if (!shapes_ok(levels, faces, degeneracies, true, why)) return false;
  const auto &d = faces;
  const auto &s = degeneracies;
  int N = cutoff();
  // d_i d_j = d_{j-1} d_i for i < j, at level n
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!same(compose(d[n - 1][i], d[n][j]), compose(d[n - 1][j - 1], d[n][i])))
          return fail(why, "d_" + std::to_string(i) + " d_" + std::to_string(j) + " at level " + std::to_string(n));
  // d_i s_j on X_n (s_j : X_n -> X_{n+1})
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        GroupHom lhs = compose(d[n + 1][i], s[n][j]);
        bool ok;
        if (i == j || i == j + 1) ok = lhs == GroupHom::identity(levels[n]);
        else if (i < j) ok = same(lhs, compose(s[n - 1][j - 1], d[n][i]));
        else ok = same(lhs, compose(s[n - 1][j], d[n][i - 1]));
        if (!ok) return fail(why, "d_" + std::to_string(i) + " s_" + std::to_string(j) + " at level " + std::to_string(n));
      }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!same(compose(s[n + 1][i], s[n][j]), compose(s[n + 1][j + 1], s[n][i])))
          return fail(why, "s_" + std::to_string(i) + " s_" + std::to_string(j) + " at level " + std::to_string(n));
  return true;
}

bool CosimplicialGroup::check_identities(std::string *why) const {
  if (levels.empty()) return fail(why, "no levels");
  if (!shapes_ok(levels, cofaces, codegeneracies, false, why)) return false;
  const auto &d = cofaces;
  const auto &s = codegeneracies;
  int N = cutoff();
  // d^j d^i = d^i d^{j-1} for i < j, X^{n-2} -> X^n
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!same(compose(d[n][j], d[n - 1][i]), compose(d[n][i], d[n - 1][j - 1])))
          return fail(why, "d^" + std::to_string(j) + " d^" + std::to_string(i) + " at level " + std::to_string(n));
  // s^j d^i on X^n with d^i : X^n -> X^{n+1}, s^j : X^{n+1} -> X^n
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        GroupHom lhs = compose(s[n][j], d[n + 1][i]);
        bool ok;
        if (i == j || i == j + 1) ok = lhs == GroupHom::identity(levels[n]);
        else if (i < j) ok = same(lhs, compose(d[n][i], s[n - 1][j - 1]));
        else ok = same(lhs, compose(d[n][i - 1], s[n - 1][j]));
        if (!ok) return fail(why, "s^" + std::to_string(j) + " d^" + std::to_string(i) + " at level " + std::to_string(n));
      }
  // s^j s^i = s^i s^{j+1} for i <= j, X^{n+2} -> X^n
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!same(compose(s[n][j], s[n + 1][i]), compose(s[n][i], s[n + 1][j + 1])))
          return fail(why, "s^" + std::to_string(j) + " s^" + std::to_string(i) + " at level " + std::to_string(n));
  return true;
}

// ---------------------------------------------------------------- induced maps

GroupHom induced_on_cokernels(const CokernelResult &from, const CokernelResult &to, const GroupHom &f) {
  Matrix m = to.projection.matrix() * f.matrix() * from.section;
  return GroupHom(from.group, to.group, m);
}

GroupHom induced_on_kernels(const KernelResult &from, const KernelResult &to, const GroupHom &f) {
  Matrix img = f.matrix() * from.inclusion.matrix();
  std::vector<SparseVec> cols(img.cols());
  auto c = img.columns();
  for (int j = 0; j < img.cols(); ++j) {
    std::vector<Int> x(img.rows());
    for (const auto &[i, v] : c[j]) x[i] = v;
    auto z = to.coords(x);
    for (int i = 0; i < static_cast<int>(z.size()); ++i)
      if (!z[i].is_zero()) cols[j].emplace_back(i, z[i]);
  }
  return GroupHom(from.group, to.group, Matrix::from_columns(to.group.gens(), cols), false);
}

// ---------------------------------------------------------------- Moore complexes

namespace {
int resolve_top(int top, int cutoff, bool degenerate_above) {
  if (top < 0) return cutoff;
  if (top > cutoff && !degenerate_above)
    throw StructuralError("cutoff " + std::to_string(cutoff) + " does not determine degree " + std::to_string(top));
  return top;
}

GroupHom alternating(const std::vector<GroupHom> &maps) {
  GroupHom sum = GroupHom::zero(maps[0].source(), maps[0].target());
  for (std::size_t i = 0; i < maps.size(); ++i) sum = i % 2 ? sum - maps[i] : sum + maps[i];
  return sum;
}

// X_n modulo the images of all degeneracies X_{n-1} -> X_n
std::vector<CokernelResult> degenerate_quotients(const SimplicialGroup &S, int top) {
  std::vector<CokernelResult> out;
  for (int n = 0; n <= std::min(top, S.cutoff()); ++n) {
    const FgAbGroup &X = S.levels[n];
    if (n == 0) {
      out.push_back(hom_cokernel(GroupHom::zero(FgAbGroup(), X)));
      continue;
    }
    std::vector<FgAbGroup> parts(n, S.levels[n - 1]);
    DirectSum src = make_direct_sum(parts);
    Matrix m(X.gens(), 0);
    for (int i = 0; i < n; ++i) m = Matrix::hstack(m, S.degeneracies[n - 1][i].matrix());
    out.push_back(hom_cokernel(GroupHom(src.group, X, m * src.from_canonical, false)));
  }
  return out;
}

std::vector<KernelResult> codegeneracy_kernels(const CosimplicialGroup &C, int top) {
  std::vector<KernelResult> out;
  for (int n = 0; n <= std::min(top, C.cutoff()); ++n) {
    const FgAbGroup &X = C.levels[n];
    if (n == 0) {
      out.push_back(hom_kernel(GroupHom::zero(X, FgAbGroup())));
      continue;
    }
    std::vector<FgAbGroup> parts(n, C.levels[n - 1]);
    DirectSum tgt = make_direct_sum(parts);
    Matrix m(0, X.gens());
    for (int j = 0; j < n; ++j) m = Matrix::vstack(m, C.codegeneracies[n - 1][j].matrix());
    out.push_back(hom_kernel(GroupHom(X, tgt.group, tgt.to_canonical * m)));
  }
  return out;
}
} // namespace

ChainComplex normalized_moore(const SimplicialGroup &S, int top) {
  std::string why;
  if (!S.check_identities(&why)) throw StructuralError("simplicial identities fail: " + why);
  top = resolve_top(top, S.cutoff(), S.degenerate_above);
  auto Q = degenerate_quotients(S, top);
  std::vector<FgAbGroup> groups;
  std::vector<GroupHom> diffs;
  for (int n = 0; n <= top; ++n) groups.push_back(n < static_cast<int>(Q.size()) ? Q[n].group : FgAbGroup());
  for (int n = 1; n <= top; ++n) {
    if (n > S.cutoff()) {
      diffs.push_back(GroupHom::zero(groups[n], groups[n - 1]));
      continue;
    }
    diffs.push_back(induced_on_cokernels(Q[n], Q[n - 1], alternating(S.faces[n])));
  }
  ChainComplex c(0, groups, diffs);
  for (int n = 0; n <= std::min(top, S.cutoff()); ++n) {
    Realization r;
    r.kind = Realization::Kind::quotient;
    r.ambient = S.levels[n];
    r.quot = std::make_shared<CokernelResult>(Q[n]);
    c.set_realization(n, r);
  }
  return c;
}

ChainComplex conormalized_moore(const CosimplicialGroup &C, int top) {
  std::string why;
  if (!C.check_identities(&why)) throw StructuralError("cosimplicial identities fail: " + why);
  top = resolve_top(top, C.cutoff(), C.degenerate_above);
  auto K = codegeneracy_kernels(C, top);
  int avail = static_cast<int>(K.size()) - 1;
  // degrees -top .. 0; groups listed from the lowest degree
  std::vector<FgAbGroup> groups;
  std::vector<GroupHom> diffs;
  for (int n = top; n >= 0; --n) groups.push_back(n <= avail ? K[n].group : FgAbGroup());
  for (int n = top - 1; n >= 0; --n) {
    // out of degree -n into degree -n-1
    const FgAbGroup &src = groups[top - n], &tgt = groups[top - n - 1];
    if (n + 1 > avail) diffs.push_back(GroupHom::zero(src, tgt));
    else diffs.push_back(induced_on_kernels(K[n], K[n + 1], alternating(C.cofaces[n + 1])));
  }
  ChainComplex c(-top, groups, diffs);
  for (int n = 0; n <= avail; ++n) {
    Realization r;
    r.kind = Realization::Kind::sub;
    r.ambient = C.levels[n];
    r.sub = std::make_shared<KernelResult>(K[n]);
    c.set_realization(-n, r);
  }
  return c;
}

// ---------------------------------------------------------------- chain-valued objects

namespace {
std::pair<int, int> range_of(const std::vector<ChainComplex> &levels) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto &c : levels) {
    if (c.hi() < c.lo()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
  return {lo, hi};
}

std::vector<std::vector<GroupHom>> slice_maps(const std::vector<std::vector<ChainMap>> &maps, int q) {
  std::vector<std::vector<GroupHom>> out(maps.size());
  for (std::size_t n = 0; n < maps.size(); ++n)
    for (const auto &f : maps[n]) out[n].push_back(f.at(q));
  return out;
}
} // namespace

std::pair<int, int> SimplicialChainObject::internal_range() const { return range_of(levels); }
std::pair<int, int> CosimplicialChainObject::internal_range() const { return range_of(levels); }

SimplicialGroup SimplicialChainObject::slice(int q) const {
  SimplicialGroup s;
  for (const auto &c : levels) s.levels.push_back(c.group(q));
  s.faces = slice_maps(faces, q);
  s.degeneracies = slice_maps(degeneracies, q);
  s.degenerate_above = degenerate_above;
  return s;
}

CosimplicialGroup CosimplicialChainObject::slice(int q) const {
  CosimplicialGroup s;
  for (const auto &c : levels) s.levels.push_back(c.group(q));
  s.cofaces = slice_maps(cofaces, q);
  s.codegeneracies = slice_maps(codegeneracies, q);
  s.degenerate_above = degenerate_above;
  return s;
}

DoubleComplex normalized_moore(const SimplicialChainObject &S, int top) {
  top = resolve_top(top, S.cutoff(), S.degenerate_above);
  auto [q0, q1] = S.internal_range();
  DoubleComplex d(0, top, q0, q1);
  std::vector<std::vector<CokernelResult>> Q;
  for (int q = q0; q <= q1; ++q) {
    SimplicialGroup g = S.slice(q);
    ChainComplex c = normalized_moore(g, top);
    Q.push_back(degenerate_quotients(g, top));
    for (int p = 0; p <= top; ++p) d.set_group(p, q, c.group(p));
    for (int p = 1; p <= top; ++p) d.set_vertical(p, q, c.diff(p));
  }
  for (int q = q0 + 1; q <= q1; ++q)
    for (int p = 0; p <= std::min(top, S.cutoff()); ++p)
      d.set_horizontal(p, q, induced_on_cokernels(Q[q - q0][p], Q[q - 1 - q0][p], S.levels[p].diff(q)));
  std::string why;
  if (!d.check(&why)) throw StructuralError("normalized Moore double complex: " + why);
  return d;
}

DoubleComplex conormalized_moore(const CosimplicialChainObject &C, int top) {
  top = resolve_top(top, C.cutoff(), C.degenerate_above);
  auto [q0, q1] = C.internal_range();
  DoubleComplex d(-top, 0, q0, q1);
  std::vector<std::vector<KernelResult>> K;
  for (int q = q0; q <= q1; ++q) {
    CosimplicialGroup g = C.slice(q);
    ChainComplex c = conormalized_moore(g, top);
    K.push_back(codegeneracy_kernels(g, top));
    for (int p = -top; p <= 0; ++p) d.set_group(p, q, c.group(p));
    for (int p = -top + 1; p <= 0; ++p) d.set_vertical(p, q, c.diff(p));
  }
  for (int q = q0 + 1; q <= q1; ++q)
    for (int n = 0; n <= std::min(top, C.cutoff()); ++n)
      d.set_horizontal(-n, q, induced_on_kernels(K[q - q0][n], K[q - 1 - q0][n], C.levels[n].diff(q)));
  std::string why;
  if (!d.check(&why)) throw StructuralError("conormalized Moore double complex: " + why);
  return d;
}

// ---------------------------------------------------------------- nerve

SimplicialGroup action_groupoid_nerve(const FgAbGroup &G, const FgAbGroup &X, const GroupHom &tau, int cutoff) {
  if (!(tau.source() == G) || !(tau.target() == X)) throw StructuralError("tau must map G to X");
  int g = G.gens(), x = X.gens();
  std::vector<DirectSum> sums;
  SimplicialGroup S;
  S.degenerate_above = true;
  for (int n = 0; n <= cutoff; ++n) {
    std::vector<FgAbGroup> parts(n, G);
    parts.push_back(X);
    sums.push_back(make_direct_sum(parts));
    S.levels.push_back(sums.back().group);
  }
  // concatenated coordinates (g1..gn, A); block k of G at offset k*g
  auto finish = [&](int from, int to, const Matrix &concat) {
    return GroupHom(S.levels[from], S.levels[to], sums[to].to_canonical * concat * sums[from].from_canonical);
  };
  auto copy_block = [](Matrix &m, int r0, int c0, int size) {
    for (int i = 0; i < size; ++i) m.add_to(r0 + i, c0 + i, Int(1));
  };
  S.faces.resize(cutoff + 1);
  S.degeneracies.resize(cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) {
    int src = n * g + x, dst = (n - 1) * g + x;
    for (int i = 0; i <= n; ++i) {
      Matrix m(dst, src);
      copy_block(m, (n - 1) * g, n * g, x); // A is kept
      if (i == 0) {
        for (int k = 1; k < n; ++k) copy_block(m, (k - 1) * g, k * g, g);
      } else if (i < n) {
        // merge g_i and g_{i+1} (1-based)
        for (int k = 0; k < n - 1; ++k) {
          int srcblock = k < i - 1 ? k : k + 1;
          copy_block(m, k * g, srcblock * g, g);
          if (k == i - 1) copy_block(m, k * g, (i - 1) * g, g);
        }
      } else {
        for (int k = 0; k < n - 1; ++k) copy_block(m, k * g, k * g, g);
        m.add_block((n - 1) * g, (n - 1) * g, tau.matrix());
      }
      S.faces[n].push_back(finish(n, n - 1, m));
    }
  }
  for (int n = 0; n < cutoff; ++n) {
    int src = n * g + x, dst = (n + 1) * g + x;
    for (int i = 0; i <= n; ++i) {
      Matrix m(dst, src);
      copy_block(m, (n + 1) * g, n * g, x);
      for (int k = 0; k < n; ++k) copy_block(m, (k < i ? k : k + 1) * g, k * g, g);
      S.degeneracies[n].push_back(finish(n, n + 1, m));
    }
  }
  return S;
}

} // namespace artifact
