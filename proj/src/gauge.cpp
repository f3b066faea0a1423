#include "artifact/gauge.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace artifact {

namespace {
// coordinate projection C^k(from) -> C^k(to) for to inside from
Matrix projection(const Subcomplex &from, const Subcomplex &to, int k) {
  Matrix m(to.count(k), from.count(k));
  for (int i = 0; i < to.count(k); ++i) {
    int j = from.position(k, to.indices(k)[i]);
    if (j < 0) throw StructuralError("not a subcomplex");
    m.set(i, j, Int(1));
  }
  return m;
}

Matrix coboundary_matrix(const Subcomplex &B, int k) { return coboundary(B, k, CoeffGroup::Z()).matrix(); }

std::vector<std::string> cochain_labels(const Subcomplex &B, int k, const std::string &prefix) {
  std::vector<std::string> out;
  const auto &K = *B.complex();
  for (int i : B.indices(k)) out.push_back(prefix + ":" + K.simplex_label(K.simplex(k, i)));
  return out;
}

void append(std::vector<std::string> &a, const std::vector<std::string> &b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<std::vector<Int>> dense_columns(const Matrix &m) {
  std::vector<std::vector<Int>> out(m.cols(), std::vector<Int>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto &[c, x] : m.row(r)) out[c][r] = x;
  return out;
}

Matrix from_cols(int rows, const std::vector<std::vector<Int>> &cols) {
  std::vector<SparseVec> sv(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < static_cast<int>(cols[j].size()); ++i)
      if (!cols[j][i].is_zero()) sv[j].emplace_back(i, cols[j][i]);
  return Matrix::from_columns(rows, sv);
}

Realization direct_realization(const FgAbGroup &g) {
  Realization r;
  r.ambient = g;
  return r;
}
} // namespace

// ---------------------------------------------------------------- construction

GaugeModel::GaugeModel(ComplexPtr K, CoeffGroup G) : K_(std::move(K)), G_(std::move(G)), P_(StarPoset::build(K_)) {
  pairs_ = P_.chains(1);
  triples_ = P_.chains(2);
  build_config();
  if (!G_.is_Z()) build_obs();
}

int GaugeModel::pair_index(int U, int V) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::vector<int>{U, V});
  return (it != pairs_.end() && *it == std::vector<int>{U, V}) ? static_cast<int>(it - pairs_.begin()) : -1;
}

void GaugeModel::build_config() {
  int n = P_.size();
  offA_.assign(n, 0);
  offG_.assign(n, 0);
  offGP_.assign(pairs_.size(), 0);
  int off = 0;
  for (int U = 0; U < n; ++U) {
    offA_[U] = off;
    off += P_.object(U).count(1);
    append(cfg_labels0_, cochain_labels(P_.object(U), 1, "A " + P_.name(U)));
    append(obs_labels0_, cochain_labels(P_.object(U), 1, "phi " + P_.name(U)));
  }
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    int U = pairs_[k][0], V = pairs_[k][1];
    offGP_[k] = off;
    off += P_.object(U).count(0);
    append(cfg_labels0_, cochain_labels(P_.object(U), 0, "g " + P_.name(U) + "<" + P_.name(V)));
    append(obs_labels0_, cochain_labels(P_.object(U), 0, "chi " + P_.name(U) + "<" + P_.name(V)));
  }
  a0_ = o0_ = off;
  off = 0;
  for (int U = 0; U < n; ++U) {
    offG_[U] = off;
    off += P_.object(U).count(0);
    append(cfg_labels1_, cochain_labels(P_.object(U), 0, "g " + P_.name(U)));
    append(obs_labelsm1_, cochain_labels(P_.object(U), 0, "chi " + P_.name(U)));
  }
  a1_ = om1_ = off;

  // A_V|_U - A_U + d g_(U<V) = 0 ; g_(V<W)|_U - g_(U<W) + g_(U<V) = 0
  int rows = 0;
  for (const auto &p : pairs_) rows += P_.object(p[0]).count(1);
  for (const auto &t : triples_) rows += P_.object(t[0]).count(0);
  constraints_ = Matrix(rows, a0_);
  int r = 0;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Subcomplex &U = P_.object(pairs_[k][0]), &V = P_.object(pairs_[k][1]);
    constraints_.add_block(r, offA_[pairs_[k][1]], projection(V, U, 1));
    constraints_.add_block(r, offA_[pairs_[k][0]], -Matrix::identity(U.count(1)));
    constraints_.add_block(r, offGP_[k], coboundary_matrix(U, 0));
    r += U.count(1);
  }
  for (const auto &t : triples_) {
    const Subcomplex &U = P_.object(t[0]), &V = P_.object(t[1]);
    constraints_.add_block(r, offGP_[pair_index(t[1], t[2])], projection(V, U, 0));
    constraints_.add_block(r, offGP_[pair_index(t[0], t[2])], -Matrix::identity(U.count(0)));
    constraints_.add_block(r, offGP_[pair_index(t[0], t[1])], Matrix::identity(U.count(0)));
    r += U.count(0);
  }
  // g -> (-d g_U) x (g_V|_U - g_U)
  delta1_ = Matrix(a0_, a1_);
  for (int U = 0; U < n; ++U) delta1_.add_block(offA_[U], offG_[U], -coboundary_matrix(P_.object(U), 0));
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Subcomplex &U = P_.object(pairs_[k][0]), &V = P_.object(pairs_[k][1]);
    delta1_.add_block(offGP_[k], offG_[pairs_[k][1]], projection(V, U, 0));
    delta1_.add_block(offGP_[k], offG_[pairs_[k][0]], -Matrix::identity(U.count(0)));
  }
}

void GaugeModel::build_obs() {
  // relation generators, one column per basis chain
  std::vector<SparseVec> cols;
  auto add_col = [&](Matrix blockcol) {
    auto c = blockcol.columns();
    cols.push_back(c[0]);
  };
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    int u = pairs_[k][0], v = pairs_[k][1];
    const Subcomplex &U = P_.object(u), &V = P_.object(v);
    Matrix ext1 = projection(V, U, 1).transpose(), bd = coboundary_matrix(U, 0).transpose();
    for (int e = 0; e < U.count(1); ++e) {
      // iota_U(e) - iota_V(ext e) + iota_(U<V)(boundary e)
      Matrix c(o0_, 1);
      c.add_to(offA_[u] + e, 0, Int(1));
      for (const auto &[i, x] : ext1.column(e)) c.add_to(offA_[v] + i, 0, -x);
      for (const auto &[i, x] : bd.column(e)) c.add_to(offGP_[k] + i, 0, x);
      add_col(c);
    }
  }
  for (const auto &t : triples_) {
    const Subcomplex &U = P_.object(t[0]), &V = P_.object(t[1]);
    Matrix ext0 = projection(V, U, 0).transpose();
    int kuv = pair_index(t[0], t[1]), kuw = pair_index(t[0], t[2]), kvw = pair_index(t[1], t[2]);
    for (int x = 0; x < U.count(0); ++x) {
      // iota_(U<V)(x) - iota_(U<W)(x) + iota_(V<W)(ext x)
      Matrix c(o0_, 1);
      c.add_to(offGP_[kuv] + x, 0, Int(1));
      c.add_to(offGP_[kuw] + x, 0, Int(-1));
      for (const auto &[i, y] : ext0.column(x)) c.add_to(offGP_[kvw] + i, 0, y);
      add_col(c);
    }
  }
  relations_ = Matrix::from_columns(o0_, cols);

  // iota_U(phi) -> iota_U(s boundary phi) ; iota_(U<V)(chi) -> iota_U(chi) - iota_V(ext chi)
  obs_delta_ = Matrix(om1_, o0_);
  for (int U = 0; U < P_.size(); ++U) {
    Matrix bd = coboundary_matrix(P_.object(U), 0).transpose();
    obs_delta_.add_block(offG_[U], offA_[U], kObsSign == 1 ? bd : -bd);
  }
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const Subcomplex &U = P_.object(pairs_[k][0]), &V = P_.object(pairs_[k][1]);
    obs_delta_.add_block(offG_[pairs_[k][0]], offGP_[k], Matrix::identity(U.count(0)));
    obs_delta_.add_block(offG_[pairs_[k][1]], offGP_[k], -projection(V, U, 0).transpose());
  }
}

// ---------------------------------------------------------------- complexes

const ChainComplex &GaugeModel::extended_config() const {
  if (!engine_cfg_) engine_cfg_ = std::make_shared<ChainComplex>(holim(config_diagram(P_, G_)));
  return *engine_cfg_;
}

const ChainComplex &GaugeModel::extended_obs() const {
  if (!engine_obs_) engine_obs_ = std::make_shared<ChainComplex>(hocolim(obs_diagram(P_, G_)));
  return *engine_obs_;
}

const ChainComplex &GaugeModel::extended_config_direct() const {
  if (direct_cfg_) return *direct_cfg_;
  FgAbGroup amb0 = G_.group(a0_, cfg_labels0_), amb1 = G_.group(a1_, cfg_labels1_);
  auto ker = std::make_shared<KernelResult>(hom_kernel(GroupHom(amb0, G_.group(constraints_.rows()), constraints_, false)));
  std::vector<std::vector<Int>> cols;
  for (const auto &c : dense_columns(delta1_)) cols.push_back(ker->coords(c));
  GroupHom d(amb1, ker->group, from_cols(ker->group.gens(), cols));
  auto c = std::make_shared<ChainComplex>(0, std::vector<FgAbGroup>{ker->group, amb1}, std::vector<GroupHom>{d});
  Realization r;
  r.kind = Realization::Kind::sub;
  r.ambient = amb0;
  r.sub = ker;
  c->set_realization(0, r);
  c->set_realization(1, direct_realization(amb1));
  direct_cfg_ = c;
  return *direct_cfg_;
}

const ChainComplex &GaugeModel::extended_obs_direct() const {
  if (direct_obs_) return *direct_obs_;
  if (G_.is_Z()) throw StructuralError("observables are undefined for Z coefficients; use Z/q");
  FgAbGroup amb0 = G_.group(o0_, obs_labels0_), ambm1 = G_.group(om1_, obs_labelsm1_);
  if (!GroupHom(G_.group(relations_.cols()), ambm1, obs_delta_ * relations_).is_zero())
    throw std::logic_error("observable differential does not vanish on the relations");
  auto q = std::make_shared<CokernelResult>(hom_cokernel(GroupHom(G_.group(relations_.cols()), amb0, relations_, false)));
  GroupHom d(q->group, ambm1, obs_delta_ * q->section);
  auto c = std::make_shared<ChainComplex>(-1, std::vector<FgAbGroup>{ambm1, q->group}, std::vector<GroupHom>{d});
  Realization r;
  r.kind = Realization::Kind::quotient;
  r.ambient = amb0;
  r.quot = q;
  c->set_realization(0, r);
  c->set_realization(-1, direct_realization(ambm1));
  direct_obs_ = c;
  return *direct_obs_;
}

void GaugeModel::build_deligne() const {
  int n = P_.size();
  dpairs_.clear();
  dmeet_.clear();
  doff_.clear();
  int off = 0;
  for (int U = 0; U < n; ++U) off += P_.object(U).count(1);
  dA0_ = off;
  for (int U = 0; U < n; ++U)
    for (int V = 0; V < n; ++V) {
      Subcomplex m = P_.object(U).intersect(P_.object(V));
      if (m.empty()) continue;
      dpairs_.emplace_back(U, V);
      doff_.push_back(off);
      off += m.count(0);
      dmeet_.push_back(std::move(m));
    }
}

const ChainComplex &GaugeModel::deligne() const {
  if (deligne_) return *deligne_;
  build_deligne();
  int n = P_.size();
  std::vector<std::string> labels;
  for (int U = 0; U < n; ++U) append(labels, cochain_labels(P_.object(U), 1, "A " + P_.name(U)));
  std::map<std::pair<int, int>, int> index;
  for (std::size_t k = 0; k < dpairs_.size(); ++k) {
    index[dpairs_[k]] = static_cast<int>(k);
    append(labels, cochain_labels(dmeet_[k], 0, "g " + P_.name(dpairs_[k].first) + "," + P_.name(dpairs_[k].second)));
  }
  int amb = static_cast<int>(labels.size());

  // rows: the A-condition per ordered pair, g_UU = 0, g_UV + g_VU = 0 (U < V),
  // cocycle on U < V < W; equivalent to the cocycle condition on all ordered triples
  int rows = 0;
  std::vector<std::tuple<int, int, Matrix>> entries; // (row offset, col offset, block)
  for (std::size_t k = 0; k < dpairs_.size(); ++k) {
    auto [u, v] = dpairs_[k];
    const Subcomplex &M = dmeet_[k];
    entries.emplace_back(rows, offA_[v], projection(P_.object(v), M, 1));
    entries.emplace_back(rows, offA_[u], -projection(P_.object(u), M, 1));
    entries.emplace_back(rows, doff_[k], coboundary_matrix(M, 0));
    rows += M.count(1);
  }
  for (int U = 0; U < n; ++U) {
    int k = index.at({U, U});
    entries.emplace_back(rows, doff_[k], Matrix::identity(dmeet_[k].count(0)));
    rows += dmeet_[k].count(0);
  }
  for (std::size_t k = 0; k < dpairs_.size(); ++k) {
    auto [u, v] = dpairs_[k];
    if (u >= v) continue;
    int kk = index.at({v, u});
    entries.emplace_back(rows, doff_[k], Matrix::identity(dmeet_[k].count(0)));
    entries.emplace_back(rows, doff_[kk], Matrix::identity(dmeet_[kk].count(0)));
    rows += dmeet_[k].count(0);
  }
  for (int U = 0; U < n; ++U)
    for (int V = U + 1; V < n; ++V) {
      auto uv = index.find({U, V});
      if (uv == index.end()) continue;
      for (int W = V + 1; W < n; ++W) {
        auto vw = index.find({V, W});
        if (vw == index.end()) continue;
        Subcomplex m3 = dmeet_[uv->second].intersect(P_.object(W));
        if (m3.empty()) continue;
        int uw = index.at({U, W});
        entries.emplace_back(rows, doff_[vw->second], projection(dmeet_[vw->second], m3, 0));
        entries.emplace_back(rows, doff_[uw], -projection(dmeet_[uw], m3, 0));
        entries.emplace_back(rows, doff_[uv->second], projection(dmeet_[uv->second], m3, 0));
        rows += m3.count(0);
      }
    }
  Matrix C(rows, amb);
  for (auto &[r, c, b] : entries) C.add_block(r, c, b);

  Matrix d(amb, a1_);
  for (int U = 0; U < n; ++U) d.add_block(offA_[U], offG_[U], -coboundary_matrix(P_.object(U), 0));
  for (std::size_t k = 0; k < dpairs_.size(); ++k) {
    auto [u, v] = dpairs_[k];
    d.add_block(doff_[k], offG_[v], projection(P_.object(v), dmeet_[k], 0));
    d.add_block(doff_[k], offG_[u], -projection(P_.object(u), dmeet_[k], 0));
  }
  FgAbGroup amb0 = G_.group(amb, labels), amb1 = G_.group(a1_, cfg_labels1_);
  // g_UU = 0 and g_VU = -g_UV are solved by substitution; the rest is eliminated
  std::vector<int> keep;
  for (int i = 0; i < dA0_; ++i) keep.push_back(i);
  Matrix Pm(amb, 0);
  {
    std::vector<SparseVec> pcols;
    for (int i = 0; i < dA0_; ++i) pcols.push_back({{i, Int(1)}});
    for (std::size_t k = 0; k < dpairs_.size(); ++k) {
      auto [u, v] = dpairs_[k];
      if (u >= v) continue;
      int kk = index.at({v, u});
      for (int x = 0; x < dmeet_[k].count(0); ++x) {
        keep.push_back(doff_[k] + x);
        pcols.push_back({{doff_[k] + x, Int(1)}, {doff_[kk] + x, Int(-1)}});
      }
    }
    Pm = Matrix::from_columns(amb, pcols);
  }
  Matrix Cr = C * Pm;
  std::set<std::vector<std::pair<int, long long>>> seen;
  std::vector<int> live;
  for (int i = 0; i < Cr.rows(); ++i) {
    std::vector<std::pair<int, long long>> key;
    for (const auto &[j, x] : Cr.row(i)) key.emplace_back(j, x.small());
    if (key.empty() || !seen.insert(key).second) continue;
    for (auto &e : key) e.second = -e.second;
    if (seen.count(key)) continue;
    live.push_back(i);
  }
  // short rows first: the pivot search takes the first unit it finds
  std::stable_sort(live.begin(), live.end(), [&](int a, int b) { return Cr.row(a).size() < Cr.row(b).size(); });
  Cr = Cr.select_rows(live);
  auto red = std::make_shared<KernelResult>(
      hom_kernel(GroupHom(G_.group(static_cast<int>(keep.size())), G_.group(Cr.rows()), Cr, false)));
  auto ker = std::make_shared<KernelResult>();
  ker->group = red->group;
  ker->inclusion = GroupHom(red->group, amb0, Pm * red->inclusion.matrix());
  ker->map = GroupHom(amb0, G_.group(rows), C, false);
  ker->to_coords = [red, keep](const std::vector<Int> &x) {
    std::vector<Int> y;
    for (int i : keep) y.push_back(x[i]);
    return red->to_coords(y);
  };
  std::vector<std::vector<Int>> cols;
  for (const auto &c : dense_columns(d)) cols.push_back(ker->coords(c));
  GroupHom dd(amb1, ker->group, from_cols(ker->group.gens(), cols));
  auto c = std::make_shared<ChainComplex>(0, std::vector<FgAbGroup>{ker->group, amb1}, std::vector<GroupHom>{dd});
  Realization r;
  r.kind = Realization::Kind::sub;
  r.ambient = amb0;
  r.sub = ker;
  c->set_realization(0, r);
  c->set_realization(1, direct_realization(amb1));
  deligne_ = c;
  return *deligne_;
}

// ---------------------------------------------------------------- realized maps

ChainMap realize_ambient_map(const ChainComplex &from, const ChainComplex &to, const std::map<int, Matrix> &ambient) {
  ChainMap f{from, to, {}};
  for (const auto &[n, M] : ambient) {
    Realization rf = from.realization(n), rt = to.realization(n);
    const FgAbGroup &s = from.group(n), &t = to.group(n);
    if (M.cols() != rf.ambient.gens() || M.rows() != rt.ambient.gens())
      throw StructuralError("ambient map in degree " + std::to_string(n) + " has the wrong shape");
    std::vector<std::vector<Int>> cols;
    for (int i = 0; i < s.gens(); ++i) {
      std::vector<Int> e(s.gens());
      e[i] = Int(1);
      cols.push_back(rt.from_ambient(M.apply(rf.to_ambient(e))));
    }
    f.components[n] = GroupHom(s, t, from_cols(t.gens(), cols));
  }
  return f;
}

ExplicitIso labeled_isomorphism(const ChainComplex &from, const ChainComplex &to,
                                const std::function<std::string(const std::string &)> &rename) {
  ExplicitIso out;
  int lo = std::min(from.lo(), to.lo()), hi = std::max(from.hi(), to.hi());
  std::map<int, Matrix> amb;
  for (int n = lo; n <= hi; ++n) {
    FgAbGroup af = from.realization(n).ambient, at = to.realization(n).ambient;
    if (af.gens() != at.gens()) {
      out.why = "ambient ranks differ in degree " + std::to_string(n);
      return out;
    }
    std::map<std::string, int> where;
    for (int j = 0; j < at.gens(); ++j) where[at.label(j)] = j;
    Matrix P(at.gens(), af.gens());
    std::set<int> hit;
    for (int i = 0; i < af.gens(); ++i) {
      auto it = where.find(rename(af.label(i)));
      if (it == where.end() || !hit.insert(it->second).second) {
        out.why = "label " + af.label(i) + " has no unique partner in degree " + std::to_string(n);
        return out;
      }
      P.set(it->second, i, Int(1));
    }
    amb[n] = P;
  }
  try {
    out.map = realize_ambient_map(from, to, amb);
  } catch (const StructuralError &e) {
    out.why = e.what();
    return out;
  }
  std::string why;
  if (!verify_chain_map(out.map, &why)) {
    out.why = "not a chain map: " + why;
    return out;
  }
  for (int n = lo; n <= hi; ++n)
    if (!is_isomorphism(out.map.at(n))) {
      out.why = "component in degree " + std::to_string(n) + " is not an isomorphism";
      return out;
    }
  out.ok = true;
  return out;
}

namespace {
// "A U:s" -> "(0,0)U:s", "g U<V:s" -> "(-1,1)U<V:s", "g U:s" -> "(0,1)U:s"
std::string engine_config_label(const std::string &l) {
  if (l.rfind("A ", 0) == 0) return "(0,0)" + l.substr(2);
  std::string rest = l.substr(2);
  auto colon = rest.find(':');
  if (rest.substr(0, colon).find('<') != std::string::npos) return "(-1,1)" + rest;
  return "(0,1)" + rest;
}

// "phi U:s" -> "(0,0)U:s", "chi U<V:s" -> "(1,-1)V>U:s", "chi U:s" -> "(0,-1)U:s"
std::string engine_obs_label(const std::string &l) {
  if (l.rfind("phi ", 0) == 0) return "(0,0)" + l.substr(4);
  std::string rest = l.substr(4);
  auto colon = rest.find(':');
  std::string head = rest.substr(0, colon), tail = rest.substr(colon);
  auto lt = head.find('<');
  if (lt == std::string::npos) return "(0,-1)" + rest;
  return "(1,-1)" + head.substr(lt + 1) + ">" + head.substr(0, lt) + tail;
}
} // namespace

ExplicitIso GaugeModel::config_engine_iso() const {
  return labeled_isomorphism(extended_config_direct(), extended_config(), engine_config_label);
}

ExplicitIso GaugeModel::obs_engine_iso() const {
  return labeled_isomorphism(extended_obs_direct(), extended_obs(), engine_obs_label);
}

// ---------------------------------------------------------------- psi and phi

ChainMap GaugeModel::psi() const {
  const ChainComplex &D = deligne(), &E = extended_config_direct();
  std::map<std::pair<int, int>, int> index;
  for (std::size_t k = 0; k < dpairs_.size(); ++k) index[dpairs_[k]] = static_cast<int>(k);
  Matrix m0(a0_, D.realization(0).ambient.gens());
  m0.add_block(0, 0, Matrix::identity(dA0_));
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    int dk = index.at({pairs_[k][0], pairs_[k][1]});
    m0.add_block(offGP_[k], doff_[dk], Matrix::identity(dmeet_[dk].count(0)));
  }
  ChainMap f = realize_ambient_map(D, E, {{0, m0}, {1, Matrix::identity(a1_)}});
  std::string why;
  if (!verify_chain_map(f, &why)) throw std::logic_error("psi is not a chain map: " + why);
  return f;
}

ChainMap GaugeModel::phi() const {
  const ChainComplex &D = deligne(), &E = extended_config_direct();
  Matrix m0(D.realization(0).ambient.gens(), a0_);
  m0.add_block(0, 0, Matrix::identity(dA0_));
  const Matrix &incl = E.realization(0).sub->inclusion.matrix();
  // adds g_(W<V) - g_(W<U) restricted to the vertices `rows` of the meet, into m
  auto glue_value = [&](Matrix &m, int row_off, const Subcomplex &meet, int W, int U, int V, int vertex_pos) {
    int global = meet.indices(0)[vertex_pos];
    int wpos = P_.object(W).position(0, global);
    if (W != V) m.add_to(row_off + vertex_pos, offGP_[pair_index(W, V)] + wpos, Int(1));
    if (W != U) m.add_to(row_off + vertex_pos, offGP_[pair_index(W, U)] + wpos, Int(-1));
  };
  for (std::size_t k = 0; k < dpairs_.size(); ++k) {
    auto [u, v] = dpairs_[k];
    const Subcomplex &M = dmeet_[k];
    int W = P_.find(M);
    if (W >= 0) {
      for (int x = 0; x < M.count(0); ++x) glue_value(m0, doff_[k], M, W, u, v, x);
      continue;
    }
    std::vector<int> inside;
    for (int X = 0; X < P_.size(); ++X)
      if (P_.object(X).subset_of(M)) inside.push_back(X);
    std::string pair = "(" + P_.name(u) + ", " + P_.name(v) + ")";
    // covering: every simplex of the meet lies in some star inside it
    for (int d = 0; d <= M.dim(); ++d)
      for (int s : M.indices(d)) {
        bool covered = false;
        for (int X : inside) covered |= P_.object(X).has(d, s);
        if (!covered)
          throw PreconditionError("gluing precondition fails for the pair " + pair +
                                  ": stars inside the intersection do not cover it");
      }
    for (int x = 0; x < M.count(0); ++x) {
      int global = M.indices(0)[x];
      std::vector<int> around;
      for (int X : inside)
        if (P_.object(X).has(0, global)) around.push_back(X);
      glue_value(m0, doff_[k], M, around[0], u, v, x);
      // all other stars around the vertex must give the same value on every configuration
      Matrix first(1, a0_), other(1, a0_);
      glue_value(first, 0, M, around[0], u, v, x);
      for (std::size_t a = 1; a < around.size(); ++a) {
        other = Matrix(1, a0_);
        glue_value(other, 0, M, around[a], u, v, x);
        Matrix diff = (first - other) * incl;
        if (!GroupHom(E.group(0), G_.group(1), diff, false).is_zero())
          throw PreconditionError("gluing is inconsistent for the pair " + pair + " at " + K_->simplex_label(K_->simplex(0, global)) +
                                  ": the cocycle condition g_(V<W)|_U - g_(U<W) + g_(U<V) = 0 does not force agreement");
      }
    }
  }
  ChainMap f;
  try {
    f = realize_ambient_map(E, D, {{0, m0}, {1, Matrix::identity(a1_)}});
  } catch (const StructuralError &e) {
    throw PreconditionError(std::string("glued cochains violate the Deligne conditions: ") + e.what());
  }
  std::string why;
  if (!verify_chain_map(f, &why)) throw std::logic_error("phi is not a chain map: " + why);
  return f;
}

// ---------------------------------------------------------------- eta, theta, zeta, kappa

EtaTheta GaugeModel::eta_theta() const {
  int top = P_.top();
  if (top < 0) throw PreconditionError("the star poset has no top object: the complex is not the star of a simplex");
  const Subcomplex &M = P_.object(top);
  ChainComplex L = local_config_complex(M, G_);
  const ChainComplex &E = extended_config_direct();
  Matrix e0(a0_, M.count(1)), e1(a1_, M.count(0)), t0(M.count(1), a0_), t1(M.count(0), a1_), h(a1_, a0_);
  for (int U = 0; U < P_.size(); ++U) {
    e0.add_block(offA_[U], 0, projection(M, P_.object(U), 1));
    e1.add_block(offG_[U], 0, projection(M, P_.object(U), 0));
    if (U != top) h.add_block(offG_[U], offGP_[pair_index(U, top)], Matrix::identity(P_.object(U).count(0)));
  }
  t0.add_block(0, offA_[top], Matrix::identity(M.count(1)));
  t1.add_block(0, offG_[top], Matrix::identity(M.count(0)));
  EtaTheta out;
  out.eta = realize_ambient_map(L, E, {{0, e0}, {1, e1}});
  out.theta = realize_ambient_map(E, L, {{0, t0}, {1, t1}});
  GroupHom h0(E.group(0), E.group(1), h * E.realization(0).sub->inclusion.matrix());
  out.h = ChainHomotopy{compose(out.eta, out.theta), ChainMap::identity(E), {{0, h0}}};
  return out;
}

ZetaKappa GaugeModel::zeta_kappa() const {
  int top = P_.top();
  if (top < 0) throw PreconditionError("the star poset has no top object: the complex is not the star of a simplex");
  const Subcomplex &M = P_.object(top);
  ChainComplex L = local_obs_complex(M, G_);
  const ChainComplex &O = extended_obs_direct();
  Matrix z0(M.count(1), o0_), zm1(M.count(0), om1_), k0(o0_, M.count(1)), km1(om1_, M.count(0)), k(o0_, om1_);
  for (int U = 0; U < P_.size(); ++U) {
    z0.add_block(0, offA_[U], projection(M, P_.object(U), 1).transpose());
    zm1.add_block(0, offG_[U], projection(M, P_.object(U), 0).transpose());
    if (U != top) k.add_block(offGP_[pair_index(U, top)], offG_[U], -Matrix::identity(P_.object(U).count(0)));
  }
  k0.add_block(offA_[top], 0, Matrix::identity(M.count(1)));
  km1.add_block(offG_[top], 0, Matrix::identity(M.count(0)));
  if (!GroupHom(G_.group(relations_.cols()), L.group(0), z0 * relations_).is_zero())
    throw std::logic_error("zeta does not vanish on the relations");
  ZetaKappa out;
  out.zeta = realize_ambient_map(O, L, {{0, z0}, {-1, zm1}});
  out.kappa = realize_ambient_map(L, O, {{0, k0}, {-1, km1}});
  GroupHom kk(O.group(-1), O.group(0), O.realization(0).quot->projection.matrix() * k);
  out.k = ChainHomotopy{compose(out.kappa, out.zeta), ChainMap::identity(O), {{-1, kk}}};
  return out;
}

// ---------------------------------------------------------------- pairing

bool GaugeModel::is_config(const std::vector<Int> &ambient0) const {
  if (static_cast<int>(ambient0.size()) != a0_) return false;
  auto r = constraints_.apply(ambient0);
  for (auto &x : r)
    if (!(G_.is_Z() ? x.is_zero() : mod(x, G_.q).is_zero())) return false;
  return true;
}

PairingValue GaugeModel::pairing(const ExtObsElement &F, const ExtConfigElement &B) const {
  if (G_.is_Z()) throw StructuralError("observables are undefined for Z coefficients; use Z/q");
  if (F.degree == 0 && B.degree == 0) {
    if (static_cast<int>(F.coords.size()) != o0_) throw StructuralError("pairing: observable has the wrong size");
    if (!is_config(B.coords)) throw StructuralError("pairing: configuration violates the gluing conditions");
    std::vector<Int> w = B.coords;
    for (int i = offGP_.empty() ? a0_ : offGP_[0]; i < a0_; ++i) w[i] = -w[i];
    return dot_pairing(F.coords, w, G_);
  }
  if (F.degree == -1 && B.degree == 1) {
    if (static_cast<int>(F.coords.size()) != om1_ || static_cast<int>(B.coords.size()) != a1_)
      throw StructuralError("pairing: element has the wrong size");
    return dot_pairing(F.coords, B.coords, G_);
  }
  if ((F.degree == 0 || F.degree == -1) && (B.degree == 0 || B.degree == 1)) return PairingValue{};
  throw StructuralError("pairing: degrees out of range");
}

std::vector<std::vector<Int>> GaugeModel::relation_generators() const {
  return dense_columns(relations_);
}

SeparationReport GaugeModel::separation_check(const SeparationOptions &opt) const {
  if (G_.is_Z()) throw StructuralError("observables are undefined for Z coefficients; use Z/q");
  const ChainComplex &E = extended_config_direct();
  const ChainComplex &O = extended_obs_direct();
  SeparationReport rep;
  // observable generators in ambient coordinates, paired as functionals on ambient configurations
  struct Level {
    int degree;
    FgAbGroup group;
    Matrix to_ambient;  // ambient x group
    Matrix functionals; // observables x ambient
  };
  std::vector<Level> levels;
  {
    Matrix sec = O.realization(0).quot->section; // o0 x gens
    Matrix f = sec.transpose();
    Matrix sign = Matrix::identity(a0_);
    for (int i = offGP_.empty() ? a0_ : offGP_[0]; i < a0_; ++i) sign.set(i, i, Int(-1));
    levels.push_back({0, E.group(0), E.realization(0).sub->inclusion.matrix(), f * sign});
    levels.push_back({1, E.group(1), Matrix::identity(a1_), Matrix::identity(om1_)});
  }
  // element count
  long double total = 0;
  for (const auto &L : levels) {
    long double c = 1;
    for (const auto &o : L.group.orders()) c *= static_cast<long double>(o.is_small() ? o.small() : 1e30);
    total += c - 1;
  }
  bool exhaustive = total <= static_cast<long double>(opt.budget);
  if (!exhaustive && opt.samples == 0) {
    rep.status = SeparationReport::Status::inconclusive;
    rep.detail = "configuration count exceeds the budget of " + std::to_string(opt.budget);
    return rep;
  }
  rep.exhaustive = exhaustive;
  auto test = [&](const Level &L, const std::vector<Int> &x) {
    std::vector<Int> amb = L.to_ambient.apply(x);
    std::vector<Int> vals = L.functionals.apply(amb);
    for (int j = 0; j < static_cast<int>(vals.size()); ++j) {
      PairingValue p = PairingValue::make(vals[j], G_.q);
      if (!p.is_zero()) {
        rep.witnesses.push_back({L.degree, x, j, p});
        return true;
      }
    }
    return false;
  };
  std::mt19937_64 rng(opt.seed);
  for (const auto &L : levels) {
    auto orders = L.group.orders();
    int n = static_cast<int>(orders.size());
    if (exhaustive) {
      std::vector<Int> x(n, Int(0));
      while (true) {
        int i = 0;
        while (i < n) {
          x[i] += Int(1);
          if (x[i] < orders[i]) break;
          x[i] = Int(0);
          ++i;
        }
        if (i == n) break;
        ++rep.tested;
        if (!test(L, x)) {
          rep.status = SeparationReport::Status::not_separated;
          rep.detail = "degree " + std::to_string(L.degree) + " configuration pairs trivially with every observable";
          return rep;
        }
      }
    } else {
      if (n == 0) continue;
      for (std::uint64_t s = 0; s < opt.samples; ++s) {
        std::vector<Int> x(n);
        bool nonzero = false;
        while (!nonzero) {
          for (int i = 0; i < n; ++i) {
            x[i] = Int(static_cast<long long>(rng() % static_cast<std::uint64_t>(orders[i].small())));
            nonzero |= !x[i].is_zero();
          }
        }
        ++rep.tested;
        if (!test(L, x)) {
          rep.status = SeparationReport::Status::not_separated;
          rep.detail = "degree " + std::to_string(L.degree) + " configuration pairs trivially with every observable";
          return rep;
        }
      }
    }
  }
  rep.status = SeparationReport::Status::separated;
  rep.detail = exhaustive ? "exhaustive" : "randomized sample";
  return rep;
}

// ---------------------------------------------------------------- functoriality

PushPull pushpull_functoriality(const SimplicialIso &f, const GaugeModel &src, const GaugeModel &tgt) {
  if (f.source != src.complex() || f.target != tgt.complex()) throw StructuralError("isomorphism does not match the models");
  if (!(src.coeff() == tgt.coeff())) throw StructuralError("models use different coefficients");
  const StarPoset &P = src.poset(), &Q = tgt.poset();
  if (P.size() != Q.size()) throw StructuralError("star posets differ in size");
  std::vector<int> obj(P.size());
  for (int U = 0; U < P.size(); ++U) {
    obj[U] = Q.find(f.apply(P.object(U)));
    if (obj[U] < 0) throw StructuralError("image of a star is not a star");
  }
  const ComplexPtr &K = src.complex(), &L = tgt.complex();
  // (target position, sign) of the image of a k-simplex of U inside f(U)
  auto image = [&](int U, int k, int pos) {
    const Simplex &s = K->simplex(k, P.object(U).indices(k)[pos]);
    int g = L->index_of(f.apply(s));
    return std::make_pair(Q.object(obj[U]).position(k, g), f.orientation(s));
  };
  Matrix pull0(src.config_ambient0(), tgt.config_ambient0()), pull1(src.config_ambient1(), tgt.config_ambient1());
  for (int U = 0; U < P.size(); ++U) {
    for (int e = 0; e < P.object(U).count(1); ++e) {
      auto [p, sgn] = image(U, 1, e);
      pull0.set(src.offset_A(U) + e, tgt.offset_A(obj[U]) + p, Int(sgn));
    }
    for (int v = 0; v < P.object(U).count(0); ++v) {
      auto [p, sgn] = image(U, 0, v);
      pull1.set(src.offset_g(U) + v, tgt.offset_g(obj[U]) + p, Int(sgn));
    }
  }
  for (std::size_t k = 0; k < src.pairs().size(); ++k) {
    int U = src.pairs()[k][0], V = src.pairs()[k][1];
    int kk = tgt.pair_index(obj[U], obj[V]);
    if (kk < 0) throw StructuralError("isomorphism does not preserve the star order");
    for (int v = 0; v < P.object(U).count(0); ++v) {
      auto [p, sgn] = image(U, 0, v);
      pull0.set(src.offset_gpair(static_cast<int>(k)) + v, tgt.offset_gpair(kk) + p, Int(sgn));
    }
  }
  PushPull out;
  out.pull_ambient = {{0, pull0}, {1, pull1}};
  out.pull = realize_ambient_map(tgt.extended_config_direct(), src.extended_config_direct(), out.pull_ambient);
  if (!src.coeff().is_Z()) {
    // pushforward is the transpose: chains move the way configurations are pulled back
    Matrix push0 = pull0.transpose(), pushm1 = pull1.transpose();
    const ChainComplex &Os = src.extended_obs_direct(), &Ot = tgt.extended_obs_direct();
    Matrix rel = Ot.realization(0).quot->projection.matrix() * push0 * src.obs_relations();
    if (!GroupHom(src.coeff().group(src.obs_relations().cols()), Ot.group(0), rel).is_zero())
      throw std::logic_error("pushforward does not preserve the relations");
    out.push_ambient = {{0, push0}, {-1, pushm1}};
    out.push = realize_ambient_map(Os, Ot, out.push_ambient);
  }
  return out;
}

// ---------------------------------------------------------------- free functions

ChainComplex extended_config(const ComplexPtr &K, const CoeffGroup &G) { return GaugeModel(K, G).extended_config(); }
ChainComplex extended_config_direct(const ComplexPtr &K, const CoeffGroup &G) { return GaugeModel(K, G).extended_config_direct(); }
ChainComplex extended_obs(const ComplexPtr &K, const CoeffGroup &G) { return GaugeModel(K, G).extended_obs(); }
ChainComplex extended_obs_direct(const ComplexPtr &K, const CoeffGroup &G) { return GaugeModel(K, G).extended_obs_direct(); }
ChainComplex deligne_complex(const ComplexPtr &K, const CoeffGroup &G) { return GaugeModel(K, G).deligne(); }

} // namespace artifact
