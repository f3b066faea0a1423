#include "artifact/smith.hpp"

#include <map>
#include <set>

namespace artifact {

namespace {

SparseVec unit(int i) { return SparseVec{{i, Int(1)}}; }

class Eliminator {
public:
  Eliminator(const Matrix &M, const ElimOptions &opt)
      : opt_(opt), rows_(M.rows()), cols_(M.cols()) {
    for (int i = 0; i < M.rows(); ++i) {
      for (const auto &[j, v] : M.row(i)) {
        Int x = v;
        norm(x);
        if (x.is_zero()) continue;
        rows_[i].emplace_hint(rows_[i].end(), j, std::move(x));
        cols_[j].insert(i);
      }
      if (!rows_[i].empty()) active_.insert(i);
    }
    if (opt.want_U) for (int i = 0; i < M.rows(); ++i) U_.push_back(unit(i));
    if (opt.want_Uinv) for (int i = 0; i < M.rows(); ++i) Uinv_.push_back(unit(i));
    if (opt.want_V) for (int j = 0; j < M.cols(); ++j) V_.push_back(unit(j));
    if (opt.want_Vinv) for (int j = 0; j < M.cols(); ++j) Vinv_.push_back(unit(j));
  }

  Elimination run() {
    std::vector<int> prow, pcol;
    std::vector<Int> piv;
    while (true) {
      int pr = -1, pc = -1;
      Int best;
      for (int i : active_) {
        for (const auto &[c, v] : rows_[i]) {
          Int a = abs(v);
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = c;
          }
          if (best.is_one()) break;
        }
        if (pr >= 0 && best.is_one()) break;
      }
      if (pr < 0) break;
      const Int p = rows_[pr].at(pc);
      bool dirty = false;

      std::vector<int> others(cols_[pc].begin(), cols_[pc].end());
      for (int i : others) {
        if (i == pr) continue;
        Int k = rows_[i].at(pc) / p;
        if (!k.is_zero()) row_add(i, -k, pr);
        if (rows_[i].count(pc)) dirty = true;
        if (rows_[i].empty()) active_.erase(i);
      }
      if (dirty) continue;

      std::vector<std::pair<int, Int>> ents(rows_[pr].begin(), rows_[pr].end());
      for (const auto &[j, a] : ents) {
        if (j == pc) continue;
        Int k = a / p;
        if (!k.is_zero()) col_add(j, -k, pc);
        if (rows_[pr].count(j)) dirty = true;
      }
      if (dirty) continue;

      if (opt_.chain && opt_.modulus.is_zero() && !abs(p).is_one()) {
        int bad = -1;
        for (int i : active_) {
          if (i == pr) continue;
          for (const auto &[c, v] : rows_[i])
            if (!(v % p).is_zero()) {
              bad = i;
              break;
            }
          if (bad >= 0) break;
        }
        if (bad >= 0) {
          row_add(pr, Int(1), bad);
          continue;
        }
      }

      Int pv = p;
      if (opt_.modulus.is_zero() && p.sign() < 0) {
        negate_row(pr);
        pv = -p;
      }
      prow.push_back(pr);
      pcol.push_back(pc);
      piv.push_back(pv);
      active_.erase(pr);
      rows_[pr].clear();
      cols_[pc].clear();
    }
    return finish(prow, pcol, piv);
  }

private:
  void norm(Int &x) const {
    if (!opt_.modulus.is_zero()) x = sym_mod(x, opt_.modulus);
  }

  void acc_axpy(SparseVec &x, const Int &k, const SparseVec &y) {
    axpy(x, k, y);
    if (opt_.reduce_accumulators && !opt_.modulus.is_zero()) {
      SparseVec out;
      out.reserve(x.size());
      for (auto &[i, v] : x) {
        Int w = sym_mod(v, opt_.modulus);
        if (!w.is_zero()) out.emplace_back(i, std::move(w));
      }
      x = std::move(out);
    }
  }

  // row_i += k * row_r
  void row_add(int i, const Int &k, int r) {
    auto &ri = rows_[i];
    for (const auto &[c, v] : rows_[r]) {
      auto it = ri.find(c);
      if (it == ri.end()) {
        Int x = k * v;
        norm(x);
        if (!x.is_zero()) {
          ri.emplace(c, std::move(x));
          cols_[c].insert(i);
        }
      } else {
        it->second += k * v;
        norm(it->second);
        if (it->second.is_zero()) {
          ri.erase(it);
          cols_[c].erase(i);
        }
      }
    }
    if (!ri.empty()) active_.insert(i);
    if (opt_.want_U) acc_axpy(U_[i], k, U_[r]);
    if (opt_.want_Uinv) acc_axpy(Uinv_[r], -k, Uinv_[i]);
  }

  // col_j += k * col_c
  void col_add(int j, const Int &k, int c) {
    for (int i : cols_[c]) {
      auto &ri = rows_[i];
      Int add = k * ri.at(c);
      auto it = ri.find(j);
      if (it == ri.end()) {
        norm(add);
        if (!add.is_zero()) {
          ri.emplace(j, std::move(add));
          cols_[j].insert(i);
        }
      } else {
        it->second += add;
        norm(it->second);
        if (it->second.is_zero()) {
          ri.erase(it);
          cols_[j].erase(i);
        }
      }
    }
    if (opt_.want_V) acc_axpy(V_[j], k, V_[c]);
    if (opt_.want_Vinv) acc_axpy(Vinv_[c], -k, Vinv_[j]);
  }

  void negate_row(int r) {
    for (auto &[c, v] : rows_[r]) v = -v;
    if (opt_.want_U)
      for (auto &[c, v] : U_[r]) v = -v;
    if (opt_.want_Uinv)
      for (auto &[c, v] : Uinv_[r]) v = -v;
  }

  static std::vector<int> full_order(const std::vector<int> &first, int n) {
    std::vector<char> used(n, 0);
    std::vector<int> order = first;
    for (int x : first) used[x] = 1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) order.push_back(i);
    return order;
  }

  Elimination finish(const std::vector<int> &prow, const std::vector<int> &pcol, std::vector<Int> piv) {
    Elimination e;
    e.rows = static_cast<int>(rows_.size());
    e.cols = static_cast<int>(cols_.size());
    e.pivots = std::move(piv);
    auto rp = full_order(prow, e.rows);
    auto cp = full_order(pcol, e.cols);
    // rows of U and columns of Uinv are indexed by matrix rows; relabel them
    auto relabel_outer = [](std::vector<SparseVec> &acc, const std::vector<int> &perm) {
      std::vector<SparseVec> out(perm.size());
      for (std::size_t k = 0; k < perm.size(); ++k) out[k] = std::move(acc[perm[k]]);
      return out;
    };
    if (opt_.want_U) e.U_rows = relabel_outer(U_, rp);
    if (opt_.want_Uinv) e.Uinv_cols = relabel_outer(Uinv_, rp);
    if (opt_.want_V) e.V_cols = relabel_outer(V_, cp);
    if (opt_.want_Vinv) e.Vinv_rows = relabel_outer(Vinv_, cp);
    return e;
  }

  ElimOptions opt_;
  std::vector<std::map<int, Int>> rows_;
  std::vector<std::set<int>> cols_;
  std::set<int> active_;
  std::vector<SparseVec> U_, Uinv_, V_, Vinv_;
};

} // namespace

Elimination eliminate(const Matrix &M, const ElimOptions &opt) { return Eliminator(M, opt).run(); }

SmithResult smith_normal_form(const Matrix &M) {
  ElimOptions opt;
  opt.want_U = opt.want_V = true;
  Elimination e = eliminate(M, opt);
  SmithResult r;
  r.rank = static_cast<int>(e.pivots.size());
  r.diagonal = e.pivots;
  r.U = Matrix(M.rows(), M.rows());
  for (int i = 0; i < M.rows(); ++i) r.U.row_mut(i) = e.U_rows[i];
  r.V = Matrix::from_columns(M.cols(), e.V_cols);
  r.S = Matrix(M.rows(), M.cols());
  for (int k = 0; k < r.rank; ++k) r.S.set(k, k, e.pivots[k]);
  return r;
}

} // namespace artifact
