#include "product.hpp"

namespace artifact::detail {

ChainProduct::ChainProduct(const Diagram &D, std::vector<std::vector<int>> chains, std::vector<int> owner,
                           std::vector<std::string> names, int qlo, int qhi)
    : chains_(std::move(chains)), owner_(std::move(owner)), qlo_(qlo), qhi_(qhi) {
  for (int k = 0; k < size(); ++k) index_[chains_[k]] = k;
  for (int q = qlo; q <= qhi; ++q) {
    std::vector<FgAbGroup> parts;
    for (int k = 0; k < size(); ++k) {
      const FgAbGroup &g = D.value(owner_[k]).group(q);
      std::vector<std::string> labels;
      for (int i = 0; i < g.gens(); ++i) labels.push_back(names[k] + ":" + g.label(i));
      parts.push_back(g.with_labels(labels));
    }
    sums_.emplace(q, make_direct_sum(parts));
  }
}

int ChainProduct::find(const std::vector<int> &chain) const {
  auto it = index_.find(chain);
  return it == index_.end() ? -1 : it->second;
}

const FgAbGroup &ChainProduct::group(int q) const {
  static const FgAbGroup trivial;
  auto it = sums_.find(q);
  return it == sums_.end() ? trivial : it->second.group;
}

GroupHom ChainProduct::convert(const ChainProduct &src, int qs, const ChainProduct &dst, int qt, const Matrix &concat) {
  auto si = src.sums_.find(qs), ti = dst.sums_.find(qt);
  if (si == src.sums_.end() || ti == dst.sums_.end()) return GroupHom::zero(src.group(qs), dst.group(qt));
  const DirectSum &s = si->second, &t = ti->second;
  Matrix m = s.trivial_basis && t.trivial_basis ? concat : t.to_canonical * concat * s.from_canonical;
  return GroupHom(s.group, t.group, m, false);
}

ChainComplex ChainProduct::complex(const Diagram &D) const {
  std::vector<FgAbGroup> groups;
  std::vector<GroupHom> diffs;
  for (int q = qlo_; q <= qhi_; ++q) groups.push_back(group(q));
  for (int q = qlo_ + 1; q <= qhi_; ++q) {
    Matrix m(concat_dim(q - 1), concat_dim(q));
    for (int k = 0; k < size(); ++k) m.add_block(offset(q - 1, k), offset(q, k), D.value(owner_[k]).diff(q).matrix());
    diffs.push_back(convert(*this, q, *this, q - 1, m));
  }
  return ChainComplex(qlo_, groups, diffs, false);
}

std::vector<int> drop(const std::vector<int> &c, int i) {
  std::vector<int> out = c;
  out.erase(out.begin() + i);
  return out;
}

std::vector<int> repeat(const std::vector<int> &c, int i) {
  std::vector<int> out = c;
  out.insert(out.begin() + i, c[i]);
  return out;
}

} // namespace artifact::detail
