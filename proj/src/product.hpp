#pragma once

// Internal: finite products of chain complexes indexed by poset chains.

#include "artifact/diagrams.hpp"

#include <map>
#include <string>
#include <vector>

namespace artifact::detail {

class ChainProduct {
public:
  // factor k is value(owner[k]) with labels prefixed by "name[k]:"
  ChainProduct(const Diagram &D, std::vector<std::vector<int>> chains, std::vector<int> owner, std::vector<std::string> names,
               int qlo, int qhi);

  int size() const { return static_cast<int>(chains_.size()); }
  int find(const std::vector<int> &chain) const; // -1 if absent
  const std::vector<int> &chain(int k) const { return chains_[k]; }
  int owner(int k) const { return owner_[k]; }
  int qlo() const { return qlo_; }
  int qhi() const { return qhi_; }

  const FgAbGroup &group(int q) const;
  int offset(int q, int k) const { return sums_.at(q).offsets[k]; }
  int concat_dim(int q) const { return sums_.at(q).concat_dim; }
  // canonical hom from a matrix in concatenated coordinates (target rows, source cols)
  static GroupHom convert(const ChainProduct &src, int qs, const ChainProduct &dst, int qt, const Matrix &concat);
  ChainComplex complex(const Diagram &D) const;

private:
  std::vector<std::vector<int>> chains_;
  std::vector<int> owner_;
  std::map<std::vector<int>, int> index_;
  int qlo_, qhi_;
  std::map<int, DirectSum> sums_;
};

std::vector<int> drop(const std::vector<int> &c, int i);
std::vector<int> repeat(const std::vector<int> &c, int i);

} // namespace artifact::detail
