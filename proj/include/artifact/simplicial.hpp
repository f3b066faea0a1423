#pragma once

#include "artifact/abelian.hpp"
#include "artifact/complexes.hpp"

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients: Z (q == 0) or Z/q with q >= 2.
struct CoeffGroup {
  Int q{0};

  static CoeffGroup Z() { return {}; }
  static CoeffGroup cyclic(long long q);
  static CoeffGroup parse(const std::string &s); // "Z" or "Z/<q>"
  bool is_Z() const { return q.is_zero(); }
  std::string str() const;
  FgAbGroup group(int n, std::vector<std::string> labels = {}) const { return FgAbGroup::homogeneous(n, q, std::move(labels)); }
  bool operator==(const CoeffGroup &o) const { return q == o.q; }
};

using Simplex = std::vector<int>; // sorted vertex ids

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

class SimplicialComplex {
public:
  // maximal simplices given by vertex labels; labels that all parse as integers
  // are ordered numerically, otherwise lexicographically
  static ComplexPtr from_maximal(const std::vector<std::vector<std::string>> &maximal);
  static ComplexPtr parse(std::istream &in);
  static ComplexPtr load(const std::string &path);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  const std::string &vertex_label(int v) const { return labels_.at(v); }
  int vertex_id(const std::string &label) const; // -1 if absent
  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  int count(int k) const { return (k < 0 || k > dim()) ? 0 : static_cast<int>(simplices_[k].size()); }
  const std::vector<Simplex> &simplices(int k) const;
  const Simplex &simplex(int k, int i) const { return simplices_.at(k).at(i); }
  int index_of(const Simplex &s) const; // -1 if absent
  std::string simplex_label(const Simplex &s) const;
  const std::vector<std::vector<std::string>> &maximal_labels() const { return maximal_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::string>> maximal_;
};

// A face-closed set of simplices of a fixed ambient complex.
class Subcomplex {
public:
  Subcomplex() = default;
  Subcomplex(ComplexPtr K, const std::vector<Simplex> &generators); // closure of the generators
  static Subcomplex full(ComplexPtr K);

  const ComplexPtr &complex() const { return K_; }
  int dim() const;
  int count(int k) const { return (k < 0 || k >= static_cast<int>(idx_.size())) ? 0 : static_cast<int>(idx_[k].size()); }
  const std::vector<int> &indices(int k) const;
  bool has(int k, int global) const;
  // basis position of a global k-simplex index, -1 if absent
  int position(int k, int global) const;
  bool empty() const { return count(0) == 0; }
  std::size_t size() const;

  bool subset_of(const Subcomplex &o) const;
  bool operator==(const Subcomplex &o) const { return idx_ == o.idx_; }
  Subcomplex intersect(const Subcomplex &o) const;
  std::string str() const;

private:
  void build_positions();
  ComplexPtr K_;
  std::vector<std::vector<int>> idx_;
  std::vector<std::vector<int>> pos_;
};

struct Star {
  Simplex center;
  Subcomplex sub;
};

Star closed_star(const ComplexPtr &K, const Simplex &sigma);

// reduced homology over Z vanishes
bool is_acyclic(const Subcomplex &B);

class StarPoset {
public:
  static StarPoset build(const ComplexPtr &K);

  const ComplexPtr &complex() const { return K_; }
  int size() const { return static_cast<int>(objects_.size()); }
  const Subcomplex &object(int i) const { return objects_.at(i); }
  const std::vector<Simplex> &centers(int i) const { return centers_.at(i); }
  std::string name(int i) const;
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  const std::vector<std::pair<int, int>> &hasse() const { return hasse_; }
  // strictly increasing chains U0 < U1 < ... < Un (n arrows)
  std::vector<std::vector<int>> chains(int n) const;
  // the object equal to all of K, if there is one
  int top() const;
  int find(const Subcomplex &s) const; // -1 if not an object

private:
  ComplexPtr K_;
  std::vector<Subcomplex> objects_;
  std::vector<std::vector<Simplex>> centers_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::pair<int, int>> hasse_;
};

// Cochains and chains on a subcomplex, basis = k-simplices in global order.
FgAbGroup cochain_group(const Subcomplex &B, int k, const CoeffGroup &G);
GroupHom coboundary(const Subcomplex &B, int k, const CoeffGroup &G);   // C^k -> C^{k+1}
GroupHom boundary(const Subcomplex &B, int k, const CoeffGroup &G);     // C_k -> C_{k-1}
GroupHom restrict_cochains(const Subcomplex &from, const Subcomplex &to, int k, const CoeffGroup &G);
GroupHom extend_by_zero(const Subcomplex &from, const Subcomplex &to, int k, const CoeffGroup &G);

// Cochain complex with C^k placed in degree -k; H_{-k} is H^k(B; G).
ChainComplex cochain_complex(const Subcomplex &B, const CoeffGroup &G);
std::map<int, FgAbGroup> simplicial_cohomology(const Subcomplex &B, const CoeffGroup &G);

// A bijective simplicial map K -> K' with simplicial inverse.
struct SimplicialIso {
  ComplexPtr source, target;
  std::vector<int> vertex_map;

  static SimplicialIso make(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map);
  Simplex apply(const Simplex &s) const;
  Subcomplex apply(const Subcomplex &s) const;
  // sign of the permutation relating the sorted image to the image of a sorted simplex
  int orientation(const Simplex &s) const;
  SimplicialIso inverse() const;
};
SimplicialIso compose(const SimplicialIso &g, const SimplicialIso &f);

} // namespace artifact
