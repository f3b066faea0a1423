#pragma once

#include "artifact/local.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace artifact {

class FinitePoset {
public:
  FinitePoset() = default;
  // leq must be a partial order (checked)
  FinitePoset(std::vector<std::string> names, std::vector<std::vector<char>> leq);
  static FinitePoset from_stars(const StarPoset &P);
  static FinitePoset discrete(int n);
  static FinitePoset chain(int n); // 0 < 1 < ... < n-1

  int size() const { return static_cast<int>(names_.size()); }
  const std::string &name(int i) const { return names_.at(i); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  const std::vector<std::pair<int, int>> &hasse() const { return hasse_; }
  // strictly increasing chains with n arrows
  std::vector<std::vector<int>> chains(int n) const;
  // weakly increasing chains with n arrows (identities allowed)
  std::vector<std::vector<int>> weak_chains(int n) const;
  std::string chain_name(const std::vector<int> &c) const;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::pair<int, int>> hasse_;
};

enum class Variance { covariant, contravariant };

// Values on objects, maps stored on covering relations only. For a covariant
// diagram the map of a <= b goes value(a) -> value(b), otherwise value(b) -> value(a).
class Diagram {
public:
  Diagram(std::shared_ptr<const FinitePoset> shape, Variance variance, std::vector<ChainComplex> values);

  const FinitePoset &shape() const { return *shape_; }
  std::shared_ptr<const FinitePoset> shape_ptr() const { return shape_; }
  Variance variance() const { return variance_; }
  const ChainComplex &value(int i) const { return values_.at(i); }
  void set_hasse_map(int a, int b, ChainMap f);
  const ChainMap &hasse_map(int a, int b) const;
  // composite along the first covering path from a to b
  ChainMap map(int a, int b) const;
  // [lo, hi] over all values
  std::pair<int, int> degree_range() const;

private:
  std::shared_ptr<const FinitePoset> shape_;
  Variance variance_;
  std::vector<ChainComplex> values_;
  std::map<std::pair<int, int>, ChainMap> hasse_maps_;
  mutable std::map<std::pair<int, int>, ChainMap> cache_;
};

// Checks every covering map is a chain map between the right values and every
// composite a <= b <= c agrees; the first failure is described in `why`.
bool verify_diagram(const Diagram &D, std::string *why = nullptr);

struct DiagramMorphism {
  std::vector<ChainMap> components;
};
bool verify_morphism(const Diagram &from, const Diagram &to, const DiagramMorphism &m, std::string *why = nullptr);

// Local configuration complexes with restrictions (contravariant).
Diagram config_diagram(const StarPoset &P, const CoeffGroup &G);
// Local observable complexes with extensions by zero (covariant); G must be Z/q.
Diagram obs_diagram(const StarPoset &P, const CoeffGroup &G);
// Constant diagram at A placed in degree n (identity maps).
Diagram constant_diagram(std::shared_ptr<const FinitePoset> shape, Variance variance, const FgAbGroup &A, int n);

} // namespace artifact
