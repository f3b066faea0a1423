#pragma once

#include "artifact/complexes.hpp"

#include <string>
#include <vector>

namespace artifact {

// Levels 0..cutoff of a simplicial abelian group.
struct SimplicialGroup {
  std::vector<FgAbGroup> levels;
  std::vector<std::vector<GroupHom>> faces;        // faces[n][i] : X_n -> X_{n-1}, 1 <= n, 0 <= i <= n
  std::vector<std::vector<GroupHom>> degeneracies; // degeneracies[n][i] : X_n -> X_{n+1}, n < cutoff, 0 <= i <= n
  bool degenerate_above = false;                   // every level above the cutoff is degenerate

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  bool check_identities(std::string *why = nullptr) const;
};

struct CosimplicialGroup {
  std::vector<FgAbGroup> levels;
  std::vector<std::vector<GroupHom>> cofaces;        // cofaces[n][i] : X^{n-1} -> X^n, 1 <= n, 0 <= i <= n
  std::vector<std::vector<GroupHom>> codegeneracies; // codegeneracies[n][j] : X^{n+1} -> X^n, n < cutoff, 0 <= j <= n
  bool degenerate_above = false;

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  bool check_identities(std::string *why = nullptr) const;
};

// Same, with chain complexes as levels and chain maps as structure maps.
struct SimplicialChainObject {
  std::vector<ChainComplex> levels;
  std::vector<std::vector<ChainMap>> faces;
  std::vector<std::vector<ChainMap>> degeneracies;
  bool degenerate_above = false;

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  std::pair<int, int> internal_range() const;
  SimplicialGroup slice(int q) const;
};

struct CosimplicialChainObject {
  std::vector<ChainComplex> levels;
  std::vector<std::vector<ChainMap>> cofaces;
  std::vector<std::vector<ChainMap>> codegeneracies;
  bool degenerate_above = false;

  int cutoff() const { return static_cast<int>(levels.size()) - 1; }
  std::pair<int, int> internal_range() const;
  CosimplicialGroup slice(int q) const;
};

// Degree n: X_n modulo degenerate elements, differential sum (-1)^i d_i.
// top defaults to the cutoff; asking beyond it needs degenerate_above.
ChainComplex normalized_moore(const SimplicialGroup &S, int top = -1);
// Degree -n: intersection of the codegeneracy kernels in X^n.
ChainComplex conormalized_moore(const CosimplicialGroup &C, int top = -1);

// Level-wise versions: p = n (resp. -n), q = internal degree.
DoubleComplex normalized_moore(const SimplicialChainObject &S, int top = -1);
DoubleComplex conormalized_moore(const CosimplicialChainObject &C, int top = -1);

// Maps induced on quotients or subgroups.
GroupHom induced_on_cokernels(const CokernelResult &from, const CokernelResult &to, const GroupHom &f);
GroupHom induced_on_kernels(const KernelResult &from, const KernelResult &to, const GroupHom &f);

// Nerve of G acting on X through A -> A + tau(g); level n is G^n x X with
// coordinates (g1, ..., gn, A), levels 0..cutoff, degenerate above.
SimplicialGroup action_groupoid_nerve(const FgAbGroup &G, const FgAbGroup &X, const GroupHom &tau, int cutoff = 3);

} // namespace artifact
