#pragma once

#include "artifact/abelian.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace artifact {

// How a degree of a complex sits inside a larger, labeled group: either it is
// that group, a kernel inside it, or a cokernel of a map into it.
struct Realization {
  enum class Kind { direct, sub, quotient } kind = Kind::direct;
  FgAbGroup ambient;
  std::shared_ptr<const KernelResult> sub;
  std::shared_ptr<const CokernelResult> quot;

  // ambient coordinates of an element of the degree (section for quotients)
  std::vector<Int> to_ambient(const std::vector<Int> &x) const;
  // degree coordinates of an ambient element (must lie in the subgroup for kind sub)
  std::vector<Int> from_ambient(const std::vector<Int> &a) const;
};

// Bounded chain complex C_lo ... C_hi with differentials C_n -> C_{n-1}.
class ChainComplex {
public:
  ChainComplex() = default;
  // diffs[k] is the differential out of degree lo + k + 1
  ChainComplex(int lo, std::vector<FgAbGroup> groups, std::vector<GroupHom> diffs, bool check = true);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(groups_.size()) - 1; }
  bool in_range(int n) const { return n >= lo() && n <= hi(); }
  const FgAbGroup &group(int n) const;
  GroupHom diff(int n) const;

  bool is_complex() const;
  // degree realization; defaults to direct
  Realization realization(int n) const;
  void set_realization(int n, Realization r) { real_[n] = std::move(r); }

private:
  int lo_ = 0;
  std::vector<FgAbGroup> groups_;
  std::vector<GroupHom> diffs_;
  std::map<int, Realization> real_;
};

struct ChainMap {
  ChainComplex source, target;
  std::map<int, GroupHom> components; // missing degrees are zero

  GroupHom at(int n) const;
  static ChainMap identity(const ChainComplex &c);
};

ChainMap compose(const ChainMap &g, const ChainMap &f);
ChainMap operator-(const ChainMap &f, const ChainMap &g);

struct ChainHomotopy {
  ChainMap f, g;
  std::map<int, GroupHom> components; // h_n : C_n -> D_{n+1}

  GroupHom at(int n) const;
};

// Bigraded groups over a finite rectangle with commuting squares; vertical
// maps go (p, q) -> (p - 1, q), horizontal maps (p, q) -> (p, q - 1).
class DoubleComplex {
public:
  enum class Direction { lower_p };
  DoubleComplex(int p0, int p1, int q0, int q1);

  int p0() const { return p0_; }
  int p1() const { return p1_; }
  int q0() const { return q0_; }
  int q1() const { return q1_; }
  Direction vertical_direction() const { return Direction::lower_p; }

  const FgAbGroup &group(int p, int q) const;
  void set_group(int p, int q, FgAbGroup g);
  GroupHom horizontal(int p, int q) const; // (p,q) -> (p,q-1)
  GroupHom vertical(int p, int q) const;   // (p,q) -> (p-1,q)
  void set_horizontal(int p, int q, GroupHom h);
  void set_vertical(int p, int q, GroupHom v);

  // rows and columns square to zero and all squares commute; message says where not
  bool check(std::string *why = nullptr) const;

private:
  int idx(int p, int q) const;
  int p0_, p1_, q0_, q1_;
  std::vector<FgAbGroup> groups_;
  std::vector<std::unique_ptr<GroupHom>> h_, v_;
};

enum class SumMode { product, coproduct };
enum class Truncation { none, nonneg, nonpos };

// delta = delta_v + (-1)^p delta_h; degree-0 truncation by kernel (nonneg) or cokernel (nonpos)
ChainComplex total_complex(const DoubleComplex &d, SumMode mode, Truncation t);

struct HomologyAt {
  int degree = 0;
  FgAbGroup group;
  std::shared_ptr<const KernelResult> cycles;
  std::shared_ptr<const CokernelResult> classes; // cokernel of boundaries -> cycles

  std::vector<Int> class_of(const std::vector<Int> &cycle) const;
  std::vector<Int> representative(int gen) const;
};

HomologyAt homology_at(const ChainComplex &c, int n);
std::map<int, FgAbGroup> homology(const ChainComplex &c);
std::string homology_report(const std::map<int, FgAbGroup> &h);

bool verify_chain_map(const ChainMap &f, std::string *why = nullptr);
bool verify_homotopy(const ChainHomotopy &h, std::string *why = nullptr);

ChainComplex mapping_cone(const ChainMap &f);
GroupHom induced_map(const ChainMap &f, int n);
// H_n(f) iso in every degree; cross-checked against acyclicity of the mapping
// cone (throws std::logic_error if the two disagree)
bool quasi_iso_check(const ChainMap &f);

} // namespace artifact
