#pragma once

#include "artifact/matrix.hpp"
#include "artifact/smith.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each d_i >= 2.
// Generators are ordered free first, then torsion in chain order.
class FgAbGroup {
public:
  FgAbGroup() = default;
  FgAbGroup(int free_rank, std::vector<Int> torsion, std::vector<std::string> labels = {});

  static FgAbGroup free(int r, std::vector<std::string> labels = {});
  static FgAbGroup cyclic(const Int &d);
  // n copies of Z (order 0) or of Z/order
  static FgAbGroup homogeneous(int n, const Int &order, std::vector<std::string> labels = {});

  int free_rank() const { return free_rank_; }
  const std::vector<Int> &invariant_factors() const { return torsion_; }
  const std::vector<std::string> &labels() const { return labels_; }
  FgAbGroup with_labels(std::vector<std::string> labels) const;
  std::string label(int i) const;

  int gens() const { return free_rank_ + static_cast<int>(torsion_.size()); }
  // 0 for a free generator
  Int order_of(int i) const;
  std::vector<Int> orders() const;
  bool is_trivial() const { return gens() == 0; }
  bool is_torsion() const { return free_rank_ == 0; }
  // lcm of generator orders; 0 if there is a free generator
  Int exponent() const;

  std::vector<Int> reduce(std::vector<Int> coords) const;
  std::string str() const;

  // canonical equality; labels are not compared
  bool operator==(const FgAbGroup &o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }

private:
  int free_rank_ = 0;
  std::vector<Int> torsion_;
  std::vector<std::string> labels_;
};

FgAbGroup direct_sum(const std::vector<FgAbGroup> &parts);

struct GroupElement {
  FgAbGroup group;
  std::vector<Int> coords;

  GroupElement(FgAbGroup g, std::vector<Int> c);
  bool is_zero() const;
  bool operator==(const GroupElement &o) const { return group == o.group && coords == o.coords; }
};

class GroupHom {
public:
  GroupHom() = default;
  // matrix is target.gens() x source.gens(); rows are reduced mod target orders
  GroupHom(FgAbGroup source, FgAbGroup target, Matrix m, bool check = true);

  static GroupHom identity(const FgAbGroup &g);
  static GroupHom zero(const FgAbGroup &s, const FgAbGroup &t);

  const FgAbGroup &source() const { return source_; }
  const FgAbGroup &target() const { return target_; }
  const Matrix &matrix() const { return m_; }

  std::vector<Int> apply(const std::vector<Int> &x) const;
  GroupElement operator()(const GroupElement &x) const;
  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const GroupHom &o) const;

  GroupHom operator+(const GroupHom &o) const;
  GroupHom operator-(const GroupHom &o) const;
  GroupHom operator-() const;

  // throws StructuralError if some torsion generator is sent outside the
  // relation lattice of the target
  static void check_well_defined(const FgAbGroup &s, const FgAbGroup &t, const Matrix &m);

private:
  FgAbGroup source_, target_;
  Matrix m_;
};

// g after f
GroupHom compose(const GroupHom &g, const GroupHom &f);

struct MatrixPresentation {
  int generator_count = 0;
  Matrix relations; // generator_count x (number of relations)
};

FgAbGroup normalize_group(const MatrixPresentation &p);

// A subgroup realized as the kernel of a homomorphism.
struct KernelResult {
  FgAbGroup group;
  GroupHom inclusion;
  // coordinates in `group` of a kernel element given in source coordinates;
  // throws StructuralError if x is not in the kernel
  std::vector<Int> coords(const std::vector<Int> &x) const;
  bool contains(const std::vector<Int> &x) const;

  GroupHom map; // the homomorphism whose kernel this is
  std::function<std::vector<Int>(const std::vector<Int> &)> to_coords;
};

struct CokernelResult {
  FgAbGroup group;
  GroupHom projection;
  // lifts of the canonical generators (target.gens() x group.gens())
  Matrix section;
};

KernelResult hom_kernel(const GroupHom &f);
CokernelResult hom_cokernel(const GroupHom &f);

bool iso_check(const FgAbGroup &a, const FgAbGroup &b);
bool is_isomorphism(const GroupHom &f);
bool is_injective(const GroupHom &f);
bool is_surjective(const GroupHom &f);

// Canonical form of Z^(zeros) + sum Z/orders_i given as a diagonal presentation:
// returns group, projection (old coords -> new) and section (new -> old).
struct DiagonalNormalization {
  FgAbGroup group;
  Matrix projection; // new x old
  Matrix section;    // old x new
};
DiagonalNormalization normalize_diagonal(const std::vector<Int> &orders);

// Direct sum of groups in canonical form. When the concatenated generators are
// already canonical (the common case) both matrices are identities.
struct DirectSum {
  FgAbGroup group;
  std::vector<int> offsets;  // start of each part among the concatenated generators
  int concat_dim = 0;
  bool trivial_basis = true; // concatenation is canonical as is
  Matrix to_canonical;       // group.gens() x concat_dim
  Matrix from_canonical;     // concat_dim x group.gens()
};
DirectSum make_direct_sum(const std::vector<FgAbGroup> &parts);

} // namespace artifact
