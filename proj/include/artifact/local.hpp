#pragma once

#include "artifact/simplicial.hpp"

#include <string>
#include <vector>

namespace artifact {

// Sign s in the local observable differential chi + phi -> s * boundary(phi).
// Fixed by the adjunction <delta* F, B> = <F, delta B>.
constexpr int kObsSign = -1;

// Degree 1: C^0(U; G), degree 0: C^1(U; G), differential -coboundary.
ChainComplex local_config_complex(const Subcomplex &U, const CoeffGroup &G);
// Degree 0: 1-chains, degree -1: 0-chains, differential kObsSign * boundary. G must be Z/q.
ChainComplex local_obs_complex(const Subcomplex &U, const CoeffGroup &G);

// Restriction of local configurations from `from` to the smaller `to`.
ChainMap config_restriction(const Subcomplex &from, const Subcomplex &to, const CoeffGroup &G);
// Extension by zero of local observables from `from` into the larger `to`.
ChainMap obs_extension(const Subcomplex &from, const Subcomplex &to, const CoeffGroup &G);

// An element of Q/Z, stored as num/den in lowest terms with 0 <= num < den.
struct PairingValue {
  Int num{0}, den{1};

  static PairingValue make(const Int &num, const Int &den);
  PairingValue operator+(const PairingValue &o) const;
  PairingValue operator-() const;
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const PairingValue &o) const { return num == o.num && den == o.den; }
  std::string str() const;
};

struct LocalConfig {
  std::vector<Int> A; // degree 0, on 1-simplices
  std::vector<Int> g; // degree 1, on vertices
};

struct LocalObs {
  std::vector<Int> phi; // degree 0, on 1-simplices
  std::vector<Int> chi; // degree -1, on vertices
};

// (phi . A + chi . g) / q mod 1
PairingValue local_pairing(const Subcomplex &U, const CoeffGroup &G, const LocalObs &F, const LocalConfig &B);
PairingValue dot_pairing(const std::vector<Int> &a, const std::vector<Int> &b, const CoeffGroup &G);

} // namespace artifact
