#include "artifact/local.hpp"

namespace artifact {

namespace {
void require_cyclic(const CoeffGroup &G) {
  if (G.is_Z()) throw StructuralError("observables are undefined for Z coefficients; use Z/q");
}
} // namespace

ChainComplex local_config_complex(const Subcomplex &U, const CoeffGroup &G) {
  FgAbGroup c0 = cochain_group(U, 0, G), c1 = cochain_group(U, 1, G);
  return ChainComplex(0, {c1, c0}, {-coboundary(U, 0, G)});
}

ChainComplex local_obs_complex(const Subcomplex &U, const CoeffGroup &G) {
  require_cyclic(G);
  FgAbGroup c0 = cochain_group(U, 0, G), c1 = cochain_group(U, 1, G);
  GroupHom d = boundary(U, 1, G);
  return ChainComplex(-1, {c0, c1}, {kObsSign == 1 ? d : -d});
}

ChainMap config_restriction(const Subcomplex &from, const Subcomplex &to, const CoeffGroup &G) {
  return ChainMap{local_config_complex(from, G), local_config_complex(to, G),
                  {{0, restrict_cochains(from, to, 1, G)}, {1, restrict_cochains(from, to, 0, G)}}};
}

ChainMap obs_extension(const Subcomplex &from, const Subcomplex &to, const CoeffGroup &G) {
  return ChainMap{local_obs_complex(from, G), local_obs_complex(to, G),
                  {{0, extend_by_zero(from, to, 1, G)}, {-1, extend_by_zero(from, to, 0, G)}}};
}

PairingValue PairingValue::make(const Int &num, const Int &den) {
  if (den.sign() <= 0) throw StructuralError("pairing denominator must be positive");
  Int n = mod(num, den);
  Int g = gcd(n, den);
  if (n.is_zero()) return PairingValue{};
  return PairingValue{n / g, den / g};
}

PairingValue PairingValue::operator+(const PairingValue &o) const {
  return make(num * o.den + o.num * den, den * o.den);
}

PairingValue PairingValue::operator-() const { return make(-num, den); }

std::string PairingValue::str() const { return num.is_zero() ? "0" : num.str() + "/" + den.str(); }

PairingValue dot_pairing(const std::vector<Int> &a, const std::vector<Int> &b, const CoeffGroup &G) {
  require_cyclic(G);
  if (a.size() != b.size()) throw StructuralError("pairing: coordinate counts differ");
  Int s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return PairingValue::make(s, G.q);
}

PairingValue local_pairing(const Subcomplex &U, const CoeffGroup &G, const LocalObs &F, const LocalConfig &B) {
  if (static_cast<int>(F.phi.size()) != U.count(1) || static_cast<int>(B.A.size()) != U.count(1) ||
      static_cast<int>(F.chi.size()) != U.count(0) || static_cast<int>(B.g.size()) != U.count(0))
    throw StructuralError("pairing: element does not live on this star");
  return dot_pairing(F.phi, B.A, G) + dot_pairing(F.chi, B.g, G);
}

} // namespace artifact
