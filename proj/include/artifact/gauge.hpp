#pragma once

#include "artifact/hocolimit.hpp"
#include "artifact/holimit.hpp"
#include "artifact/local.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace artifact {

struct PreconditionError : StructuralError {
  using StructuralError::StructuralError;
};

// Elements in ambient coordinates of the hand-built extended complexes.
struct ExtConfigElement {
  int degree = 0;        // 0: (A_U, g_(U<V)), 1: (g_U)
  std::vector<Int> coords;
};

struct ExtObsElement {
  int degree = 0;        // 0: (iota_U phi, iota_(U<V) chi), -1: (iota_U chi)
  std::vector<Int> coords;
};

struct ExplicitIso {
  ChainMap map;
  bool ok = false;
  std::string why;
};

struct EtaTheta {
  ChainMap eta, theta;
  ChainHomotopy h; // eta theta ~ id
};

struct ZetaKappa {
  ChainMap zeta, kappa;
  ChainHomotopy k; // kappa zeta ~ id
};

struct SeparationReport {
  enum class Status { separated, not_separated, inconclusive } status = Status::inconclusive;
  bool exhaustive = false;
  std::uint64_t tested = 0;
  // (degree, configuration in group coordinates, index of a separating observable generator)
  struct Witness {
    int degree;
    std::vector<Int> config;
    int observable;
    PairingValue value;
  };
  std::vector<Witness> witnesses;
  std::string detail;
};

struct SeparationOptions {
  std::uint64_t budget = 1u << 16; // exhaustive when the element count is at most this
  std::uint64_t samples = 0;       // random configurations otherwise (0: report inconclusive)
  std::uint64_t seed = 1;
};

// The discrete gauge model on the star cover of K with coefficients G.
class GaugeModel {
public:
  GaugeModel(ComplexPtr K, CoeffGroup G);

  const ComplexPtr &complex() const { return K_; }
  const StarPoset &poset() const { return P_; }
  const CoeffGroup &coeff() const { return G_; }
  const std::vector<std::vector<int>> &pairs() const { return pairs_; }     // U < V
  const std::vector<std::vector<int>> &triples() const { return triples_; } // U < V < W

  // Engine outputs: holim of the configuration diagram, hocolim of the observable diagram.
  const ChainComplex &extended_config() const;
  const ChainComplex &extended_obs() const;
  // Hand-built versions with labeled ambient coordinates.
  const ChainComplex &extended_config_direct() const;
  const ChainComplex &extended_obs_direct() const;
  const ChainComplex &deligne() const;

  // direct <-> engine, matched on labeled ambient bases
  ExplicitIso config_engine_iso() const;
  ExplicitIso obs_engine_iso() const;

  ChainMap psi() const; // deligne -> extended_config_direct
  ChainMap phi() const; // extended_config_direct -> deligne; PreconditionError names the pair

  EtaTheta eta_theta() const;
  ZetaKappa zeta_kappa() const;

  // ambient membership of a degree-0 configuration
  bool is_config(const std::vector<Int> &ambient0) const;
  PairingValue pairing(const ExtObsElement &F, const ExtConfigElement &B) const;
  // generators of the relation subgroup, as ambient degree-0 observables
  std::vector<std::vector<Int>> relation_generators() const;

  SeparationReport separation_check(const SeparationOptions &opt) const;

  // ambient sizes
  int config_ambient0() const { return a0_; }
  int config_ambient1() const { return a1_; }
  int obs_ambient0() const { return o0_; }
  int obs_ambient_m1() const { return om1_; }
  const Matrix &config_constraints() const { return constraints_; }
  const Matrix &obs_relations() const { return relations_; }

  // block offsets in the ambient coordinates
  int offset_A(int U) const { return offA_[U]; }
  int offset_gpair(int k) const { return offGP_[k]; }
  int offset_g(int U) const { return offG_[U]; }
  int offset_phi(int U) const { return offA_[U]; }
  int offset_chipair(int k) const { return offGP_[k]; }
  int offset_chi(int U) const { return offG_[U]; }
  int pair_index(int U, int V) const; // -1 if not a strict pair

private:
  void build_config();
  void build_obs();
  void build_deligne() const;

  ComplexPtr K_;
  CoeffGroup G_;
  StarPoset P_;
  std::vector<std::vector<int>> pairs_, triples_;
  std::vector<int> offA_, offGP_, offG_;
  int a0_ = 0, a1_ = 0, o0_ = 0, om1_ = 0;
  Matrix constraints_; // rows: conditions on ambient degree 0 configurations
  Matrix delta1_;      // ambient degree 1 -> ambient degree 0
  Matrix relations_;   // columns: relation generators in ambient degree 0 observables
  Matrix obs_delta_;   // ambient degree 0 -> degree -1
  std::vector<std::string> cfg_labels0_, cfg_labels1_, obs_labels0_, obs_labelsm1_;

  mutable std::shared_ptr<ChainComplex> engine_cfg_, engine_obs_, direct_cfg_, direct_obs_, deligne_;
  // Deligne layout
  mutable std::vector<std::pair<int, int>> dpairs_; // ordered, non-empty intersection, U == V allowed
  mutable std::vector<Subcomplex> dmeet_;
  mutable std::vector<int> doff_;
  mutable int dA0_ = 0;
};

// Chain map between realized complexes induced by matching ambient labels
// (rename maps a label of `from` to the corresponding label of `to`); ok when
// every component is an isomorphism and the squares commute.
ExplicitIso labeled_isomorphism(const ChainComplex &from, const ChainComplex &to,
                                const std::function<std::string(const std::string &)> &rename);

// Chain map induced by ambient matrices (one per degree) between realized complexes.
ChainMap realize_ambient_map(const ChainComplex &from, const ChainComplex &to, const std::map<int, Matrix> &ambient);

// Pullback of configurations and pushforward of observables along a simplicial
// isomorphism f : K -> K'. Both models must use the same coefficients.
struct PushPull {
  ChainMap pull; // extended_config_direct(K') -> extended_config_direct(K)
  ChainMap push; // extended_obs_direct(K) -> extended_obs_direct(K')
  std::map<int, Matrix> pull_ambient, push_ambient;
};
PushPull pushpull_functoriality(const SimplicialIso &f, const GaugeModel &source, const GaugeModel &target);

// Free-function forms.
ChainComplex extended_config(const ComplexPtr &K, const CoeffGroup &G);
ChainComplex extended_config_direct(const ComplexPtr &K, const CoeffGroup &G);
ChainComplex extended_obs(const ComplexPtr &K, const CoeffGroup &G);
ChainComplex extended_obs_direct(const ComplexPtr &K, const CoeffGroup &G);
ChainComplex deligne_complex(const ComplexPtr &K, const CoeffGroup &G);

} // namespace artifact
