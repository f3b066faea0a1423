#pragma once

#include "artifact/diagrams.hpp"
#include "artifact/moore.hpp"

#include <string>
#include <vector>

namespace artifact {

// Contravariant diagram X. Level n is the product over weakly increasing
// chains U0 <= ... <= Un of X(U0); d^0 restricts along U0 <= U1, d^i (i > 0)
// deletes U_i, s^j repeats U_j.
struct CosimplicialReplacement {
  CosimplicialChainObject object;
  std::vector<std::vector<std::vector<int>>> chains; // factor chains per level
};

CosimplicialReplacement cosimplicial_replacement(const Diagram &D, int cutoff);

// Double complex on strictly increasing chains: p = -n, q = internal degree,
// vertical map sum (-1)^i d^i. Chains up to length max_length.
DoubleComplex holim_double_complex(const Diagram &D, int max_length);
// Total product complex truncated to degrees >= 0 (degree 0 is a kernel).
ChainComplex holim(const Diagram &D);

// Conormalized Moore complex of the full replacement versus the product over
// strictly increasing chains, compared through coordinate projection in every
// bidegree up to `top`; true when all components are isomorphisms commuting
// with both differentials.
bool check_chain_product_identity(const Diagram &D, int top, std::string *why = nullptr);

} // namespace artifact
