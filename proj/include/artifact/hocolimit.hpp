#pragma once

#include "artifact/diagrams.hpp"
#include "artifact/moore.hpp"

#include <string>
#include <vector>

namespace artifact {

// Covariant diagram Y. Chains are written decreasing, W0 >= W1 >= ... >= Wn,
// and level n is the sum over such chains of Y(Wn). d_0 drops W0, d_i merges
// by dropping W_i, d_n drops Wn after applying Y(Wn <= W(n-1)); s_i repeats W_i.
struct SimplicialReplacement {
  SimplicialChainObject object;
  std::vector<std::vector<std::vector<int>>> chains; // factor chains per level, decreasing
};

SimplicialReplacement simplicial_replacement(const Diagram &D, int cutoff);

// Double complex on strictly decreasing chains: p = n, q = internal degree.
DoubleComplex hocolim_double_complex(const Diagram &D, int max_length);
// Total coproduct complex truncated to degrees <= 0 (degree 0 is a cokernel).
ChainComplex hocolim(const Diagram &D);

// Normalized Moore complex of the full replacement versus the sum over strictly
// decreasing chains, compared through the section followed by coordinate projection.
bool check_chain_coproduct_identity(const Diagram &D, int top, std::string *why = nullptr);

} // namespace artifact
