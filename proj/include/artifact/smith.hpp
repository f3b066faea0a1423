#pragma once

#include "artifact/matrix.hpp"

#include <vector>

namespace artifact {

struct SmithResult {
  Matrix U, S, V;
  std::vector<Int> diagonal; // nonzero diagonal entries s_1 | s_2 | ...
  int rank = 0;
};

// U * M * V = S with U, V unimodular and a divisibility chain on the diagonal.
// Pivot: smallest absolute nonzero entry, ties broken by lowest (row, column).
SmithResult smith_normal_form(const Matrix &M);

struct ElimOptions {
  Int modulus{0};          // 0: over Z; q: entries taken mod q
  bool chain = true;       // enforce s_k | s_{k+1} (only meaningful over Z)
  bool reduce_accumulators = false; // keep U, V entries mod q as well
  bool want_U = false, want_Uinv = false, want_V = false, want_Vinv = false;
};

// Diagonalization by elementary operations. After the final permutation the
// k-th pivot sits at (k, k): U * M * V == diag(pivots) (mod modulus).
struct Elimination {
  int rows = 0, cols = 0;
  std::vector<Int> pivots;
  std::vector<SparseVec> U_rows, Uinv_cols, V_cols, Vinv_rows;
};

Elimination eliminate(const Matrix &M, const ElimOptions &opt);

} // namespace artifact
