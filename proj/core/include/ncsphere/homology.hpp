#pragma once

#include <stdexcept>

#include "ncsphere/ncalg.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {

struct NotIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUnitary : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCyclic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normal form in every slot (when pres is given), then drop the terms whose
// slot >= 1 is the unit word: chains live in A (x) (A/C1)^{(x)k}.
TensorChain reduce_chain(const TensorChain& c, const Presentation* pres);

// Hochschild boundary with products taken in pres.
TensorChain boundary_b(const TensorChain& c, const Presentation& pres);

// t(a0 (x) ... (x) ak) = (-1)^k ak (x) a0 (x) ... (x) a(k-1)
TensorChain cyclic_permutation(const TensorChain& c);
bool is_cyclic(const TensorChain& c);
// 1 (x) c for a chain fixed by the signed cyclic permutation
TensorChain operator_B_on_cyclic(const TensorChain& c);

// (e - 1/2) (x) e (x) ... (x) e with 2k+1 factors, traced.  With pres given the
// entries are reduced and e = e* = e^2 is checked.
TensorChain ch_even(const MatrixPoly& e, int k, const Presentation* pres);
// ch_{k+1/2}: U (x) U* (x) ... (x) U* - U* (x) U (x) ... (x) U, 2k+2 factors.
// With pres given, U U* = U* U is checked and must be central (it is 1 on the
// spheres and sum x^2 for the homogeneous A_u).
TensorChain ch_odd(const MatrixPoly& U, int k, const Presentation* pres);

// Reduce each entry of m to normal form.
MatrixPoly reduce_matrix(const MatrixPoly& m, const Presentation& pres);
MatrixPoly matrix_mul(const MatrixPoly& a, const MatrixPoly& b, const Presentation& pres);

}  // namespace ncs
