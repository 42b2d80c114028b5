#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffmc/matf.hpp"
#include "ffmc/matpoly.hpp"
#include "ffmc/poly.hpp"

namespace ffmc {

/// A pair (A, B) with A k x k and B k x l over the same field.
struct MatrixPair {
  MatF A;
  MatF B;
  int state_dim() const { return A.rows(); }
  int input_dim() const { return B.cols(); }
};
MatrixPair make_pair(MatF A, MatF B);  // validates shapes

/// S(A,B) = [B  AB  ...  A^{k-1}B], k x kl.
MatF reachability_matrix(const MatrixPair& P);

/// The pencil [x I_k - A   B].
MatPoly pair_pencil(const MatrixPair& P);

/// rank S(A,B) = k.  Equivalent to unimodularity of [xI - A  B].
bool is_reachable(const MatrixPair& P);

// Rank increments p_i of the growing block matrices [B ... A^{i-1}B] and
// their dual sequence k_j = #{r : p_r >= j}, the controllability indices.
// For reachable pairs the indices sum to k.
struct ControllabilityData {
  std::vector<int> p;        // p_1, ..., p_k
  std::vector<int> indices;  // k_1 >= ... >= k_l
  int rank_b;
};
ControllabilityData controllability_indices(const MatrixPair& P);

/// Canonical reachable pair with the given controllability indices: block
/// diagonal of nilpotent upper-shift blocks and the matching selector
/// columns.  indices must be nonincreasing, positive, with length <= l.
MatrixPair brunovsky_pair(const std::vector<int>& indices, int l, const GfPtr& F);

/// Conjugate [[A,B],[C,D]] (C, D zero) by [[P,0],[R,Q]] and extract the
/// top blocks; the result is independent of C and D.  P, Q must be
/// invertible.
MatrixPair gamma_transform(const MatrixPair& pair, const MatF& P, const MatF& R, const MatF& Q);

/// Invariant factors of x I_{l,k} - Y (all nonzero since the top k x k
/// block has monic determinant).
std::vector<Poly> pencil_invariant_factors(const MatF& Y);

/// Some [Y Z] with characteristic polynomial f exists iff the product of
/// the invariant factors of x I_{l,k} - Y divides f.  Y is l x k with
/// k < l; f monic of degree l.
bool wimmer_completable(const MatF& Y, const Poly& f);

/// Exhaustive search for Z (l x (l-k)) with char_poly([Y Z]) = f, first hit
/// in packed order.  Throws BudgetError when q^{l(l-k)} exceeds the budget;
/// nullopt means no completion exists.
std::optional<MatF> complete_char_poly(const MatF& Y, const Poly& f,
                                       std::uint64_t budget = 1ull << 24);

/// The unique column a with char_poly([C_prefix a]) = f, for a prefix whose
/// pencil is unimodular.  Zero or multiple solutions falsify the uniqueness
/// theorem and raise InvariantError.
MatF solve_last_column(const MatF& C_prefix, const Poly& f,
                       std::uint64_t budget = 1ull << 24);

}  // namespace ffmc
