#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffmc/matf.hpp"
#include "ffmc/poly.hpp"

namespace ffmc {

// The extension F_{q^{md}} = F_q[x]/(modulus), viewed as an F_q-vector
// space of dimension N = md with basis 1, x, ..., x^{N-1}.  alpha is the
// residue class of x; since the modulus is irreducible, F_q(alpha) is the
// whole extension.  Immutable after construction.
struct ExtFieldCtx {
  GfPtr base;
  int m, d;
  Poly modulus;  // monic irreducible of degree m*d over base
  int ambient_dim() const { return m * d; }
};

/// Build the context.  Default modulus is the first monic irreducible of
/// degree md in packed order; a supplied modulus must be monic irreducible
/// of that degree.
ExtFieldCtx make_ext(const GfPtr& base, int m, int d,
                     const std::optional<Poly>& modulus = std::nullopt);

/// A coordinate row of length N read as an element of the extension.
Poly row_as_element(const ExtFieldCtx& ctx, const MatF& rows, int i);
/// Element written back as a coordinate row.
MatF element_as_row(const ExtFieldCtx& ctx, const Poly& g);

/// True iff g generates: F_q(g) is the whole extension, i.e. the powers
/// 1, g, ..., g^{N-1} are linearly independent over the base.
bool generates(const ExtFieldCtx& ctx, const Poly& g);

/// The subspace g * W (multiplication in the extension), re-canonicalized.
/// Dimension is preserved whenever g is nonzero.
SubspaceBasis mul_subspace(const ExtFieldCtx& ctx, const SubspaceBasis& W, const Poly& g);
/// alpha^i * W.
SubspaceBasis alpha_shift(const ExtFieldCtx& ctx, const SubspaceBasis& W, int i);

/// W + gW + ... + g^{d-1}W equals the whole extension (each summand has
/// dim W = m, so the stacked dm x md matrix having rank md is exactly the
/// direct-sum condition).  g defaults to alpha.
bool is_splitting(const ExtFieldCtx& ctx, const SubspaceBasis& W,
                  const std::optional<Poly>& generator = std::nullopt);

/// Exhaustive count of splitting m-subspaces.  Throws BudgetError when the
/// Gaussian binomial [md, m]_q exceeds the budget; a partial census is
/// worse than none.  The generator must generate the extension.
Int count_splitting_bruteforce(const ExtFieldCtx& ctx, std::uint64_t budget = 1ull << 24,
                               const std::optional<Poly>& generator = std::nullopt);

// An m-companion matrix of order l: C = [J^{l,l-m}  A] with J the
// identity-bottomed rectangle and A the free l x m block.  When m | l this
// is an (m, l/m)-block companion matrix up to the block reading of the
// identity layout.
struct MCompanion {
  int l, m;
  MatF A;  // l x m
};
MCompanion make_mcompanion(int l, int m, MatF A);
/// J^{l,k} = [0; I_k].
MatF j_matrix(const GfPtr& F, int l, int k);
/// The full l x l matrix [J^{l,l-m}  A].
MatF mcompanion_full(const MCompanion& C);
/// The map Phi: det(x I_l - C).
Poly mcompanion_char_poly(const MCompanion& C);

/// All m-companion matrices of order l in packed order of A.
void for_each_mcompanion(const GfPtr& F, int l, int m,
                         const std::function<void(const MCompanion&)>& fn,
                         std::uint64_t budget = 1ull << 24);

/// The fiber of Phi over f (degree l): every C with char poly f.
std::vector<MCompanion> enumerate_fiber(const GfPtr& F, int l, int m, const Poly& f,
                                        std::uint64_t budget = 1ull << 24);

/// For i = 0..m-1, whether the pencil of the first l-m+i columns of C is
/// unimodular.  All true whenever Phi(C) is irreducible.
std::vector<bool> stepwise_unimodular_profile(const MCompanion& C);

}  // namespace ffmc
