#include "ffmc/splitfield.hpp"

#include "ffmc/bigint.hpp"
#include "ffmc/errors.hpp"
#include "ffmc/matpoly.hpp"

namespace ffmc {

ExtFieldCtx make_ext(const GfPtr& base, int m, int d, const std::optional<Poly>& modulus) {
  if (m < 1 || d < 1) throw DomainError("requires m >= 1 and d >= 1");
  const int N = m * d;
  if (modulus) {
    if (!same_field(modulus->field(), base))
      throw DomainError("modulus must be over the base field");
    if (!modulus->is_monic() || modulus->degree() != N)
      throw DomainError("modulus must be monic of degree m*d");
    if (!is_irreducible(*modulus)) throw DomainError("modulus must be irreducible");
    return {base, m, d, *modulus};
  }
  std::optional<Poly> found;
  for_each_monic(base, N, [&](const Poly& f) {
    if (!found && is_irreducible(f)) found = f;
  });
  if (!found) throw InvariantError("no irreducible modulus of degree m*d");
  return {base, m, d, *found};
}

Poly row_as_element(const ExtFieldCtx& ctx, const MatF& rows, int i) {
  std::vector<Gf::El> c(ctx.ambient_dim());
  for (int j = 0; j < ctx.ambient_dim(); ++j) c[j] = rows.at(i, j);
  return Poly(ctx.base, std::move(c));
}

MatF element_as_row(const ExtFieldCtx& ctx, const Poly& g) {
  if (g.degree() >= ctx.ambient_dim()) throw DomainError("element not reduced");
  MatF r(ctx.base, 1, ctx.ambient_dim());
  for (int j = 0; j < ctx.ambient_dim(); ++j) r.set(0, j, g.coeff(j));
  return r;
}

bool generates(const ExtFieldCtx& ctx, const Poly& g) {
  const int N = ctx.ambient_dim();
  MatF powers(ctx.base, N, N);
  Poly acc = Poly::one(ctx.base);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) powers.set(i, j, acc.coeff(j));
    acc = poly_mod(acc * g, ctx.modulus);
  }
  return rank(powers) == N;
}

SubspaceBasis mul_subspace(const ExtFieldCtx& ctx, const SubspaceBasis& W, const Poly& g) {
  if (W.ambient != ctx.ambient_dim()) throw DomainError("subspace ambient mismatch");
  MatF rows(ctx.base, W.dim(), ctx.ambient_dim());
  for (int i = 0; i < W.dim(); ++i) {
    Poly prod = poly_mod(row_as_element(ctx, W.basis, i) * g, ctx.modulus);
    for (int j = 0; j < ctx.ambient_dim(); ++j) rows.set(i, j, prod.coeff(j));
  }
  return row_space(rows);
}

SubspaceBasis alpha_shift(const ExtFieldCtx& ctx, const SubspaceBasis& W, int i) {
  if (i < 0) throw DomainError("power must be >= 0");
  Poly gi = powmod(Poly::x(ctx.base), static_cast<std::uint64_t>(i), ctx.modulus);
  return mul_subspace(ctx, W, gi);
}

bool is_splitting(const ExtFieldCtx& ctx, const SubspaceBasis& W,
                  const std::optional<Poly>& generator) {
  const int N = ctx.ambient_dim();
  if (W.ambient != N) throw DomainError("subspace ambient mismatch");
  if (W.dim() != ctx.m) throw DomainError("subspace dimension must be m");
  const Poly g = generator.value_or(Poly::x(ctx.base));

  MatF stacked(ctx.base, ctx.d * ctx.m, N);
  // Rows of g^t * W for t = 0..d-1; multiply each basis element one g at
  // a time rather than recanonicalizing intermediate subspaces.
  std::vector<Poly> elems;
  elems.reserve(ctx.m);
  for (int i = 0; i < ctx.m; ++i) elems.push_back(row_as_element(ctx, W.basis, i));
  int r = 0;
  for (int t = 0; t < ctx.d; ++t) {
    for (int i = 0; i < ctx.m; ++i) {
      for (int j = 0; j < N; ++j) stacked.set(r, j, elems[i].coeff(j));
      ++r;
    }
    if (t + 1 < ctx.d)
      for (auto& e : elems) e = poly_mod(e * g, ctx.modulus);
  }
  return rank(stacked) == N;
}

Int count_splitting_bruteforce(const ExtFieldCtx& ctx, std::uint64_t budget,
                               const std::optional<Poly>& generator) {
  const int N = ctx.ambient_dim();
  Int total = gaussian_binomial(ctx.base->order_int(), N, ctx.m);
  if (total > budget)
    throw BudgetError("subspace census of size " + total.str() + " exceeds budget " +
                      std::to_string(budget));
  if (generator && !generates(ctx, *generator))
    throw DomainError("generator does not generate the extension");
  Int count = 0;
  for_each_subspace(ctx.base, N, ctx.m, [&](const SubspaceBasis& W) {
    if (is_splitting(ctx, W, generator)) ++count;
  });
  return count;
}

MatF j_matrix(const GfPtr& F, int l, int k) {
  if (k >= l) throw DomainError("J matrix requires k < l");
  MatF J(F, l, k);
  for (int i = 0; i < k; ++i) J.set(l - k + i, i, 1);
  return J;
}

MCompanion make_mcompanion(int l, int m, MatF A) {
  if (m < 1 || m >= l) throw DomainError("requires 1 <= m < l");
  if (A.rows() != l || A.cols() != m) throw DomainError("free block must be l x m");
  return {l, m, std::move(A)};
}

MatF mcompanion_full(const MCompanion& C) {
  return hconcat(j_matrix(C.A.field(), C.l, C.l - C.m), C.A);
}

Poly mcompanion_char_poly(const MCompanion& C) { return char_poly(mcompanion_full(C)); }

void for_each_mcompanion(const GfPtr& F, int l, int m,
                         const std::function<void(const MCompanion&)>& fn,
                         std::uint64_t budget) {
  if (m < 1 || m >= l) throw DomainError("requires 1 <= m < l");
  Int total = int_pow(F->order_int(), static_cast<std::uint64_t>(l) * m);
  if (total > budget)
    throw BudgetError("m-companion sweep of size " + total.str() + " exceeds budget " +
                      std::to_string(budget));
  const std::uint64_t n = total.convert_to<std::uint64_t>();
  for (std::uint64_t idx = 0; idx < n; ++idx)
    fn(MCompanion{l, m, MatF::from_index(F, l, m, idx)});
}

std::vector<MCompanion> enumerate_fiber(const GfPtr& F, int l, int m, const Poly& f,
                                        std::uint64_t budget) {
  if (f.degree() != l) throw DomainError("target polynomial must have degree l");
  if (!f.is_monic()) throw DomainError("target polynomial must be monic");
  std::vector<MCompanion> out;
  for_each_mcompanion(F, l, m, [&](const MCompanion& C) {
    if (mcompanion_char_poly(C) == f) out.push_back(C);
  }, budget);
  return out;
}

std::vector<bool> stepwise_unimodular_profile(const MCompanion& C) {
  MatF full = mcompanion_full(C);
  std::vector<bool> profile;
  profile.reserve(C.m);
  for (int i = 0; i < C.m; ++i) {
    std::vector<int> rows(C.l), cols(C.l - C.m + i);
    for (int r = 0; r < C.l; ++r) rows[r] = r;
    for (int c = 0; c < C.l - C.m + i; ++c) cols[c] = c;
    profile.push_back(is_unimodular(linear_pencil(full.submatrix(rows, cols))));
  }
  return profile;
}

}  // namespace ffmc
