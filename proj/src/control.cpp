#include "ffmc/control.hpp"

#include <numeric>

#include "ffmc/errors.hpp"

namespace ffmc {

MatrixPair make_pair(MatF A, MatF B) {
  if (A.rows() != A.cols()) throw DomainError("state matrix must be square");
  if (B.rows() != A.rows()) throw DomainError("input matrix row mismatch");
  if (!same_field(A.field(), B.field())) throw DomainError("pair over different fields");
  return {std::move(A), std::move(B)};
}

MatF reachability_matrix(const MatrixPair& P) {
  const int k = P.state_dim();
  MatF S = P.B;
  MatF block = P.B;
  for (int i = 1; i < k; ++i) {
    block = P.A * block;
    S = hconcat(S, block);
  }
  return S;
}

MatPoly pair_pencil(const MatrixPair& P) {
  const int k = P.state_dim(), l = P.input_dim();
  const GfPtr& F = P.A.field();
  MatPoly M = MatPoly::zero(F, k, k + l);
  MatPoly left = linear_pencil(P.A);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) M.set(i, j, left.at(i, j));
    for (int j = 0; j < l; ++j) M.set(i, k + j, Poly::constant(F, P.B.at(i, j)));
  }
  return M;
}

bool is_reachable(const MatrixPair& P) {
  return rank(reachability_matrix(P)) == P.state_dim();
}

ControllabilityData controllability_indices(const MatrixPair& P) {
  const int k = P.state_dim();
  const int l = P.input_dim();
  std::vector<int> p(k);
  MatF S = P.B;
  MatF block = P.B;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      block = P.A * block;
      S = hconcat(S, block);
    }
    const int r = rank(S);
    p[i] = r - prev;
    prev = r;
  }
  std::vector<int> indices(l, 0);
  for (int j = 1; j <= l; ++j)
    for (int i = 0; i < k; ++i)
      if (p[i] >= j) ++indices[j - 1];
  return {std::move(p), std::move(indices), k > 0 ? rank(P.B) : 0};
}

MatrixPair brunovsky_pair(const std::vector<int>& indices, int l, const GfPtr& F) {
  const int r = static_cast<int>(indices.size());
  if (r > l) throw DomainError("more indices than inputs");
  int k = 0;
  for (int i = 0; i < r; ++i) {
    if (indices[i] <= 0) throw DomainError("controllability indices must be positive");
    if (i > 0 && indices[i] > indices[i - 1])
      throw DomainError("controllability indices must be nonincreasing");
    k += indices[i];
  }
  MatF Ac(F, k, k);
  MatF Bc(F, k, l);
  int off = 0;
  for (int i = 0; i < r; ++i) {
    const int ki = indices[i];
    for (int t = 0; t + 1 < ki; ++t) Ac.set(off + t, off + t + 1, 1);
    Bc.set(off + ki - 1, i, 1);
    off += ki;
  }
  return {std::move(Ac), std::move(Bc)};
}

MatrixPair gamma_transform(const MatrixPair& pair, const MatF& P, const MatF& R, const MatF& Q) {
  const int k = pair.state_dim();
  const int l = pair.input_dim();
  const GfPtr& F = pair.A.field();
  if (P.rows() != k || P.cols() != k || Q.rows() != l || Q.cols() != l ||
      R.rows() != l || R.cols() != k)
    throw DomainError("transformation block shapes do not match the pair");

  MatF G = vconcat(hconcat(P, MatF::zero(F, k, l)), hconcat(R, Q));
  auto Ginv = inverse(G);
  if (!Ginv) throw DomainError("transformation blocks must be invertible");

  MatF M = vconcat(hconcat(pair.A, pair.B),
                   hconcat(MatF::zero(F, l, k), MatF::zero(F, l, l)));
  MatF T = G * M * *Ginv;

  std::vector<int> top(k), left(k), right(l);
  std::iota(top.begin(), top.end(), 0);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), k);
  return {T.submatrix(top, left), T.submatrix(top, right)};
}

std::vector<Poly> pencil_invariant_factors(const MatF& Y) {
  return smith_form(linear_pencil(Y)).factors;
}

bool wimmer_completable(const MatF& Y, const Poly& f) {
  const int l = Y.rows(), k = Y.cols();
  if (k >= l) throw DomainError("requires k < l");
  if (!f.is_monic() || f.degree() != l)
    throw DomainError("requires monic f of degree l");
  Poly prod = Poly::one(Y.field());
  for (const Poly& fi : pencil_invariant_factors(Y)) prod = prod * fi;
  return divides(prod, f);
}

std::optional<MatF> complete_char_poly(const MatF& Y, const Poly& f, std::uint64_t budget) {
  const int l = Y.rows(), k = Y.cols();
  if (k >= l) throw DomainError("requires k < l");
  if (!f.is_monic() || f.degree() != l)
    throw DomainError("requires monic f of degree l");
  const GfPtr& F = Y.field();
  Int total = int_pow(F->order_int(), static_cast<std::uint64_t>(l) * (l - k));
  if (total > budget)
    throw BudgetError("completion search space " + total.str() + " exceeds budget");
  const std::uint64_t n = total.convert_to<std::uint64_t>();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    MatF Z = MatF::from_index(F, l, l - k, idx);
    if (char_poly(hconcat(Y, Z)) == f) return Z;
  }
  return std::nullopt;
}

MatF solve_last_column(const MatF& C_prefix, const Poly& f, std::uint64_t budget) {
  const int l = C_prefix.rows();
  if (C_prefix.cols() != l - 1) throw DomainError("prefix must be l x (l-1)");
  if (!is_unimodular(linear_pencil(C_prefix)))
    throw DomainError("prefix pencil must be unimodular");
  if (!f.is_monic() || f.degree() != l)
    throw DomainError("requires monic f of degree l");
  const GfPtr& F = C_prefix.field();
  Int total = int_pow(F->order_int(), l);
  if (total > budget)
    throw BudgetError("column search space " + total.str() + " exceeds budget");
  const std::uint64_t n = total.convert_to<std::uint64_t>();
  std::optional<MatF> found;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    MatF a = MatF::from_index(F, l, 1, idx);
    if (char_poly(hconcat(C_prefix, a)) == f) {
      if (found) throw InvariantError("completion column is not unique");
      found = std::move(a);
    }
  }
  if (!found) throw InvariantError("no completion column found for unimodular prefix");
  return *found;
}

}  // namespace ffmc
