#include "ffmc/matpoly.hpp"

#include <algorithm>
#include <bit>

#include "ffmc/errors.hpp"

namespace ffmc {

MatPoly::MatPoly(GfPtr F, int n, int k, std::vector<Poly> entries)
    : F_(std::move(F)), n_(n), k_(k), e_(std::move(entries)) {
  if (n < 0 || k < 0) throw DomainError("negative matrix dimension");
  if (e_.size() != static_cast<size_t>(n) * k)
    throw DomainError("entry count does not match matrix shape");
  for (const auto& p : e_)
    if (!same_field(p.field(), F_)) throw DomainError("entry over a different field");
}

MatPoly MatPoly::zero(GfPtr F, int n, int k) {
  std::vector<Poly> e(static_cast<size_t>(n) * k, Poly::zero(F));
  return MatPoly(std::move(F), n, k, std::move(e));
}

MatPoly MatPoly::constant(const MatF& A) {
  std::vector<Poly> e;
  e.reserve(static_cast<size_t>(A.rows()) * A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      e.push_back(Poly::constant(A.field(), A.at(i, j)));
  return MatPoly(A.field(), A.rows(), A.cols(), std::move(e));
}

MatPoly MatPoly::from_coeffs(const std::vector<MatF>& coeffs) {
  if (coeffs.empty()) throw DomainError("coefficient list must be nonempty");
  const int n = coeffs[0].rows(), k = coeffs[0].cols();
  const GfPtr& F = coeffs[0].field();
  for (const auto& C : coeffs)
    if (C.rows() != n || C.cols() != k || !same_field(C.field(), F))
      throw DomainError("coefficient matrices must share shape and field");
  std::vector<Poly> e;
  e.reserve(static_cast<size_t>(n) * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<Gf::El> c(coeffs.size());
      for (size_t t = 0; t < coeffs.size(); ++t) c[t] = coeffs[t].at(i, j);
      e.emplace_back(F, std::move(c));
    }
  return MatPoly(F, n, k, std::move(e));
}

void MatPoly::set(int i, int j, Poly p) {
  if (!same_field(p.field(), F_)) throw DomainError("entry over a different field");
  e_[static_cast<size_t>(i) * k_ + j] = std::move(p);
}

Degree MatPoly::degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

MatF MatPoly::coeff(int i) const {
  MatF C(F_, n_, k_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < k_; ++c) C.set(r, c, at(r, c).coeff(i));
  return C;
}

std::vector<MatF> MatPoly::coeff_matrices() const {
  const Degree d = degree();
  const int top = d.finite() ? d.value() : 0;
  std::vector<MatF> out;
  out.reserve(top + 1);
  for (int i = 0; i <= top; ++i) out.push_back(coeff(i));
  return out;
}

bool MatPoly::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

MatPoly MatPoly::transpose() const {
  std::vector<Poly> e;
  e.reserve(e_.size());
  for (int j = 0; j < k_; ++j)
    for (int i = 0; i < n_; ++i) e.push_back(at(i, j));
  return MatPoly(F_, k_, n_, std::move(e));
}

MatPoly MatPoly::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<Poly> e;
  e.reserve(rows.size() * cols.size());
  for (int i : rows)
    for (int j : cols) e.push_back(at(i, j));
  return MatPoly(F_, static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                 std::move(e));
}

bool MatPoly::operator==(const MatPoly& o) const {
  return same_field(F_, o.F_) && n_ == o.n_ && k_ == o.k_ && e_ == o.e_;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("shape mismatch in +");
  std::vector<Poly> e;
  e.reserve(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e.push_back(a.at(i, j) + b.at(i, j));
  return MatPoly(a.field(), a.rows(), a.cols(), std::move(e));
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("shape mismatch in -");
  std::vector<Poly> e;
  e.reserve(static_cast<size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) e.push_back(a.at(i, j) - b.at(i, j));
  return MatPoly(a.field(), a.rows(), a.cols(), std::move(e));
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.cols() != b.rows()) throw DomainError("shape mismatch in *");
  MatPoly c = MatPoly::zero(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Poly s = Poly::zero(a.field());
      for (int t = 0; t < a.cols(); ++t) s = s + a.at(i, t) * b.at(t, j);
      c.set(i, j, std::move(s));
    }
  return c;
}

Poly poly_det(const MatPoly& M) {
  if (M.rows() != M.cols()) throw DomainError("determinant of non-square matrix");
  const int n = M.rows();
  const GfPtr& F = M.field();
  if (n == 0) return Poly::one(F);
  if (n > 20) throw BudgetError("determinant expansion limited to order 20");
  // D[S] = det of the submatrix on rows 0..|S|-1 and column set S; filled in
  // increasing popcount so each det expands along its last row.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Poly> D(full + 1, Poly::zero(F));
  D[0] = Poly::one(F);
  for (std::uint32_t S = 1; S <= full; ++S) {
    const int row = std::popcount(S) - 1;
    Poly acc = Poly::zero(F);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(S >> j & 1)) continue;
      const Poly& m = M.at(row, j);
      if (!m.is_zero()) {
        Poly term = m * D[S ^ (1u << j)];
        acc = (pos % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    D[S] = std::move(acc);
  }
  return D[full];
}

namespace {
// Visit size-r subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn fn) {
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i;
  while (true) {
    fn(s);
    int i = r - 1;
    while (i >= 0 && s[i] == n - r + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
}
}  // namespace

Poly minors_gcd(const MatPoly& M, int r) {
  if (r < 1 || r > std::min(M.rows(), M.cols()))
    throw DomainError("minor order out of range");
  Poly g = Poly::zero(M.field());
  bool done = false;
  for_each_subset(M.rows(), r, [&](const std::vector<int>& rows) {
    if (done) return;
    for_each_subset(M.cols(), r, [&](const std::vector<int>& cols) {
      if (done) return;
      g = gcd_monic(g, poly_det(M.submatrix(rows, cols)));
      if (g.is_one()) done = true;
    });
  });
  return g;
}

bool is_unimodular(const MatPoly& M) {
  return minors_gcd(M, std::min(M.rows(), M.cols())).is_one();
}

MatPoly linear_pencil(const MatF& Y) {
  const GfPtr& F = Y.field();
  MatPoly P = MatPoly::zero(F, Y.rows(), Y.cols());
  for (int i = 0; i < Y.rows(); ++i)
    for (int j = 0; j < Y.cols(); ++j) {
      Poly e = -Poly::constant(F, Y.at(i, j));
      if (i == j) e = e + Poly::x(F);
      P.set(i, j, std::move(e));
    }
  return P;
}

namespace {

// Row/column elementary operations that keep D = U * M * V in lockstep.
struct SmithWork {
  MatPoly D, U, V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols(); ++j) {
      Poly t = D.at(a, j);
      D.set(a, j, D.at(b, j));
      D.set(b, j, t);
    }
    for (int j = 0; j < U.cols(); ++j) {
      Poly t = U.at(a, j);
      U.set(a, j, U.at(b, j));
      U.set(b, j, t);
    }
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows(); ++i) {
      Poly t = D.at(i, a);
      D.set(i, a, D.at(i, b));
      D.set(i, b, t);
    }
    for (int i = 0; i < V.rows(); ++i) {
      Poly t = V.at(i, a);
      V.set(i, a, V.at(i, b));
      V.set(i, b, t);
    }
  }
  // row[a] += c * row[b]
  void row_axpy(int a, int b, const Poly& c) {
    for (int j = 0; j < D.cols(); ++j) D.set(a, j, D.at(a, j) + c * D.at(b, j));
    for (int j = 0; j < U.cols(); ++j) U.set(a, j, U.at(a, j) + c * U.at(b, j));
  }
  // col[a] += c * col[b]
  void col_axpy(int a, int b, const Poly& c) {
    for (int i = 0; i < D.rows(); ++i) D.set(i, a, D.at(i, a) + c * D.at(i, b));
    for (int i = 0; i < V.rows(); ++i) V.set(i, a, V.at(i, a) + c * V.at(i, b));
  }
  void scale_row(int a, Gf::El s) {
    for (int j = 0; j < D.cols(); ++j) D.set(a, j, scale(D.at(a, j), s));
    for (int j = 0; j < U.cols(); ++j) U.set(a, j, scale(U.at(a, j), s));
  }
};

}  // namespace

SmithForm smith_form(const MatPoly& M) {
  const GfPtr& F = M.field();
  const int n = M.rows(), k = M.cols(), r = std::min(n, k);
  SmithWork w{M, MatPoly::constant(MatF::identity(F, n)),
              MatPoly::constant(MatF::identity(F, k))};

  for (int t = 0; t < r; ++t) {
    int guard = 0;
    while (true) {
      if (++guard > 100000) throw InvariantError("smith reduction failed to terminate");
      // Minimal-degree nonzero entry of the trailing block, ties broken by
      // smallest (row, col) -- keeps U, V reproducible.
      int bi = -1, bj = -1;
      Degree best = Degree::neg_infinity();
      for (int i = t; i < n; ++i)
        for (int j = t; j < k; ++j) {
          const Poly& e = w.D.at(i, j);
          if (e.is_zero()) continue;
          if (bi < 0 || e.degree() < best) {
            bi = i;
            bj = j;
            best = e.degree();
          }
        }
      if (bi < 0) goto done;  // trailing block is zero
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);

      // Kill column and row by division; a nonzero remainder has smaller
      // degree than the pivot, so the restart strictly shrinks the pivot.
      bool remainder_grew = false;
      for (int i = t + 1; i < n; ++i) {
        if (w.D.at(i, t).is_zero()) continue;
        auto dm = divmod(w.D.at(i, t), w.D.at(t, t));
        w.row_axpy(i, t, -dm.quotient);
        if (!w.D.at(i, t).is_zero()) remainder_grew = true;
      }
      for (int j = t + 1; j < k; ++j) {
        if (w.D.at(t, j).is_zero()) continue;
        auto dm = divmod(w.D.at(t, j), w.D.at(t, t));
        w.col_axpy(j, t, -dm.quotient);
        if (!w.D.at(t, j).is_zero()) remainder_grew = true;
      }
      if (remainder_grew) continue;

      // Pivot must divide the whole trailing block for the chain f_i | f_{i+1};
      // pull an offending row up and restart.
      int oi = -1, oj = -1;
      for (int i = t + 1; i < n && oi < 0; ++i)
        for (int j = t + 1; j < k; ++j)
          if (!divides(w.D.at(t, t), w.D.at(i, j))) {
            oi = i;
            oj = j;
            break;
          }
      if (oi >= 0) {
        w.row_axpy(t, oi, Poly::one(F));
        continue;
      }
      break;
    }
    // normalize pivot monic (unit row scaling)
    if (!w.D.at(t, t).is_monic()) w.scale_row(t, F->inv(w.D.at(t, t).leading()));
  }
done:
  std::vector<Poly> factors;
  factors.reserve(r);
  for (int t = 0; t < r; ++t) {
    Poly f = w.D.at(t, t);
    factors.push_back(f.is_zero() ? f : make_monic(f));
  }
  return {std::move(w.U), std::move(w.D), std::move(w.V), std::move(factors)};
}

Linearization linearize(const MatPoly& A) {
  const GfPtr& F = A.field();
  const int n = A.rows(), k = A.cols();
  const Degree deg = A.degree();
  if (!deg.finite() || deg.value() < 1)
    throw DomainError("linearization requires degree >= 1");
  const int d = deg.value();
  if (!(A.coeff(d) == MatF::rect_identity(F, n, k)))
    throw DomainError("linearization requires top coefficient I_{n,k}");

  const int rows = n * d;
  const int cols = n * d - n + k;
  MatF B(F, rows, cols);
  // Identity blocks on the block subdiagonal.
  for (int b = 0; b + 1 < d; ++b)
    for (int i = 0; i < n; ++i) B.set((b + 1) * n + i, b * n + i, 1);
  // Last block column: -A_0, ..., -A_{d-1}.
  for (int b = 0; b < d; ++b) {
    MatF Ab = A.coeff(b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) B.set(b * n + i, (d - 1) * n + j, F->neg(Ab.at(i, j)));
  }
  return {B, linear_pencil(B)};
}

bool is_monic_rect(const MatPoly& A, int d) {
  if (d < 0) return false;
  if (A.degree() != d) return false;
  return A.coeff(d) == MatF::rect_identity(A.field(), A.rows(), A.cols());
}

}  // namespace ffmc
