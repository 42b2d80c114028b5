#include "ffmc/matf.hpp"

#include <algorithm>

#include "ffmc/errors.hpp"

namespace ffmc {

MatF::MatF(GfPtr F, int rows, int cols)
    : F_(std::move(F)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

MatF::MatF(GfPtr F, int rows, int cols, std::vector<Gf::El> entries)
    : F_(std::move(F)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw DomainError("entry count does not match matrix shape");
}

MatF MatF::identity(GfPtr F, int n) { return rect_identity(std::move(F), n, n); }

MatF MatF::rect_identity(GfPtr F, int n, int k) {
  MatF M(std::move(F), n, k);
  for (int i = 0; i < std::min(n, k); ++i) M.set(i, i, 1);
  return M;
}

MatF MatF::from_index(GfPtr F, int rows, int cols, std::uint64_t idx) {
  MatF M(F, rows, cols);
  const std::uint64_t q = F->order();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      M.set(i, j, static_cast<Gf::El>(idx % q));
      idx /= q;
    }
  return M;
}

bool MatF::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Gf::El v) { return v == 0; });
}

bool MatF::operator==(const MatF& o) const {
  return same_field(F_, o.F_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

MatF MatF::transpose() const {
  MatF T(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T.set(j, i, at(i, j));
  return T;
}

MatF MatF::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  MatF S(F_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      S.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
  return S;
}

MatF MatF::col(int j) const {
  MatF c(F_, rows_, 1);
  for (int i = 0; i < rows_; ++i) c.set(i, 0, at(i, j));
  return c;
}

namespace {
void check_same(const MatF& a, const MatF& b) {
  if (!same_field(a.field(), b.field())) throw DomainError("matrices over different fields");
}
}  // namespace

MatF operator+(const MatF& a, const MatF& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("shape mismatch in +");
  const Gf& F = *a.field();
  std::vector<Gf::El> c(a.entries());
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(c[i], b.entries()[i]);
  return MatF(a.field(), a.rows(), a.cols(), std::move(c));
}

MatF operator-(const MatF& a) {
  const Gf& F = *a.field();
  std::vector<Gf::El> c(a.entries());
  for (auto& v : c) v = F.neg(v);
  return MatF(a.field(), a.rows(), a.cols(), std::move(c));
}

MatF operator-(const MatF& a, const MatF& b) { return a + (-b); }

MatF operator*(const MatF& a, const MatF& b) {
  check_same(a, b);
  if (a.cols() != b.rows()) throw DomainError("shape mismatch in *");
  const Gf& F = *a.field();
  MatF c(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int t = 0; t < a.cols(); ++t) {
      const Gf::El v = a.at(i, t);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.set(i, j, F.add(c.at(i, j), F.mul(v, b.at(t, j))));
    }
  return c;
}

MatF hconcat(const MatF& a, const MatF& b) {
  check_same(a, b);
  if (a.rows() != b.rows()) throw DomainError("row mismatch in hconcat");
  MatF c(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
  }
  return c;
}

MatF vconcat(const MatF& a, const MatF& b) {
  check_same(a, b);
  if (a.cols() != b.cols()) throw DomainError("column mismatch in vconcat");
  MatF c(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(a.rows() + i, j, b.at(i, j));
  return c;
}

RrefResult rref(const MatF& M) {
  const Gf& F = *M.field();
  MatF R = M;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < R.cols() && r < R.rows(); ++c) {
    // first nonzero entry in column order; exact arithmetic needs no
    // numerical pivoting and determinism matters
    int p = -1;
    for (int i = r; i < R.rows(); ++i)
      if (R.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < R.cols(); ++j) {
        Gf::El t = R.at(r, j);
        R.set(r, j, R.at(p, j));
        R.set(p, j, t);
      }
    const Gf::El inv = F.inv(R.at(r, c));
    for (int j = 0; j < R.cols(); ++j) R.set(r, j, F.mul(R.at(r, j), inv));
    for (int i = 0; i < R.rows(); ++i) {
      if (i == r) continue;
      const Gf::El f = R.at(i, c);
      if (f == 0) continue;
      for (int j = 0; j < R.cols(); ++j)
        R.set(i, j, F.sub(R.at(i, j), F.mul(f, R.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(R), r, std::move(pivots)};
}

int rank(const MatF& M) { return rref(M).rank; }

Gf::El det(const MatF& M) {
  if (M.rows() != M.cols()) throw DomainError("determinant of non-square matrix");
  const Gf& F = *M.field();
  const int n = M.rows();
  MatF A = M;
  Gf::El d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (A.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        Gf::El t = A.at(c, j);
        A.set(c, j, A.at(p, j));
        A.set(p, j, t);
      }
      d = F.neg(d);
    }
    d = F.mul(d, A.at(c, c));
    const Gf::El inv = F.inv(A.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      const Gf::El f = F.mul(A.at(i, c), inv);
      if (f == 0) continue;
      for (int j = c; j < n; ++j) A.set(i, j, F.sub(A.at(i, j), F.mul(f, A.at(c, j))));
    }
  }
  return d;
}

std::optional<MatF> inverse(const MatF& M) {
  if (M.rows() != M.cols()) throw DomainError("inverse of non-square matrix");
  const int n = M.rows();
  auto res = rref(hconcat(M, MatF::identity(M.field(), n)));
  if (res.rank < n) return std::nullopt;
  std::vector<int> rows(n), cols(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = i;
    cols[i] = n + i;
  }
  return res.R.submatrix(rows, cols);
}

SubspaceBasis row_space(const MatF& M) {
  auto res = rref(M);
  std::vector<int> rows(res.rank);
  std::vector<int> cols(M.cols());
  for (int i = 0; i < res.rank; ++i) rows[i] = i;
  for (int j = 0; j < M.cols(); ++j) cols[j] = j;
  return {M.cols(), res.R.submatrix(rows, cols)};
}

SubspaceBasis kernel(const MatF& M) {
  const Gf& F = *M.field();
  auto res = rref(M);
  const int n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : res.pivots) is_pivot[c] = true;
  MatF K(M.field(), n - res.rank, n);
  int r = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    K.set(r, c, 1);
    for (int i = 0; i < res.rank; ++i) K.set(r, res.pivots[i], F.neg(res.R.at(i, c)));
    ++r;
  }
  return row_space(K);
}

Poly char_poly(const MatF& M) {
  if (M.rows() != M.cols()) throw DomainError("characteristic polynomial of non-square matrix");
  const Gf& F = *M.field();
  const GfPtr& Fp = M.field();
  const int n = M.rows();
  if (n == 0) return Poly::one(Fp);

  // Reduce to upper Hessenberg form by a similarity transformation: swap
  // row/column pairs to place a pivot, then eliminate below the subdiagonal
  // with matched row and inverse column operations.
  MatF H = M;
  for (int c = 0; c + 2 < n; ++c) {
    int p = -1;
    for (int i = c + 1; i < n; ++i)
      if (H.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) {
        Gf::El t = H.at(c + 1, j);
        H.set(c + 1, j, H.at(p, j));
        H.set(p, j, t);
      }
      for (int i = 0; i < n; ++i) {
        Gf::El t = H.at(i, c + 1);
        H.set(i, c + 1, H.at(i, p));
        H.set(i, p, t);
      }
    }
    const Gf::El inv = F.inv(H.at(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      const Gf::El f = F.mul(H.at(i, c), inv);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) H.set(i, j, F.sub(H.at(i, j), F.mul(f, H.at(c + 1, j))));
      for (int r = 0; r < n; ++r) H.set(r, c + 1, F.add(H.at(r, c + 1), F.mul(f, H.at(r, i))));
    }
  }

  // Leading-principal-minor recurrence for Hessenberg matrices:
  // p_m = (x - H[m-1][m-1]) p_{m-1}
  //       - sum_i H[i-1][m-1] (prod_{j=i..m-1} H[j][j-1]) p_{i-1}.
  std::vector<Poly> p;
  p.push_back(Poly::one(Fp));
  for (int m = 1; m <= n; ++m) {
    Poly pm = (Poly::x(Fp) - Poly::constant(Fp, H.at(m - 1, m - 1))) * p[m - 1];
    Gf::El sub_prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      sub_prod = F.mul(sub_prod, H.at(i, i - 1));
      if (sub_prod == 0) break;
      const Gf::El coef = F.mul(H.at(i - 1, m - 1), sub_prod);
      if (coef == 0) continue;
      pm = pm - scale(p[i - 1], coef);
    }
    p.push_back(pm);
  }
  return p[n];
}

void for_each_subspace(const GfPtr& F, int N, int m,
                       const std::function<void(const SubspaceBasis&)>& fn) {
  if (m < 0 || m > N) throw DomainError("subspace dimension out of range");
  const std::uint64_t q = F->order();
  if (m == 0) {
    fn(SubspaceBasis{N, MatF(F, 0, N)});
    return;
  }
  // Pivot columns p_0 < ... < p_{m-1}; free positions are (i, j) with
  // j > p_i and j not a pivot.  Every RREF filling is a distinct subspace.
  std::vector<int> piv(m);
  for (int i = 0; i < m; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(N, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < m; ++i)
      for (int j = piv[i] + 1; j < N; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);

    Int fills = int_pow(Int(q), free_pos.size());
    if (fills > Int(1) << 62) throw BudgetError("too many subspaces to enumerate");
    const std::uint64_t nf = fills.convert_to<std::uint64_t>();
    for (std::uint64_t v = 0; v < nf; ++v) {
      MatF B(F, m, N);
      for (int i = 0; i < m; ++i) B.set(i, piv[i], 1);
      std::uint64_t t = v;
      for (auto [i, j] : free_pos) {
        B.set(i, j, static_cast<Gf::El>(t % q));
        t /= q;
      }
      fn(SubspaceBasis{N, std::move(B)});
    }

    // next pivot combination, lexicographic
    int i = m - 1;
    while (i >= 0 && piv[i] == N - m + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<SubspaceBasis> subspaces(const GfPtr& F, int N, int m) {
  std::vector<SubspaceBasis> out;
  for_each_subspace(F, N, m, [&](const SubspaceBasis& W) { out.push_back(W); });
  return out;
}

}  // namespace ffmc
