#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffmc/gf.hpp"
#include "ffmc/poly.hpp"

namespace ffmc {

// Dense matrix over a finite field, row-major.  Value type; operations are
// pure and never mutate their arguments.
class MatF {
 public:
  MatF(GfPtr F, int rows, int cols);
  MatF(GfPtr F, int rows, int cols, std::vector<Gf::El> entries);

  static MatF zero(GfPtr F, int rows, int cols) { return MatF(std::move(F), rows, cols); }
  static MatF identity(GfPtr F, int n);
  /// I_{n,k}: ones on the main diagonal of an n x k rectangle.
  static MatF rect_identity(GfPtr F, int n, int k);
  /// Entries filled from the base-q digits of idx, row-major, entry (0,0)
  /// fastest.  This is the canonical enumeration order of M_{rows,cols}(F).
  static MatF from_index(GfPtr F, int rows, int cols, std::uint64_t idx);

  const GfPtr& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Gf::El at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, Gf::El v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }
  const std::vector<Gf::El>& entries() const { return a_; }

  bool is_zero() const;
  bool operator==(const MatF& o) const;

  MatF transpose() const;
  MatF submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  MatF col(int j) const;

 private:
  GfPtr F_;
  int rows_, cols_;
  std::vector<Gf::El> a_;
};

MatF operator+(const MatF& a, const MatF& b);
MatF operator-(const MatF& a, const MatF& b);
MatF operator-(const MatF& a);
MatF operator*(const MatF& a, const MatF& b);
MatF hconcat(const MatF& a, const MatF& b);
MatF vconcat(const MatF& a, const MatF& b);

struct RrefResult {
  MatF R;
  int rank;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};
RrefResult rref(const MatF& M);

int rank(const MatF& M);
Gf::El det(const MatF& M);  // errors on non-square
std::optional<MatF> inverse(const MatF& M);

// An m-dimensional subspace of F^N, canonically represented by the unique
// basis in reduced row echelon form (m nonzero rows).  Two SubspaceBasis
// values are equal iff they are the same subspace.
struct SubspaceBasis {
  int ambient;
  MatF basis;  // dim x ambient, in RREF
  int dim() const { return basis.rows(); }
  bool operator==(const SubspaceBasis& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
};

/// Canonicalize the row space of M (drops zero rows).
SubspaceBasis row_space(const MatF& M);
/// Null space of M, canonical RREF basis.
SubspaceBasis kernel(const MatF& M);

/// Characteristic polynomial det(xI - M), monic of degree n, computed by
/// Hessenberg reduction (valid in any characteristic).
Poly char_poly(const MatF& M);

/// Visit every m-dimensional subspace of F^N exactly once: all pivot-column
/// profiles in lexicographic order, free entries in packed order.
void for_each_subspace(const GfPtr& F, int N, int m,
                       const std::function<void(const SubspaceBasis&)>& fn);
std::vector<SubspaceBasis> subspaces(const GfPtr& F, int N, int m);

}  // namespace ffmc
