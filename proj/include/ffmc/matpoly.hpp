#pragma once

#include <vector>

#include "ffmc/matf.hpp"
#include "ffmc/poly.hpp"

namespace ffmc {

// An n x k matrix polynomial sum A_i x^i over F_q, stored as a grid of
// polynomial entries (the "polynomial matrix" view).  The coefficient-matrix
// view is available through coeff()/coeff_matrices().  Trailing all-zero
// coefficient matrices never exist in this representation, so the degree is
// canonical.
class MatPoly {
 public:
  MatPoly(GfPtr F, int n, int k, std::vector<Poly> entries);

  static MatPoly zero(GfPtr F, int n, int k);
  static MatPoly constant(const MatF& A);
  /// From ascending coefficient matrices A_0, ..., A_d (all same shape).
  static MatPoly from_coeffs(const std::vector<MatF>& coeffs);

  const GfPtr& field() const { return F_; }
  int rows() const { return n_; }
  int cols() const { return k_; }
  const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * k_ + j]; }
  void set(int i, int j, Poly p);

  /// Max entry degree; -infinity for the zero matrix.
  Degree degree() const;
  /// Coefficient matrix of x^i.
  MatF coeff(int i) const;
  std::vector<MatF> coeff_matrices() const;  // ascending, degree+1 of them
  bool is_zero() const;

  MatPoly transpose() const;
  MatPoly submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  bool operator==(const MatPoly& o) const;

 private:
  GfPtr F_;
  int n_, k_;
  std::vector<Poly> e_;
};

MatPoly operator+(const MatPoly& a, const MatPoly& b);
MatPoly operator-(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const MatPoly& a, const MatPoly& b);

/// Determinant of a square matrix polynomial (expansion over column subsets;
/// exact, no division).
Poly poly_det(const MatPoly& M);

/// Monic GCD of all r x r minors; 0 iff every minor vanishes.
/// 1 <= r <= min(n, k).
Poly minors_gcd(const MatPoly& M, int r);

/// GCD of the maximal minors equals 1.  Agrees with the Smith-form
/// criterion (all invariant factors units); both routes are kept and tested
/// against each other.
bool is_unimodular(const MatPoly& M);

/// x I_{n,k} - Y.
MatPoly linear_pencil(const MatF& Y);

// U * M * V = D with U, V square of constant nonzero determinant, D diagonal
// with monic invariant factors f_1 | f_2 | ... | f_r (r = min(n, k)); unit
// factors are the constant 1, and zero factors (rank-deficient input) are
// the zero polynomial.
struct SmithForm {
  MatPoly U, D, V;
  std::vector<Poly> factors;
};
SmithForm smith_form(const MatPoly& M);

// Linearization of a matrix polynomial with top coefficient I_{n,k}: the
// nd x (nd-n+k) matrix B with identity blocks on the block subdiagonal and
// last block column (-A_0, ..., -A_{d-1}), together with its pencil
// x [I_{(d-1)n+k}; 0] - B.  The pencil has the same non-unit invariant
// factors as the input.
struct Linearization {
  MatF B;
  MatPoly pencil;
};
Linearization linearize(const MatPoly& A);

/// Member of M_{n,k}(F[x]; d): top coefficient exactly I_{n,k} at degree d.
bool is_monic_rect(const MatPoly& A, int d);

}  // namespace ffmc
