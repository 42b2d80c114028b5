#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "ffmc/bigint.hpp"
#include "ffmc/gf.hpp"

namespace ffmc {

// Degree of a polynomial: a non-negative integer, or -infinity for the zero
// polynomial.  Kept as a distinct type so the sentinel cannot leak into
// integer arithmetic by accident.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(int v) : finite_(true), v_(v) {}

  bool finite() const { return finite_; }
  int value() const;  // errors when -infinity

  friend bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(Degree a, int b) { return a.finite_ && a.v_ == b; }
  friend std::strong_ordering operator<=>(Degree a, int b) {
    if (!a.finite_) return std::strong_ordering::less;
    return a.v_ <=> b;
  }

 private:
  Degree() : finite_(false), v_(0) {}
  bool finite_;
  int v_;
};

// Dense univariate polynomial over a finite field, little-endian coefficient
// vector with no trailing zeros (empty vector = zero polynomial).  Immutable
// value type; all operations are pure.
class Poly {
 public:
  Poly(GfPtr F, std::vector<Gf::El> coeffs);

  static Poly zero(GfPtr F) { return Poly(std::move(F), {}); }
  static Poly one(GfPtr F) { return constant(std::move(F), 1); }
  static Poly constant(GfPtr F, Gf::El c) { return Poly(std::move(F), {c}); }
  static Poly x(GfPtr F) { return Poly(std::move(F), {0, 1}); }
  /// c * x^n
  static Poly monomial(GfPtr F, Gf::El c, int n);

  const GfPtr& field() const { return F_; }
  const std::vector<Gf::El>& coeffs() const { return c_; }
  /// Coefficient of x^i (0 beyond the degree).
  Gf::El coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  Degree degree() const {
    return c_.empty() ? Degree::neg_infinity() : Degree(static_cast<int>(c_.size()) - 1);
  }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Gf::El leading() const;  // errors on zero

  Gf::El eval(Gf::El a) const;

  bool operator==(const Poly& o) const;

 private:
  GfPtr F_;
  std::vector<Gf::El> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Gf::El s);
/// a * x^n
Poly shift_up(const Poly& a, int n);

struct DivModResult {
  Poly quotient;
  Poly remainder;
};
/// f = q*g + r with deg r < deg g.  Errors when g = 0.
DivModResult divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);
bool divides(const Poly& d, const Poly& f);

Poly make_monic(const Poly& f);

/// Monic GCD of a nonempty list; zeros are ignored; all-zero input gives 0.
Poly gcd_monic(const std::vector<Poly>& fs);
Poly gcd_monic(const Poly& a, const Poly& b);

/// base^e mod m, exponent a machine word.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin's criterion.  Requires monic f of degree >= 1.
bool is_irreducible(const Poly& f);

/// Visit all monic polynomials of the given degree over F in packed order
/// (constant coefficient fastest).  deg >= 0.
void for_each_monic(const GfPtr& F, int deg, const std::function<void(const Poly&)>& fn);
std::vector<Poly> monic_polys(const GfPtr& F, int deg);

/// Monic irreducibles of the given degree, in the same order.  deg >= 1.
void for_each_irreducible(const GfPtr& F, int deg, const std::function<void(const Poly&)>& fn);
std::vector<Poly> irreducible_polys(const GfPtr& F, int deg);

/// Gauss necklace count: (1/n) sum_{d | n} mu(n/d) q^d.
Int count_irreducible(const Int& q, int deg);

}  // namespace ffmc
