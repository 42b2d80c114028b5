#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ffmc/bigint.hpp"

namespace ffmc {

class Gf;
using GfPtr = std::shared_ptr<const Gf>;

// A finite field GF(p^e), p prime, realized as GF(p)[x]/(modulus) for e > 1.
//
// Elements are packed values in [0, q): the element with coefficient vector
// (c_0, ..., c_{e-1}) in the modulus basis is stored as sum c_i * p^i.
// Packed order (0, 1, ..., q-1) is the canonical enumeration order, with 0
// first; it is also the order used everywhere a "lexicographically smallest"
// choice is made.
//
// A Gf is immutable after construction and safe to share across threads.
class Gf {
 public:
  using El = std::uint32_t;

  /// GF(p^e) with the default modulus: the first monic irreducible of
  /// degree e over GF(p) in packed order.  p must be prime, e >= 1, and
  /// p^e must stay below 2^31 (packed representation limit).
  static GfPtr make(std::uint64_t p, unsigned e = 1);

  /// GF(p^e) with an explicit monic irreducible modulus of degree e,
  /// little-endian, length e+1.  Supplying a modulus for e == 1 is an error.
  static GfPtr make(std::uint64_t p, unsigned e, const std::vector<El>& modulus);

  /// GF(q) for a prime power q, with the default modulus.
  static GfPtr from_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  unsigned ext_degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  Int order_int() const { return Int(q_); }
  /// Modulus coefficients, little-endian, length e+1; empty for prime fields.
  const std::vector<El>& modulus() const { return mod_; }

  bool operator==(const Gf& o) const {
    return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
  }

  El zero() const { return 0; }
  El one() const { return 1; }

  El add(El a, El b) const;
  El sub(El a, El b) const;
  El neg(El a) const;
  El mul(El a, El b) const;
  El inv(El a) const;  // errors on 0
  El div(El a, El b) const { return mul(a, inv(b)); }
  El pow(El a, std::uint64_t n) const;

  /// Coefficient vector of a packed element, little-endian, length e.
  std::vector<El> coeffs(El a) const;
  El from_coeffs(std::span<const El> c) const;

  /// Prime field: decimal residue.  Extension field: comma-separated
  /// residues, low degree first ("1,0,1").
  std::string to_string(El a) const;
  El parse(const std::string& s) const;

 private:
  Gf(std::uint64_t p, unsigned e, std::vector<El> modulus);

  std::uint32_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<El> mod_;  // little-endian, length e+1 for e > 1, else empty
};

inline bool same_field(const GfPtr& a, const GfPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace ffmc
