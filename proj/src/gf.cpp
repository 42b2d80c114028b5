#include "ffmc/gf.hpp"

#include <algorithm>
#include <sstream>

#include "ffmc/errors.hpp"

namespace ffmc {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Minimal polynomial arithmetic over GF(p) on little-endian digit vectors,
// used only to select and validate moduli at field construction.  The full
// polynomial ring lives in poly.hpp and is built on top of Gf, so it cannot
// be used here.
using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b nonzero; both little-endian, b monic not required.
Digits mod_digits(Digits a, const Digits& b, std::uint64_t p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  std::uint64_t lead = b[db];
  // lead^{-1} mod p by Fermat
  std::uint64_t linv = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) linv = linv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    std::uint64_t c = a[da] % p * linv % p;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t s = c * b[j] % p;
      a[da - db + j] = static_cast<std::uint32_t>((a[da - db + j] + p - s) % p);
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool is_zero(const Digits& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..e/2.  Fine at the
// supported field sizes (q < 2^31 forces p^{e/2+1} small).
bool irreducible_over_prime(const Digits& f, std::uint64_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e < 1) return false;
  for (int d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Digits g(d + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (is_zero(mod_digits(f, g, p))) return false;
    }
  }
  return true;
}

Digits default_modulus(std::uint64_t p, unsigned e) {
  // First monic irreducible of degree e in packed order.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    Digits f(e + 1, 0);
    std::uint64_t t = v;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[e] = 1;
    if (irreducible_over_prime(f, p)) return f;
  }
  throw InvariantError("no irreducible modulus found");  // unreachable
}

}  // namespace

Gf::Gf(std::uint64_t p, unsigned e, std::vector<El> modulus)
    : p_(static_cast<std::uint32_t>(p)), e_(e), mod_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < e_; ++i) q_ *= p;
}

GfPtr Gf::make(std::uint64_t p, unsigned e) {
  if (!is_prime_u64(p)) throw DomainError("field characteristic must be prime");
  if (e < 1) throw DomainError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= (1ull << 31)) throw DomainError("field order p^e must be < 2^31");
  }
  std::vector<El> mod;
  if (e > 1) mod = default_modulus(p, e);
  return GfPtr(new Gf(p, e, std::move(mod)));
}

GfPtr Gf::make(std::uint64_t p, unsigned e, const std::vector<El>& modulus) {
  if (e == 1) throw DomainError("modulus supplied for prime field");
  if (!is_prime_u64(p)) throw DomainError("field characteristic must be prime");
  if (modulus.size() != e + 1 || modulus[e] != 1)
    throw DomainError("modulus must be monic of degree e");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= (1ull << 31)) throw DomainError("field order p^e must be < 2^31");
  }
  for (El c : modulus)
    if (c >= p) throw DomainError("modulus coefficients must be reduced mod p");
  if (!irreducible_over_prime(modulus, p))
    throw DomainError("modulus must be irreducible over GF(p)");
  return GfPtr(new Gf(p, e, modulus));
}

GfPtr Gf::from_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be >= 2");
  // Factor q = p^e by finding its smallest prime divisor.
  std::uint64_t p = 0;
  if (q % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = q;  // q itself prime
  }
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw DomainError("field order must be a prime power");
  return make(p, e);
}

Gf::El Gf::add(El a, El b) const {
  if (e_ == 1) {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<El>(s >= q_ ? s - q_ : s);
  }
  if (p_ == 2) return a ^ b;  // digitwise mod-2, no carries
  El r = 0, mul = 1;
  for (unsigned i = 0; i < e_; ++i) {
    El da = (a / mul) % p_ + (b / mul) % p_;
    if (da >= p_) da -= p_;
    r += da * mul;
    mul *= p_;
  }
  return r;
}

Gf::El Gf::neg(El a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<El>(q_ - a);
  if (p_ == 2) return a;
  El r = 0, mul = 1;
  for (unsigned i = 0; i < e_; ++i) {
    El d = (a / mul) % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    mul *= p_;
  }
  return r;
}

Gf::El Gf::sub(El a, El b) const { return add(a, neg(b)); }

Gf::El Gf::mul(El a, El b) const {
  if (e_ == 1)
    return static_cast<El>(std::uint64_t(a) * b % q_);
  if (a == 0 || b == 0) return 0;
  // Schoolbook product of coefficient vectors, then reduction by the monic
  // modulus.  e is small enough that the u64 accumulators cannot overflow:
  // e > 1 forces p < 2^16, so each term is < 2^32 and e of them fit.
  std::uint32_t da[32], db[32];
  std::uint64_t prod[63] = {0};
  El t = a;
  for (unsigned i = 0; i < e_; ++i) {
    da[i] = t % p_;
    t /= p_;
  }
  t = b;
  for (unsigned i = 0; i < e_; ++i) {
    db[i] = t % p_;
    t /= p_;
  }
  for (unsigned i = 0; i < e_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < e_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
  }
  for (unsigned i = 0; i < 2 * e_ - 1; ++i) prod[i] %= p_;
  // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
  for (int i = 2 * static_cast<int>(e_) - 2; i >= static_cast<int>(e_); --i) {
    std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < e_; ++j) {
      std::uint64_t s = c * mod_[j] % p_;
      prod[i - e_ + j] = (prod[i - e_ + j] + p_ - s) % p_;
    }
  }
  El r = 0, mulv = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += static_cast<El>(prod[i]) * mulv;
    mulv *= p_;
  }
  return r;
}

Gf::El Gf::pow(El a, std::uint64_t n) const {
  El r = 1, b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

Gf::El Gf::inv(El a) const {
  if (a == 0) throw DomainError("inverse of zero field element");
  return pow(a, q_ - 2);  // a^{q-1} = 1 for nonzero a
}

std::vector<Gf::El> Gf::coeffs(El a) const {
  std::vector<El> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Gf::El Gf::from_coeffs(std::span<const El> c) const {
  if (c.size() != e_) throw DomainError("coefficient vector has wrong length");
  El r = 0, mul = 1;
  for (unsigned i = 0; i < e_; ++i) {
    if (c[i] >= p_) throw DomainError("coefficient not reduced mod p");
    r += c[i] * mul;
    mul *= p_;
  }
  return r;
}

std::string Gf::to_string(El a) const {
  if (e_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s;
  for (unsigned i = 0; i < e_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

Gf::El Gf::parse(const std::string& s) const {
  std::vector<El> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      unsigned long v = std::stoul(tok);
      if (v >= p_) throw ParseError("residue " + tok + " not reduced mod p");
      c.push_back(static_cast<El>(v));
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("bad field element: '" + s + "'");
    }
  }
  if (c.size() != e_) throw ParseError("field element '" + s + "' has wrong length");
  return from_coeffs(c);
}

}  // namespace ffmc
