#include "ffmc/poly.hpp"

#include <algorithm>

#include "ffmc/errors.hpp"

namespace ffmc {

int Degree::value() const {
  if (!finite_) throw DomainError("degree of the zero polynomial has no integer value");
  return v_;
}

Poly::Poly(GfPtr F, std::vector<Gf::El> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  if (!F_) throw DomainError("polynomial needs a field");
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(GfPtr F, Gf::El c, int n) {
  if (n < 0) throw DomainError("monomial degree must be >= 0");
  std::vector<Gf::El> v(n + 1, 0);
  v[n] = c;
  return Poly(std::move(F), std::move(v));
}

Gf::El Poly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Gf::El Poly::eval(Gf::El a) const {
  const Gf& F = *F_;
  Gf::El r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F.add(F.mul(r, a), *it);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return same_field(F_, o.F_) && c_ == o.c_;
}

namespace {
void check_same(const Poly& a, const Poly& b) {
  if (!same_field(a.field(), b.field()))
    throw DomainError("polynomials over different fields");
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a, b);
  const Gf& F = *a.field();
  std::vector<Gf::El> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a) {
  const Gf& F = *a.field();
  std::vector<Gf::El> c(a.coeffs());
  for (auto& v : c) v = F.neg(v);
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  const Gf& F = *a.field();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Gf::El> c(ca.size() + cb.size() - 1, 0);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (size_t j = 0; j < cb.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(ca[i], cb[j]));
  }
  return Poly(a.field(), std::move(c));
}

Poly scale(const Poly& a, Gf::El s) {
  const Gf& F = *a.field();
  std::vector<Gf::El> c(a.coeffs());
  for (auto& v : c) v = F.mul(v, s);
  return Poly(a.field(), std::move(c));
}

Poly shift_up(const Poly& a, int n) {
  if (a.is_zero()) return a;
  std::vector<Gf::El> c(a.coeffs().size() + n, 0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + n);
  return Poly(a.field(), std::move(c));
}

DivModResult divmod(const Poly& f, const Poly& g) {
  check_same(f, g);
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const Gf& F = *f.field();
  const int dg = g.degree().value();
  std::vector<Gf::El> rem(f.coeffs());
  if (static_cast<int>(rem.size()) - 1 < dg)
    return {Poly::zero(f.field()), f};
  std::vector<Gf::El> quot(rem.size() - dg, 0);
  const Gf::El linv = F.inv(g.leading());
  for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
    if (rem[i] == 0) continue;
    const Gf::El c = F.mul(rem[i], linv);
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j)
      rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, g.coeff(j)));
  }
  return {Poly(f.field(), std::move(quot)), Poly(f.field(), std::move(rem))};
}

Poly poly_mod(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

bool divides(const Poly& d, const Poly& f) {
  if (d.is_zero()) return f.is_zero();
  return poly_mod(f, d).is_zero();
}

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.field()->inv(f.leading()));
}

Poly gcd_monic(const Poly& a, const Poly& b) {
  check_same(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return make_monic(x);
}

Poly gcd_monic(const std::vector<Poly>& fs) {
  if (fs.empty()) throw DomainError("gcd of an empty list");
  Poly g = Poly::zero(fs.front().field());
  for (const auto& f : fs) {
    g = gcd_monic(g, f);
    if (g.is_one()) break;  // gcd can only stay 1
  }
  return g;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::one(base.field());
  Poly b = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mod(r * b, m);
    b = poly_mod(b * b, m);
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw DomainError("irreducibility test requires a monic polynomial of degree >= 1");
  const int n = f.degree().value();
  if (n == 1) return true;
  const GfPtr& F = f.field();
  const std::uint64_t q = F->order();
  const Poly x = Poly::x(F);

  // Frobenius iterates: x^{q^j} mod f, advanced one q-power at a time so the
  // exponent never leaves machine range.
  auto frob = [&](const Poly& g) { return powmod(g, q, f); };

  // Rabin: f irreducible of degree n iff x^{q^n} = x (mod f) and, for every
  // prime r | n, gcd(x^{q^{n/r}} - x, f) = 1.
  std::vector<int> prime_divs;
  int t = n;
  for (int r = 2; r * r <= t; ++r)
    if (t % r == 0) {
      prime_divs.push_back(r);
      while (t % r == 0) t /= r;
    }
  if (t > 1) prime_divs.push_back(t);

  for (int r : prime_divs) {
    Poly g = x;
    for (int j = 0; j < n / r; ++j) g = frob(g);
    if (!gcd_monic(g - x, f).is_one()) return false;
  }
  Poly g = x;
  for (int j = 0; j < n; ++j) g = frob(g);
  return g == x;
}

void for_each_monic(const GfPtr& F, int deg, const std::function<void(const Poly&)>& fn) {
  if (deg < 0) throw DomainError("degree must be >= 0");
  const std::uint64_t q = F->order();
  Int total = int_pow(Int(q), deg);
  if (total > Int(1) << 62) throw BudgetError("too many monic polynomials to enumerate");
  const std::uint64_t n = total.convert_to<std::uint64_t>();
  for (std::uint64_t v = 0; v < n; ++v) {
    std::vector<Gf::El> c(deg + 1, 0);
    std::uint64_t t = v;
    for (int i = 0; i < deg; ++i) {
      c[i] = static_cast<Gf::El>(t % q);
      t /= q;
    }
    c[deg] = 1;
    fn(Poly(F, std::move(c)));
  }
}

std::vector<Poly> monic_polys(const GfPtr& F, int deg) {
  std::vector<Poly> out;
  for_each_monic(F, deg, [&](const Poly& f) { out.push_back(f); });
  return out;
}

void for_each_irreducible(const GfPtr& F, int deg, const std::function<void(const Poly&)>& fn) {
  if (deg < 1) throw DomainError("irreducible polynomials have degree >= 1");
  for_each_monic(F, deg, [&](const Poly& f) {
    if (is_irreducible(f)) fn(f);
  });
}

std::vector<Poly> irreducible_polys(const GfPtr& F, int deg) {
  std::vector<Poly> out;
  for_each_irreducible(F, deg, [&](const Poly& f) { out.push_back(f); });
  return out;
}

namespace {
int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  if (n > 1) m = -m;
  return m;
}
}  // namespace

Int count_irreducible(const Int& q, int deg) {
  if (deg < 1) throw DomainError("irreducible count requires degree >= 1");
  Int s = 0;
  for (int d = 1; d <= deg; ++d) {
    if (deg % d) continue;
    s += moebius(deg / d) * int_pow(q, d);
  }
  return s / deg;  // exact
}

}  // namespace ffmc
