#include <doctest.h>

#include <set>

#include "ffmc/errors.hpp"
#include "ffmc/poly.hpp"
#include "ffmc/verify.hpp"

using namespace ffmc;

namespace {

// Independent irreducibility oracle: trial division by every monic
// polynomial of degree 1..n/2.
bool irreducible_by_trial_division(const Poly& f) {
  const int n = f.degree().value();
  for (int d = 1; 2 * d <= n; ++d)
    for (const Poly& g : monic_polys(f.field(), d))
      if (poly_mod(f, g).is_zero()) return false;
  return true;
}

Poly from(const GfPtr& F, std::vector<Gf::El> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("degree sentinel") {
  auto F = Gf::make(2);
  CHECK(Poly::zero(F).degree() == Degree::neg_infinity());
  CHECK(Poly::zero(F).degree() < 0);
  CHECK(Poly::zero(F).degree() < -1000000);
  CHECK(Poly::one(F).degree() == 0);
  CHECK_THROWS_AS(Poly::zero(F).degree().value(), DomainError);
}

TEST_CASE("divmod") {
  auto F2 = Gf::make(2);
  SUBCASE("(x^2+1) / (x+1) over GF(2)") {
    auto dm = divmod(from(F2, {1, 0, 1}), from(F2, {1, 1}));
    CHECK(dm.quotient == from(F2, {1, 1}));
    CHECK(dm.remainder.is_zero());
  }
  SUBCASE("division by one") {
    Poly f = from(F2, {1, 1, 0, 1});
    auto dm = divmod(f, Poly::one(F2));
    CHECK(dm.quotient == f);
    CHECK(dm.remainder.is_zero());
  }
  SUBCASE("(x^3+2x+1) / x^2 over GF(3)") {
    auto F3 = Gf::make(3);
    auto dm = divmod(from(F3, {1, 2, 0, 1}), from(F3, {0, 0, 1}));
    CHECK(dm.quotient == from(F3, {0, 1}));
    CHECK(dm.remainder == from(F3, {1, 2}));
  }
  SUBCASE("division by zero") {
    CHECK_THROWS_AS(divmod(Poly::one(F2), Poly::zero(F2)), DomainError);
  }
  SUBCASE("reconstruction on random pairs") {
    SplitMix64 g(11);
    auto F3 = Gf::make(3);
    for (int it = 0; it < 300; ++it) {
      std::vector<Gf::El> cf(g.below(7)), cg(1 + g.below(5));
      for (auto& v : cf) v = static_cast<Gf::El>(g.below(3));
      for (auto& v : cg) v = static_cast<Gf::El>(g.below(3));
      Poly f = from(F3, cf), gp = from(F3, cg);
      if (gp.is_zero()) continue;
      auto dm = divmod(f, gp);
      CHECK(dm.quotient * gp + dm.remainder == f);
      CHECK(dm.remainder.degree() < gp.degree());
    }
  }
}

TEST_CASE("monic gcd") {
  auto F3 = Gf::make(3);
  SUBCASE("common root") {
    // x^2-1 and x-1 share the root 1; monic gcd is x+2
    CHECK(gcd_monic({from(F3, {2, 0, 1}), from(F3, {2, 1})}) == from(F3, {2, 1}));
  }
  SUBCASE("single element is made monic") {
    CHECK(gcd_monic({from(F3, {2, 2})}) == from(F3, {1, 1}));
  }
  SUBCASE("distinct linear factors are coprime") {
    CHECK(gcd_monic({from(F3, {1, 1}), from(F3, {2, 1})}).is_one());
  }
  SUBCASE("zeros are ignored; all-zero gives zero") {
    CHECK(gcd_monic({Poly::zero(F3), from(F3, {0, 1})}) == from(F3, {0, 1}));
    CHECK(gcd_monic({Poly::zero(F3), Poly::zero(F3)}).is_zero());
    CHECK_THROWS_AS(gcd_monic(std::vector<Poly>{}), DomainError);
  }
  SUBCASE("gcd(f h, g h) = monic(h) gcd(f, g)") {
    SplitMix64 g(13);
    for (int it = 0; it < 200; ++it) {
      auto rand_poly = [&](int maxdeg) {
        std::vector<Gf::El> c(g.below(maxdeg + 1) + 1);
        for (auto& v : c) v = static_cast<Gf::El>(g.below(3));
        return from(F3, c);
      };
      Poly f = rand_poly(3), gg = rand_poly(3), h = rand_poly(2);
      if (h.is_zero() || (f.is_zero() && gg.is_zero())) continue;
      CHECK(gcd_monic({f * h, gg * h}) == make_monic(h) * gcd_monic({f, gg}));
    }
  }
}

TEST_CASE("irreducibility") {
  auto F2 = Gf::make(2);
  CHECK(is_irreducible(from(F2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(from(F2, {1, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(Poly::constant(F2, 1)), DomainError);
  auto F3 = Gf::make(3);
  CHECK_THROWS_AS(is_irreducible(from(F3, {1, 2})), DomainError);  // not monic

  SUBCASE("the three irreducible quartics over GF(2)") {
    std::set<std::vector<Gf::El>> got;
    for_each_irreducible(F2, 4, [&](const Poly& f) { got.insert(f.coeffs()); });
    std::set<std::vector<Gf::El>> want = {
        {1, 1, 0, 0, 1}, {1, 0, 0, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(got == want);
  }

  SUBCASE("Rabin agrees with trial division, exhaustive q <= 3, n <= 6") {
    for (std::uint64_t q : {2ull, 3ull}) {
      auto F = Gf::from_order(q);
      for (int n = 1; n <= 6; ++n)
        for_each_monic(F, n, [&](const Poly& f) {
          CHECK(is_irreducible(f) == irreducible_by_trial_division(f));
        });
    }
  }
}

TEST_CASE("enumeration") {
  auto F2 = Gf::make(2);
  SUBCASE("monic degree 1 over GF(2) is [x, x+1]") {
    auto v = monic_polys(F2, 1);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == from(F2, {0, 1}));
    CHECK(v[1] == from(F2, {1, 1}));
  }
  SUBCASE("q^deg monic polynomials") {
    auto F3 = Gf::make(3);
    CHECK(monic_polys(F3, 2).size() == 9);
    CHECK(monic_polys(F2, 0).size() == 1);
    CHECK_THROWS_AS(monic_polys(F2, -1), DomainError);
  }
}

TEST_CASE("irreducible counts") {
  CHECK(count_irreducible(Int(2), 1) == 2);
  CHECK(count_irreducible(Int(2), 4) == 3);
  CHECK(count_irreducible(Int(3), 2) == 3);
  SUBCASE("necklace formula matches enumeration for q <= 4, n <= 6") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
      auto F = Gf::from_order(q);
      for (int n = 1; n <= 6; ++n) {
        if (q == 4 && n > 4) break;  // keep the sweep quick
        CHECK(Int(irreducible_polys(F, n).size()) == count_irreducible(Int(q), n));
      }
    }
  }
}

TEST_CASE("powmod and evaluation") {
  auto F5 = Gf::make(5);
  Poly m = from(F5, {1, 0, 0, 1});  // x^3 + 1
  Poly r = powmod(Poly::x(F5), 9, m);
  // x^9 = (x^3)^3 = (-1)^3 = -1 = 4 mod x^3+1
  CHECK(r == Poly::constant(F5, 4));
  CHECK(from(F5, {1, 2, 3}).eval(2) == (1 + 2 * 2 + 3 * 4) % 5);
}
