#include <doctest.h>

#include <set>

#include "ffmc/errors.hpp"
#include "ffmc/gf.hpp"
#include "ffmc/verify.hpp"

using namespace ffmc;

TEST_CASE("prime field construction") {
  auto F = Gf::make(2);
  CHECK(F->order() == 2);
  CHECK(F->ext_degree() == 1);
  CHECK(F->modulus().empty());
  CHECK(F->add(1, 1) == 0);
}

TEST_CASE("GF(4) default modulus is x^2+x+1") {
  auto F = Gf::make(2, 2);
  CHECK(F->order() == 4);
  CHECK(F->modulus() == std::vector<Gf::El>{1, 1, 1});
  // alpha = packed 2 (the class of x); alpha * alpha = alpha + 1 = packed 3
  CHECK(F->mul(2, 2) == 3);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Gf::make(4), DomainError);                       // not prime
  CHECK_THROWS_AS(Gf::make(3, 1, {1, 1}), DomainError);            // modulus for prime field
  CHECK_THROWS_AS(Gf::make(2, 2, {1, 0, 1}), DomainError);         // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(Gf::make(2, 2, {1, 1, 1, 1}), DomainError);      // wrong degree
  CHECK_THROWS_AS(Gf::from_order(12), DomainError);                // not a prime power
}

TEST_CASE("GF(5) inverse") {
  auto F = Gf::make(5);
  CHECK(F->inv(2) == 3);
  CHECK_THROWS_AS(F->inv(0), DomainError);
}

TEST_CASE("element enumeration is 0..q-1 with distinct coefficient vectors") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 8ull, 9ull}) {
    auto F = Gf::from_order(q);
    std::set<std::vector<Gf::El>> seen;
    for (Gf::El a = 0; a < F->order(); ++a) seen.insert(F->coeffs(a));
    CHECK(seen.size() == q);
    CHECK(*seen.begin() == std::vector<Gf::El>(F->ext_degree(), 0));  // zero first
  }
}

TEST_CASE("field axioms on random triples") {
  SplitMix64 g(7);
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 8ull, 9ull, 16ull, 25ull, 27ull}) {
    auto F = Gf::from_order(q);
    for (int it = 0; it < 200; ++it) {
      Gf::El a = static_cast<Gf::El>(g.below(q));
      Gf::El b = static_cast<Gf::El>(g.below(q));
      Gf::El c = static_cast<Gf::El>(g.below(q));
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
    }
  }
}

TEST_CASE("inverses, exhaustive for q <= 64") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 8ull, 16ull, 32ull, 64ull, 5ull, 25ull, 49ull,
                          27ull, 9ull}) {
    auto F = Gf::from_order(q);
    for (Gf::El a = 1; a < F->order(); ++a) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("Frobenius is additive, exhaustive for q <= 16") {
  for (std::uint64_t q : {2ull, 4ull, 8ull, 16ull, 3ull, 9ull, 5ull, 7ull, 13ull}) {
    auto F = Gf::from_order(q);
    const std::uint64_t p = F->characteristic();
    for (Gf::El a = 0; a < F->order(); ++a)
      for (Gf::El b = 0; b < F->order(); ++b)
        CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
  }
}

TEST_CASE("string round trip") {
  auto F2 = Gf::make(2);
  CHECK(F2->to_string(1) == "1");
  CHECK(F2->parse("1") == 1);
  auto F9 = Gf::make(3, 2);
  for (Gf::El a = 0; a < 9; ++a) CHECK(F9->parse(F9->to_string(a)) == a);
  CHECK_THROWS_AS(F9->parse("1"), ParseError);   // wrong length
  CHECK_THROWS_AS(F2->parse("5"), ParseError);   // not reduced
}

TEST_CASE("larger prime field") {
  auto F = Gf::make(46337);
  CHECK(F->mul(F->inv(12345), 12345) == 1);
}
