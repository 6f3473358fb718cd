// Prime field, monomial orders, polynomial arithmetic, parser round trips.
#include <catch2/catch_amalgamated.hpp>

#include "cy7/parser.hpp"
#include "cy7/rng.hpp"

using namespace cy7;

TEST_CASE("prime field axioms on random samples") {
  PrimeField F(32003);
  Rng rng(20240811);
  for (int it = 0; it < 200; ++it) {
    fp_t a = F.random(rng), b = F.random(rng), c = F.random(rng);
    REQUIRE(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
    REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    REQUIRE(F.add(a, F.neg(a)) == 0);
    if (a != 0) {
      REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
  }
  REQUIRE_THROWS_AS(F.inv(0), std::domain_error);
  REQUIRE_THROWS_AS(PrimeField(32004), std::invalid_argument);
}

TEST_CASE("small characteristic reduction") {
  PrimeField F(5);
  REQUIRE(F.from_int(-1) == 4);
  REQUIRE(F.from_int(12) == 2);
  REQUIRE(F.pow(2, 4) == 1);
}

TEST_CASE("monomial order axioms") {
  Rng rng(7);
  auto random_mono = [&](int n, int maxdeg) {
    Monomial m;
    int deg = 0;
    for (int i = 0; i < n; ++i) {
      int e = static_cast<int>(rng.below(maxdeg + 1));
      m.e[i] = static_cast<uint8_t>(e);
      deg += e;
    }
    m.deg = static_cast<uint16_t>(deg);
    return m;
  };

  for (MonomialOrder ord : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                            MonomialOrder::elim(3)}) {
    for (int it = 0; it < 300; ++it) {
      Monomial a = random_mono(6, 4), b = random_mono(6, 4), c = random_mono(6, 4);
      // totality / antisymmetry
      int ab = ord.compare(a, b);
      REQUIRE(ab == -ord.compare(b, a));
      if (a == b) REQUIRE(ab == 0);
      // multiplicativity: a < b implies ac < bc
      if (ab < 0) REQUIRE(ord.compare(a * c, b * c) < 0);
      // order refines divisibility
      if (a.divides(b) && a != b) REQUIRE(ord.compare(a, b) < 0);
      // transitivity spot check
      Monomial lo = ab <= 0 ? a : b, hi = ab <= 0 ? b : a;
      if (ord.compare(hi, c) <= 0) REQUIRE(ord.compare(lo, c) <= 0);
    }
  }

  SECTION("grevlex and lex disagree on a known pair") {
    // x0*x2^2 vs x1^3
    Monomial a = Monomial::var(0) * Monomial::var(2, 2);
    Monomial b = Monomial::var(1, 3);
    REQUIRE(MonomialOrder::grevlex().compare(a, b) < 0);
    REQUIRE(MonomialOrder::lex().compare(a, b) > 0);
  }

  SECTION("elimination order puts the block first") {
    Monomial t = Monomial::var(0);
    Monomial big = Monomial::var(5, 7);
    REQUIRE(MonomialOrder::elim(1).compare(t, big) > 0);
  }
}

TEST_CASE("polynomial arithmetic") {
  RingPtr R = Ring::projective(32003, 8);

  SECTION("(x0 + x1)(x0 - x1) = x0^2 - x1^2") {
    Polynomial f = parse("x0 + x1", R);
    Polynomial g = parse("x0 - x1", R);
    REQUIRE(f * g == parse("x0^2 - x1^2", R));
  }

  SECTION("f * 0 = 0") {
    Polynomial f = parse("3*x0^2*x3 + x5 - 2*x7", R);
    REQUIRE((f * Polynomial::zero(R)).is_zero());
  }

  SECTION("multiplication of homogeneous inputs adds degrees") {
    Rng rng(99);
    const auto& F = R->field;
    auto random_homog = [&](int d) {
      std::vector<Term> ts;
      for (const auto& m : monomials_of_degree(8, d))
        if (rng.below(4) == 0) ts.push_back({m, F.random(rng)});
      return Polynomial::from_terms(R, R->order, std::move(ts));
    };
    int done = 0;
    while (done < 100) {
      Polynomial f = random_homog(static_cast<int>(rng.below(3)) + 1);
      Polynomial g = random_homog(static_cast<int>(rng.below(3)) + 1);
      if (f.is_zero() || g.is_zero()) continue;
      Polynomial h = f * g;
      REQUIRE(h.is_homogeneous());
      REQUIRE(h.degree() == f.degree() + g.degree());
      ++done;
    }
  }

  SECTION("ring mismatch is an error") {
    RingPtr Z = Ring::matrix3x3(32003);
    REQUIRE_THROWS_AS(parse("x0", R) * parse("z11", Z), std::invalid_argument);
  }

  SECTION("normal form uniqueness: equal polynomials, identical term lists") {
    Polynomial a = parse("x0*x3 - x1*x2 + x0*x3", R);
    Polynomial b = parse("2*x0*x3 - x1*x2", R);
    REQUIRE(a == b);
    REQUIRE(a.terms().size() == 2);
  }

  SECTION("derivative and Euler relation") {
    Polynomial f = parse("x0^2*x1 + 5*x2^3", R);
    Polynomial euler = Polynomial::zero(R);
    for (int i = 0; i < 8; ++i)
      euler = euler + f.derivative(i) * Polynomial::variable(R, i);
    REQUIRE(euler == f * R->field.from_int(3));
  }
}

TEST_CASE("parser") {
  RingPtr R = Ring::projective(32003, 8);

  SECTION("two-term quadric") {
    Polynomial f = parse("x0*x3 - x1*x2", R);
    REQUIRE(f.size() == 2);
    REQUIRE(f.degree() == 2);
    REQUIRE(f.is_homogeneous());
  }

  SECTION("coefficient reduces mod p") {
    REQUIRE(parse("x0^2 + 32003*x1^2", R) == parse("x0^2", R));
  }

  SECTION("errors carry positions") {
    REQUIRE_THROWS_AS(parse("x0 + + x1", R), ParseError);
    REQUIRE_THROWS_AS(parse("x9", R), ParseError);
    REQUIRE_THROWS_AS(parse("x0 $ x1", R), ParseError);
    REQUIRE_THROWS_AS(parse_homogeneous("x0^2 + x1", R), ParseError);
  }

  SECTION("print/parse round trip on random polynomials") {
    Rng rng(1234);
    const auto& F = R->field;
    int terms_seen = 0;
    for (int it = 0; it < 200 || terms_seen < 1000; ++it) {
      std::vector<Term> ts;
      int nt = 1 + static_cast<int>(rng.below(12));
      for (int k = 0; k < nt; ++k) {
        Monomial m;
        int deg = 0;
        for (int i = 0; i < 8; ++i) {
          int e = static_cast<int>(rng.below(3));
          m.e[i] = static_cast<uint8_t>(e);
          deg += e;
        }
        m.deg = static_cast<uint16_t>(deg);
        ts.push_back({m, F.random(rng)});
        ++terms_seen;
      }
      Polynomial f = Polynomial::from_terms(R, R->order, std::move(ts));
      REQUIRE(parse(print(f), R) == f);
    }
  }

  SECTION("whitespace is insignificant") {
    REQUIRE(parse(" x0 *x3-  x1* x2 ", R) == parse("x0*x3-x1*x2", R));
  }
}
