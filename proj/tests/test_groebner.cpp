// Buchberger: known bases, the independent S-pair oracle, confluence,
// uniqueness, truncation, membership.
#include <catch2/catch_amalgamated.hpp>

#include "cy7/groebner.hpp"
#include "cy7/parser.hpp"
#include "cy7/rng.hpp"

using namespace cy7;

namespace {

// Textbook division oracle, independent of the library reduction path:
// repeatedly cancel the lead term by the first available divisor, moving
// irreducible leads to the remainder.
Polynomial oracle_reduce(Polynomial f, const std::vector<Polynomial>& gens) {
  const auto& F = f.ring()->field;
  MonomialOrder ord = f.order();
  Polynomial rem = Polynomial::zero(f.ring(), ord);
  while (!f.is_zero()) {
    bool hit = false;
    for (const auto& g : gens) {
      if (g.lead_monomial().divides(f.lead_monomial())) {
        fp_t c = F.neg(F.div(f.lead_coeff(), g.lead_coeff()));
        f = f.axpy(c, f.lead_monomial() / g.lead_monomial(), g);
        hit = true;
        break;
      }
    }
    if (!hit) {
      Polynomial lt = Polynomial::monomial(f.ring(), f.lead_monomial(), f.lead_coeff());
      rem = rem + lt.with_order(ord);
      f = f - lt.with_order(ord);
    }
  }
  return rem;
}

// Oracle: all S-polynomials reduce to zero, i.e. the set is a Groebner basis.
bool oracle_is_groebner(const std::vector<Polynomial>& gens) {
  const auto& F = gens.front().ring()->field;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Monomial l = lcm(gens[i].lead_monomial(), gens[j].lead_monomial());
      Polynomial s =
          gens[i]
              .scaled_shift(F.inv(gens[i].lead_coeff()), l / gens[i].lead_monomial())
              .axpy(F.neg(F.inv(gens[j].lead_coeff())), l / gens[j].lead_monomial(),
                    gens[j]);
      if (!oracle_reduce(s, gens).is_zero()) return false;
    }
  return true;
}

std::vector<Polynomial> segre_2x2_minors(const RingPtr& Z) {
  // 2x2 minors of a 3x3 matrix of variables z11..z33 (row-major variables)
  auto v = [&](int i, int j) { return Polynomial::variable(Z, 3 * i + j); };
  std::vector<Polynomial> minors;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2)
          minors.push_back(v(i1, j1) * v(i2, j2) - v(i1, j2) * v(i2, j1));
  return minors;
}

} // namespace

TEST_CASE("already a basis: {x0, x1}") {
  RingPtr R = Ring::projective(32003, 8);
  auto gb = groebner({parse("x0", R), parse("x1", R)});
  REQUIRE(gb.gens.size() == 2);
  REQUIRE(print(gb.gens[1]) == "x0");
  REQUIRE(print(gb.gens[0]) == "x1");
}

TEST_CASE("determinantal ideal of a 2x4 catalecticant row pair") {
  // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]: the three minors are already a
  // Groebner basis under grevlex (verified against the S-pair oracle)
  RingPtr R = Ring::projective(32003, 8);
  std::vector<Polynomial> minors = {
      parse("x0*x2 - x1^2", R),
      parse("x0*x3 - x1*x2", R),
      parse("x1*x3 - x2^2", R),
  };
  REQUIRE(oracle_is_groebner(minors));
  auto gb = groebner(minors);
  REQUIRE(gb.gens.size() == 3);
  for (const auto& m : minors) REQUIRE(normal_form(m, gb).is_zero());
}

TEST_CASE("the nine 3x3-matrix minors form a grevlex basis") {
  RingPtr Z = Ring::matrix3x3(32003);
  auto minors = segre_2x2_minors(Z);
  REQUIRE(minors.size() == 9);
  REQUIRE(oracle_is_groebner(minors));
  auto gb = groebner(minors);
  REQUIRE(gb.gens.size() == 9);
}

TEST_CASE("normal form properties") {
  RingPtr R = Ring::projective(32003, 8);

  SECTION("every generator reduces to zero") {
    std::vector<Polynomial> gens = {parse("x0^2 + x1*x2", R),
                                    parse("x0*x1 - x3^2", R),
                                    parse("x2^3 - x4^3", R)};
    auto gb = groebner(gens);
    for (const auto& g : gens) REQUIRE(normal_form(g, gb).is_zero());
  }

  SECTION("x0^4 mod (x0^2) and a non-member") {
    auto gb = groebner({parse("x0^2", R)});
    REQUIRE(normal_form(parse("x0^4", R), gb).is_zero());
    REQUIRE(print(normal_form(parse("x1", R), gb)) == "x1");
  }

  SECTION("idempotence") {
    auto gb = groebner({parse("x0^2 - x1*x2", R), parse("x3*x4 - x5^2", R)});
    Polynomial f = parse("x0^3*x4 + x1^2*x2 + x3*x4*x5", R);
    Polynomial n1 = normal_form(f, gb);
    REQUIRE(normal_form(n1, gb) == n1);
  }
}

TEST_CASE("confluence and reduced-basis uniqueness") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(42);
  const auto& F = R->field;

  auto random_quadric = [&]() {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(8, 2))
      if (rng.below(3) == 0) ts.push_back({m, F.random(rng)});
    return Polynomial::from_terms(R, R->order, std::move(ts));
  };

  for (int round = 0; round < 5; ++round) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_quadric());
    auto gb1 = groebner(gens);
    // permuted input: identical reduced basis
    std::vector<Polynomial> perm(gens.rbegin(), gens.rend());
    std::swap(perm[0], perm[2]);
    auto gb2 = groebner(perm);
    REQUIRE(gb1.gens.size() == gb2.gens.size());
    for (size_t i = 0; i < gb1.gens.size(); ++i)
      REQUIRE(gb1.gens[i] == gb2.gens[i]);

    // confluence: normal form does not depend on the reducer arrangement
    Polynomial f = random_quadric() * random_quadric();
    std::vector<Polynomial> shuffled(gb1.gens.rbegin(), gb1.gens.rend());
    REQUIRE(normal_form(f, gb1) == reduce(f.with_order(gb1.order), shuffled));
  }
}

TEST_CASE("membership soundness and completeness") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(77);
  const auto& F = R->field;
  std::vector<Polynomial> gens = {parse("x0*x5 - x1*x4", R),
                                  parse("x2^2 - x3*x6", R),
                                  parse("x1*x7 - x2*x6", R)};
  auto gb = groebner(gens);

  // constructed members reduce to zero
  for (int it = 0; it < 50; ++it) {
    Polynomial h = Polynomial::zero(R);
    for (const auto& g : gens) {
      std::vector<Term> ts;
      for (const auto& m : monomials_of_degree(8, 1))
        if (rng.below(2)) ts.push_back({m, F.random(rng)});
      h = h + Polynomial::from_terms(R, R->order, std::move(ts)) * g;
    }
    REQUIRE(normal_form(h, gb).is_zero());
  }

  // random low-degree forms are not members (the degree-2 piece of the
  // ideal is 2-dimensional out of 36)
  int misses = 0;
  for (int it = 0; it < 50; ++it) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(8, 2))
      ts.push_back({m, F.random(rng)});
    Polynomial f = Polynomial::from_terms(R, R->order, std::move(ts));
    if (!normal_form(f, gb).is_zero()) ++misses;
  }
  REQUIRE(misses == 50);
}

TEST_CASE("degree truncation matches the full basis below the cutoff") {
  RingPtr R = Ring::projective(32003, 8);
  std::vector<Polynomial> gens = {parse("x0*x1 - x2^2", R),
                                  parse("x0*x3^2 - x4^3", R),
                                  parse("x5^2*x6 - x7^3", R)};
  auto full = groebner(gens);
  auto trunc = groebner(gens, R->order, Budget::unlimited(), 4);
  REQUIRE(trunc.truncated);
  for (const auto& g : trunc.gens) {
    REQUIRE(g.degree() <= 4);
    REQUIRE(normal_form(g, full).is_zero());
  }
  for (const auto& g : full.gens)
    if (g.degree() <= 4) REQUIRE(normal_form(g, trunc).is_zero());
}

TEST_CASE("budget exhaustion reports progress") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(5);
  const auto& F = R->field;
  std::vector<Polynomial> gens;
  for (int i = 0; i < 5; ++i) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(8, 3))
      if (rng.below(2)) ts.push_back({m, F.random(rng)});
    gens.push_back(Polynomial::from_terms(R, R->order, std::move(ts)));
  }
  Budget tiny;
  tiny.max_pairs = 3;
  try {
    groebner(gens, R->order, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.pairs_done >= 3);
    REQUIRE(e.queue_size > 0);
  }
}
