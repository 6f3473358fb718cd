// Linkage steps with their verification contract, plus Jacobian-based
// singular locus checks.
#include <catch2/catch_amalgamated.hpp>

#include "cy7/linkage.hpp"
#include "cy7/resolution.hpp"
#include "cy7/smoothness.hpp"

using namespace cy7;

namespace {

Ideal linear_p3(const RingPtr& R) {
  std::vector<Polynomial> gens;
  for (int i = 4; i < 8; ++i) gens.push_back(Polynomial::variable(R, i));
  return Ideal(R, std::move(gens));
}

Ideal ci_through(const Ideal& sub, const std::vector<int>& degrees, Rng& rng) {
  std::vector<Polynomial> gens;
  for (int d : degrees) gens.push_back(sub.random_member(d, rng));
  return Ideal(sub.ring(), std::move(gens));
}

} // namespace

TEST_CASE("first linkage step of the degree-17 chain") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(11);
  Ideal Pi = linear_p3(R);
  Ideal ambient = ci_through(Pi, {1, 2, 2, 2}, rng);
  REQUIRE(ambient.degree() == 8);

  LinkStep step = link(ambient, Pi);
  REQUIRE(step.residual_degree == 7);
  REQUIRE(step.residual.dimension() == 3);

  SECTION("linkage is an involution through the fixed ambient") {
    LinkStep back = link(ambient, step.residual);
    REQUIRE(back.residual.equals(Pi));
  }
}

TEST_CASE("improper link is rejected") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(13);
  Ideal Pi = linear_p3(R);
  // ambient not contained in the subvariety ideal
  Ideal bad(R, {Polynomial::variable(R, 0), Pi.random_member(2, rng),
                Pi.random_member(2, rng), Pi.random_member(2, rng)});
  REQUIRE_THROWS_AS(link(bad, Pi), ImproperLink);
}

TEST_CASE("bilinkage of the linear subspace gives the degree-17 threefold") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(17);
  Ideal Pi = linear_p3(R);
  Ideal base = ci_through(Pi, {2, 2, 2}, rng);
  BilinkResult bl = bilink(Pi, base, 1, 3, rng);
  REQUIRE(bl.first.residual_degree == 7);
  REQUIRE(bl.result.degree() == 17);
  REQUIRE(bl.result.dimension() == 3);
  // the second hypersurface does not contain the original subvariety
  REQUIRE_FALSE(Pi.contains(bl.h2));

  BettiTable t = minimal_betti(bl.result);
  auto cert = certify_aG_CY(t);
  REQUIRE(cert.is_aG);
  REQUIRE(cert.socle_twist == 8);
  REQUIRE(cert.is_CY_twist);
}

TEST_CASE("jacobian shape and Euler relation") {
  RingPtr R = Ring::projective(32003, 8);
  SECTION("single square") {
    Ideal I(R, {Polynomial::variable(R, 0) * Polynomial::variable(R, 0)});
    PolyMatrix J = jacobian(I);
    REQUIRE(J.size() == 1);
    REQUIRE(J[0].size() == 8);
    REQUIRE(J[0][0] == Polynomial::variable(R, 0) * R->field.from_int(2));
    for (int v = 1; v < 8; ++v) REQUIRE(J[0][v].is_zero());
  }
  SECTION("Euler relation on random quadrics") {
    Rng rng(99);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) {
      std::vector<Term> ts;
      for (const auto& m : monomials_of_degree(8, 2))
        ts.push_back({m, R->field.random(rng)});
      gens.push_back(Polynomial::from_terms(R, R->order, std::move(ts)));
    }
    Ideal I(R, gens);
    PolyMatrix J = jacobian(I);
    for (size_t r = 0; r < gens.size(); ++r) {
      Polynomial acc = Polynomial::zero(R);
      for (int v = 0; v < 8; ++v)
        acc = acc + J[r][v] * Polynomial::variable(R, v);
      REQUIRE(acc == gens[r] * R->field.from_int(2));
    }
  }
}

TEST_CASE("cone over four quadrics is singular at the vertex") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(123);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 4; ++k) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(7, 2)) // omit x7 entirely
      ts.push_back({m, R->field.random(rng)});
    gens.push_back(Polynomial::from_terms(R, R->order, std::move(ts)));
  }
  Ideal I(R, gens);
  auto rep = singular_locus(I, 4, MinorStrategy::full_minors, 5, Budget::unlimited());
  REQUIRE(rep.projective_dimension >= 0);
  REQUIRE(rep.exact);
}

TEST_CASE("four generic quadrics are smooth; both strategies agree") {
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(1234);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 4; ++k) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(8, 2))
      ts.push_back({m, R->field.random(rng)});
    gens.push_back(Polynomial::from_terms(R, R->order, std::move(ts)));
  }
  Ideal I(R, gens);
  auto full = singular_locus(I, 4, MinorStrategy::full_minors, 5, Budget::unlimited());
  auto batch = singular_locus(I, 4, MinorStrategy::random_minor_batch, 5,
                              Budget::unlimited());
  REQUIRE(full.projective_dimension == -1);
  REQUIRE(batch.projective_dimension == -1);
  REQUIRE(full.exact);
  REQUIRE(batch.exact);
  REQUIRE(full.minors_available == 70);
}

TEST_CASE("dimension is non-increasing in the number of minors") {
  RingPtr R = Ring::projective(32003, 6);
  Rng rng(777);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 3; ++k) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(6, 2))
      ts.push_back({m, R->field.random(rng)});
    gens.push_back(Polynomial::from_terms(R, R->order, std::move(ts)));
  }
  Ideal I(R, gens);
  PolyMatrix J = jacobian(I);
  auto rows = subsets_of_size(3, 3);
  auto cols = subsets_of_size(6, 3);
  std::vector<Polynomial> acc = I.gens();
  int prev = I.dimension();
  for (size_t take = 0; take < cols.size(); take += 3) {
    acc.push_back(determinant(submatrix(J, rows[0], cols[take])));
    int d = Ideal(R, acc).dimension();
    REQUIRE(d <= prev);
    prev = d;
  }
}
