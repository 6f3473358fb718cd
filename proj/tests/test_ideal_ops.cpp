// Intersection, colon, elimination, saturation: the spec examples plus
// randomized identities.
#include <catch2/catch_amalgamated.hpp>

#include "cy7/ideal_ops.hpp"
#include "cy7/parser.hpp"

using namespace cy7;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> polys,
               bool homog = true) {
  std::vector<Polynomial> gens;
  for (const char* s : polys) gens.push_back(parse(s, R));
  return Ideal(R, std::move(gens), homog);
}

} // namespace

TEST_CASE("colon basics") {
  RingPtr R = Ring::projective(32003, 8);
  REQUIRE(colon(ideal_of(R, {"x0^2"}), parse("x0", R))
              .equals(ideal_of(R, {"x0"})));
  REQUIRE(colon(ideal_of(R, {"x0*x1"}), parse("x0", R))
              .equals(ideal_of(R, {"x1"})));
}

TEST_CASE("intersection basics") {
  RingPtr R = Ring::projective(32003, 8);

  SECTION("(x0) cap (x1) = (x0*x1)") {
    REQUIRE(intersect(ideal_of(R, {"x0"}), ideal_of(R, {"x1"}))
                .equals(ideal_of(R, {"x0*x1"})));
  }

  SECTION("I cap I = I") {
    Ideal I = ideal_of(R, {"x0*x3 - x1*x2", "x4^2 - x5*x6"});
    REQUIRE(intersect(I, I).equals(I));
  }

  SECTION("(x0,x1) cap (x2,x3) with membership both directions") {
    Ideal I = ideal_of(R, {"x0", "x1"});
    Ideal J = ideal_of(R, {"x2", "x3"});
    Ideal expected = ideal_of(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
    Ideal got = intersect(I, J);
    for (const auto& g : expected.gens()) REQUIRE(got.contains(g));
    for (const auto& g : got.gens()) {
      REQUIRE(I.contains(g));
      REQUIRE(J.contains(g));
    }
    REQUIRE(got.equals(expected));
  }
}

TEST_CASE("elimination") {
  SECTION("resultant-style projection") {
    // eliminate t from (t*x0 - x1, t*x1 - x2): contains x0*x2 - x1^2
    RingPtr R = Ring::make(32003, {"t", "x0", "x1", "x2"});
    Ideal I(R, {parse("t*x0 - x1", R), parse("t*x1 - x2", R)}, false);
    Ideal E = eliminate(I, 1);
    REQUIRE(E.contains(parse("x0*x2 - x1^2", R)));
    for (const auto& g : E.gens()) REQUIRE(g.lead_monomial()[0] == 0);
  }

  SECTION("adding and eliminating a tag variable recovers the ideal") {
    RingPtr R = Ring::make(32003, {"y", "x0", "x1", "x2"});
    Polynomial f = parse("x0*x2 - x1^2", R);
    Ideal I(R, {f, parse("x1*x2 - x0^2", R)});
    Ideal J = sum(I, parse("y", R) - parse("x0", R));
    Ideal E = eliminate(Ideal(R, J.gens(), false), 1);
    REQUIRE(E.equals(I));
  }

  SECTION("triple Segre parametrization image equals the flattening ideal") {
    // x_{abc} = s_a t_b u_c; eliminating the six parameters leaves the
    // nine independent 2x2 flattening minors of the 2x2x2 tensor
    std::vector<std::string> names = {"s0", "s1", "t0", "t1", "u0", "u1"};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          names.push_back("v" + std::to_string(a) + std::to_string(b) +
                          std::to_string(c));
    RingPtr R = Ring::make(32003, names);
    auto x = [&](int a, int b, int c) {
      return Polynomial::variable(R, 6 + 4 * a + 2 * b + c);
    };
    auto par = [&](int a, int b, int c) {
      return Polynomial::variable(R, a) * Polynomial::variable(R, 2 + b) *
             Polynomial::variable(R, 4 + c);
    };
    std::vector<Polynomial> gens;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) gens.push_back(x(a, b, c) - par(a, b, c));
    Ideal graph(R, std::move(gens), false);
    Ideal image = eliminate(graph, 6);

    // flattening minors: three ways to slice the cube into a 2x4 matrix
    std::vector<Polynomial> minors;
    auto add_minors = [&](auto row) {
      for (int j1 = 0; j1 < 4; ++j1)
        for (int j2 = j1 + 1; j2 < 4; ++j2)
          minors.push_back(row(0, j1) * row(1, j2) - row(0, j2) * row(1, j1));
    };
    add_minors([&](int i, int j) { return x(i, j >> 1, j & 1); });
    add_minors([&](int i, int j) { return x(j >> 1, i, j & 1); });
    add_minors([&](int i, int j) { return x(j >> 1, j & 1, i); });
    Ideal flat(R, std::move(minors));

    REQUIRE(image.equals(flat));
    REQUIRE(flat.graded_piece_dim(2) == 9);
  }
}

TEST_CASE("saturation") {
  RingPtr R = Ring::projective(32003, 8);

  SECTION("saturate((x0^2*x1), (x0)) = (x1)") {
    REQUIRE(saturate(ideal_of(R, {"x0^2*x1"}), ideal_of(R, {"x0"}))
                .equals(ideal_of(R, {"x1"})));
  }

  SECTION("saturate by the unit ideal is the identity") {
    Ideal I = ideal_of(R, {"x0*x3 - x1*x2"});
    Ideal one(R, {Polynomial::constant(R, 1)}, false);
    REQUIRE(saturate(I, one).equals(I));
  }

  SECTION("last-variable saturation agrees with iterated colon") {
    Ideal I = ideal_of(R, {"x0*x7^2", "x1*x7 - x2*x7", "x3^2"});
    Ideal quick = saturate_last_variable(I);
    Ideal slow = saturate(I, ideal_of(R, {"x7"}));
    REQUIRE(quick.equals(slow));
  }

  SECTION("irrelevant saturation of an empty scheme is the unit ideal") {
    // the irrelevant-primary ideal (x0..x7)^2 saturates to (1)
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(8, 2))
      gens.push_back(Polynomial::monomial(R, m));
    Rng rng(3);
    Ideal sat = saturate_irrelevant(Ideal(R, std::move(gens)), rng);
    REQUIRE(sat.hilbert().projective_dimension == -1);
  }

  SECTION("irrelevant saturation strips embedded points") {
    // (x0) cap m^2 saturates back to (x0)
    Ideal I = ideal_of(R, {"x0"});
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(8, 2))
      gens.push_back(Polynomial::monomial(R, m));
    Ideal J = intersect(I, Ideal(R, std::move(gens)));
    Rng rng(4);
    REQUIRE(saturate_irrelevant(J, rng).equals(I));
  }
}

TEST_CASE("randomized colon and saturation identities") {
  RingPtr R = Ring::projective(32003, 5);
  Rng rng(20240801);
  const auto& F = R->field;
  auto random_form = [&](int d) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(5, d))
      if (rng.below(3) == 0) ts.push_back({m, F.random(rng)});
    Polynomial f = Polynomial::from_terms(R, R->order, std::move(ts));
    return f.is_zero() ? Polynomial::variable(R, 0) : f;
  };

  int cases = 0;
  for (int round = 0; round < 12; ++round) {
    Ideal I(R, {random_form(2), random_form(1) * random_form(1)});
    Ideal J(R, {random_form(1), random_form(2)});

    Ideal c = colon(I, J);
    // I is contained in I : J
    for (const auto& g : I.gens()) REQUIRE(c.contains(g));
    // (I : J) : J = I : J^2
    Ideal c2 = colon(c, J);
    REQUIRE(c2.equals(colon(I, product(J, J))));
    // members of I : J multiply into I
    for (const auto& g : c.gens())
      for (const auto& h : J.gens()) REQUIRE(I.contains(g * h));
    cases += 3;
  }
  REQUIRE(cases >= 36);
}

TEST_CASE("colon through the first linkage step") {
  // residual of a linear P^3 inside a complete intersection (1,2,2,2)
  // through it: degree additivity forces degree 7, dimension 3
  RingPtr R = Ring::projective(32003, 8);
  Rng rng(1717);
  std::vector<Polynomial> pigens;
  for (int i = 4; i < 8; ++i) pigens.push_back(Polynomial::variable(R, i));
  Ideal Pi(R, std::move(pigens));

  Ideal ci(R, {Pi.random_member(1, rng), Pi.random_member(2, rng),
               Pi.random_member(2, rng), Pi.random_member(2, rng)});
  REQUIRE(ci.dimension() == 3);
  REQUIRE(ci.degree() == 8);

  Ideal G = colon(ci, Pi);
  REQUIRE(G.dimension() == 3);
  REQUIRE(G.degree() == 7);
}
