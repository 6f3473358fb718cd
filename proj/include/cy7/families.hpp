// Seeded constructors for the eleven families of arithmetically Gorenstein
// Calabi-Yau threefolds in P^7, with their expected-invariant records.
// Every build is a pure function of (id, seed, characteristic); degenerate
// draws are detected by dimension/degree and retried a bounded number of
// times with fresh randomness.
#pragma once

#include "cy7/linkage.hpp"
#include "cy7/parser.hpp"
#include "cy7/polymatrix.hpp"
#include "cy7/resolution.hpp"

namespace cy7 {

enum class Construction {
  segre_divisor,
  grassmannian_section,
  complete_intersection,
  bilinkage,
  determinantal,
  rolling_factors,
  pfaffian_bilinkage,
};

inline const char* construction_name(Construction c) {
  switch (c) {
    case Construction::segre_divisor: return "segre-divisor";
    case Construction::grassmannian_section: return "grassmannian-section";
    case Construction::complete_intersection: return "CI";
    case Construction::bilinkage: return "bilinkage";
    case Construction::determinantal: return "determinantal";
    case Construction::rolling_factors: return "rolling-factors";
    case Construction::pfaffian_bilinkage: return "pfaffian-bilinkage";
  }
  return "?";
}

struct FamilySpec {
  int id = 0;
  int64_t expected_degree = 0;
  int expected_h11 = 0;
  int expected_h12 = 0;
  std::map<int, int> generator_profile; // degree -> count of minimal gens
  Construction kind = Construction::complete_intersection;
  std::string description;
  std::optional<BettiTable> expected_betti;
};

namespace detail {

inline BettiTable make_table(
    std::initializer_list<std::tuple<int, int, int64_t>> es) {
  BettiTable t;
  for (auto [i, j, b] : es) t.add(i, j, b);
  t.minimal = true;
  return t;
}

} // namespace detail

inline const std::vector<FamilySpec>& family_table() {
  static const std::vector<FamilySpec> table = [] {
    using detail::make_table;
    std::vector<FamilySpec> t(12);
    auto& f1 = t[1];
    f1 = {1, 14, 2, 86, {{2, 6}, {4, 3}}, Construction::segre_divisor,
          "(2,4) divisor in P1 x P3"};
    f1.expected_betti = make_table({{0, 0, 1},
                                    {1, 2, 6}, {1, 4, 3},
                                    {2, 3, 8}, {2, 5, 8},
                                    {3, 4, 3}, {3, 6, 6},
                                    {4, 8, 1}});
    t[2] = {2, 15, 1, 76, {{2, 5}, {3, 1}}, Construction::grassmannian_section,
            "G(2,5) cap X_3 cap P^7"};
    t[3] = {3, 16, 1, 65, {{2, 4}}, Construction::complete_intersection,
            "X_{2,2,2,2}"};
    auto& f4 = t[4];
    f4 = {4, 17, 1, 55, {{2, 3}, {3, 4}}, Construction::bilinkage,
          "bilinked on Y_{2,2,2} to P^3"};
    f4.expected_betti = make_table({{0, 0, 1},
                                    {1, 2, 3}, {1, 3, 4},
                                    {2, 4, 12},
                                    {3, 5, 4}, {3, 6, 3},
                                    {4, 8, 1}});
    t[5] = {5, 17, 2, 58, {{2, 3}, {3, 6}}, Construction::determinantal,
            "2x2 minors of 3x3 matrix, one quadric row"};
    t[6] = {6, 17, 2, 54, {{2, 3}, {3, 6}}, Construction::rolling_factors,
            "rolling factors, codim 2 in cubic scroll"};
    auto& f7 = t[7];
    f7 = {7, 18, 1, 46, {{2, 2}, {3, 8}}, Construction::bilinkage,
          "bilinked on Y_{2,2,3} to F_1"};
    f7.expected_betti = make_table({{0, 0, 1},
                                    {1, 2, 2}, {1, 3, 8},
                                    {2, 4, 18},
                                    {3, 5, 8}, {3, 6, 2},
                                    {4, 8, 1}});
    auto& f8 = t[8];
    f8 = {8, 18, 1, 45, {{2, 2}, {3, 8}}, Construction::bilinkage,
          "bilinked on Y_{2,2,3} to F_2"};
    f8.expected_betti = f7.expected_betti;
    auto& f9 = t[9];
    f9 = {9, 19, 2, 37, {{2, 1}, {3, 12}}, Construction::pfaffian_bilinkage,
          "bilinked on special Pf_13 to F_1"};
    f9.expected_betti = make_table({{0, 0, 1},
                                    {1, 2, 1}, {1, 3, 12},
                                    {2, 4, 24},
                                    {3, 5, 12}, {3, 6, 1},
                                    {4, 8, 1}});
    auto& f10 = t[10];
    f10 = {10, 19, 2, 36, {{2, 1}, {3, 12}}, Construction::pfaffian_bilinkage,
           "bilinked on special Pf_13 to F_2"};
    f10.expected_betti = f9.expected_betti;
    t[11] = {11, 20, 2, 34, {{3, 16}}, Construction::determinantal,
             "3x3 minors of 4x4 matrix of linear forms"};
    return t;
  }();
  return table;
}

inline const FamilySpec& expected_family(int id) {
  if (id < 1 || id > 11) throw std::invalid_argument("family id must be 1..11");
  return family_table()[id];
}

struct FamilyInstance {
  int id = 0;
  uint64_t seed = 0;
  uint32_t characteristic = 32003;
  Ideal ideal;
  std::vector<std::pair<std::string, std::string>> transcript;
  int attempts = 1;
};

// ------------------------------------------------------------------ //
// shared construction helpers

namespace detail {

inline std::string print_list(const std::vector<Polynomial>& fs) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "; ";
    s += print(fs[i]);
  }
  return s;
}

} // namespace detail

// The del Pezzo threefold of degree 6 inside P^7 cut out by the 2x2 minors
// of a 3x3 matrix of coordinates, restricted to a general hyperplane: the
// last matrix entry is replaced by a random linear form in the other eight.
// Returns the ideal and records the form used.
inline Ideal del_pezzo_f1(const RingPtr& R8, Rng& rng, Polynomial* used_form = nullptr) {
  RingPtr Z = Ring::matrix3x3(R8->p());
  Polynomial ell = detail::random_form(R8, 1, rng);
  std::vector<Polynomial> images;
  for (int i = 0; i < 8; ++i) images.push_back(Polynomial::variable(R8, i));
  images.push_back(ell);
  auto v = [&](int i, int j) { return Polynomial::variable(Z, 3 * i + j); };
  std::vector<Polynomial> gens;
  for (int i1 = 0; i1 < 3; ++i1)
    for (int i2 = i1 + 1; i2 < 3; ++i2)
      for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = j1 + 1; j2 < 3; ++j2)
          gens.push_back((v(i1, j1) * v(i2, j2) - v(i1, j2) * v(i2, j1))
                             .substitute(R8, images));
  if (used_form) *used_form = ell;
  return Ideal(R8, std::move(gens));
}

// P^1 x P^1 x P^1 in P^7: coordinates x_{4a+2b+c}; ideal spanned by the
// nine independent flattening minors of the 2x2x2 coordinate tensor.
inline Ideal del_pezzo_f2(const RingPtr& R8) {
  auto x = [&](int a, int b, int c) {
    return Polynomial::variable(R8, 4 * a + 2 * b + c);
  };
  std::vector<Polynomial> minors;
  auto add_minors = [&](auto entry) {
    for (int j1 = 0; j1 < 4; ++j1)
      for (int j2 = j1 + 1; j2 < 4; ++j2)
        minors.push_back(entry(0, j1) * entry(1, j2) -
                         entry(0, j2) * entry(1, j1));
  };
  add_minors([&](int i, int j) { return x(i, j >> 1, j & 1); });
  add_minors([&](int i, int j) { return x(j >> 1, i, j & 1); });
  add_minors([&](int i, int j) { return x(j >> 1, j & 1, i); });
  Ideal big(R8, std::move(minors));
  return Ideal(R8, big.minimal_generators());
}

// Pfaffian fourfold of degree 13 containing the del Pezzo threefold F:
// 4x4 Pfaffians of a 5x5 skew matrix whose first row holds four random
// quadrics of I_F and whose linear 4x4 block has its Pfaffian inside I_F.
// `block` gives the strict upper triangle of that linear block (4x4, rows
// and columns 0..3 within the block).
inline Ideal pfaffian_13_ambient(const Ideal& F, const PolyMatrix& block,
                                 Rng& rng) {
  const RingPtr& R = F.ring();
  PolyMatrix upper(5, std::vector<Polynomial>(5, Polynomial::zero(R)));
  for (int j = 1; j < 5; ++j) upper[0][j] = F.random_member(2, rng);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) upper[i + 1][j + 1] = block[i][j];
  return Ideal(R, submaximal_pfaffians(upper));
}

// ------------------------------------------------------------------ //
// per-family builders (single attempt; build_family adds retries)

namespace detail {

inline void record(FamilyInstance& inst, std::string key, std::string value) {
  inst.transcript.emplace_back(std::move(key), std::move(value));
}

inline void build_family1(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  // coordinates x_{4a+b} = s_a t_b on P^1 x P^3
  std::vector<Polynomial> gens;
  for (int b1 = 0; b1 < 4; ++b1)
    for (int b2 = b1 + 1; b2 < 4; ++b2)
      gens.push_back(Polynomial::variable(R8, b1) * Polynomial::variable(R8, 4 + b2) -
                     Polynomial::variable(R8, b2) * Polynomial::variable(R8, 4 + b1));

  RingPtr S = Ring::make(R8->p(), {"s0", "s1", "t0", "t1", "t2", "t3"});
  // random form of bidegree (2,4)
  std::vector<Term> fts;
  for (int k = 0; k <= 2; ++k) {
    Monomial sm = Monomial::var(0, 2 - k) * Monomial::var(1, k);
    for (const auto& tm4 : monomials_of_degree(4, 4)) {
      Monomial m = sm;
      for (int i = 0; i < 4; ++i) {
        m.e[2 + i] = tm4.e[i];
        m.deg = static_cast<uint16_t>(m.deg + tm4.e[i]);
      }
      fts.push_back({m, R8->field.random(rng)});
    }
  }
  Polynomial F = Polynomial::from_terms(S, S->order, std::move(fts));
  record(inst, "bidegree-(2,4) form", print(F));

  // rewrite F * s0^2, F * s0 s1, F * s1^2 as quartics via left-to-right
  // pairing of s and t factors
  auto rewrite_balanced = [&](const Polynomial& G) {
    std::vector<Term> out;
    for (const auto& t : G.terms()) {
      std::vector<int> slist, tlist;
      for (int k = 0; k < t.m[0]; ++k) slist.push_back(0);
      for (int k = 0; k < t.m[1]; ++k) slist.push_back(1);
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < t.m[2 + i]; ++k) tlist.push_back(i);
      if (slist.size() != tlist.size())
        throw std::logic_error("family 1: unbalanced bidegree");
      Monomial m;
      for (size_t k = 0; k < slist.size(); ++k)
        m = m * Monomial::var(4 * slist[k] + tlist[k]);
      out.push_back({m, t.c});
    }
    return Polynomial::from_terms(R8, R8->order, std::move(out));
  };
  for (int k = 0; k <= 2; ++k) {
    Polynomial s2 = Polynomial::variable(S, 0, 2 - k) *
                    Polynomial::variable(S, 1, k);
    gens.push_back(rewrite_balanced(F * s2));
  }
  inst.ideal = Ideal(R8, std::move(gens));
}

inline void build_family2(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  std::vector<std::string> names;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      names.push_back("p" + std::to_string(i) + std::to_string(j));
  RingPtr P = Ring::make(R8->p(), names);
  PolyMatrix upper(5, std::vector<Polynomial>(5, Polynomial::zero(P)));
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) upper[i][j] = Polynomial::variable(P, v++);
  auto pfs = submaximal_pfaffians(upper);

  // generic linear section: the last two Pluecker coordinates become random
  // linear forms in the eight that remain
  std::vector<Polynomial> images;
  for (int i = 0; i < 8; ++i) images.push_back(Polynomial::variable(R8, i));
  Polynomial l1 = random_form(R8, 1, rng), l2 = random_form(R8, 1, rng);
  images.push_back(l1);
  images.push_back(l2);
  record(inst, "section forms", print(l1) + "; " + print(l2));

  std::vector<Polynomial> gens;
  for (const auto& f : pfs) gens.push_back(f.substitute(R8, images));
  Polynomial cubic = random_form(R8, 3, rng);
  record(inst, "cubic", print(cubic));
  gens.push_back(cubic);
  inst.ideal = Ideal(R8, std::move(gens));
}

inline void build_family3(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  std::vector<Polynomial> gens;
  for (int k = 0; k < 4; ++k) gens.push_back(random_form(R8, 2, rng));
  record(inst, "quadrics", print_list(gens));
  inst.ideal = Ideal(R8, std::move(gens));
}

inline Ideal linear_p3_ideal(const RingPtr& R8) {
  std::vector<Polynomial> gens;
  for (int i = 4; i < 8; ++i) gens.push_back(Polynomial::variable(R8, i));
  return Ideal(R8, std::move(gens));
}

inline void build_family4(FamilyInstance& inst, const RingPtr& R8, Rng& rng,
                          const Budget& budget) {
  Ideal Pi = linear_p3_ideal(R8);
  Ideal base(R8, {Pi.random_member(2, rng), Pi.random_member(2, rng),
                  Pi.random_member(2, rng)});
  record(inst, "base CI(2,2,2)", print_list(base.gens()));
  BilinkResult bl = bilink(Pi, base, 1, 3, rng, budget);
  record(inst, "first section", print(bl.h1));
  record(inst, "second section", print(bl.h2));
  inst.ideal = Ideal(R8, Ideal(R8, bl.result.gens()).minimal_generators());
}

// direct determinantal model of family 4: v^T M plus the 3x3 minors of M
inline Ideal family4_determinantal(const RingPtr& R8, Rng& rng) {
  PolyMatrix M(4, std::vector<Polynomial>(3, Polynomial::zero(R8)));
  std::vector<Polynomial> v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) M[i][j] = random_form(R8, 1, rng);
  for (int i = 0; i < 4; ++i) v.push_back(random_form(R8, 1, rng));
  std::vector<Polynomial> gens;
  for (int j = 0; j < 3; ++j) {
    Polynomial q = Polynomial::zero(R8);
    for (int i = 0; i < 4; ++i) q = q + v[i] * M[i][j];
    gens.push_back(q);
  }
  for (auto& m : all_minors(M, 3)) gens.push_back(std::move(m));
  return Ideal(R8, std::move(gens));
}

inline void build_family5(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  PolyMatrix m(3, std::vector<Polynomial>(3, Polynomial::zero(R8)));
  for (int j = 0; j < 3; ++j) {
    m[0][j] = random_form(R8, 2, rng);
    m[1][j] = Polynomial::variable(R8, j);
    m[2][j] = Polynomial::variable(R8, 3 + j);
  }
  record(inst, "quadric row", print_list({m[0][0], m[0][1], m[0][2]}));
  inst.ideal = Ideal(R8, all_minors(m, 2));
}

inline void build_family6(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  Polynomial p1 = random_form(R8, 2, rng), p2 = random_form(R8, 2, rng);
  record(inst, "scroll quadrics", print(p1) + "; " + print(p2));
  PolyMatrix m(2, std::vector<Polynomial>(4, Polynomial::zero(R8)));
  for (int j = 0; j < 3; ++j) {
    m[0][j] = Polynomial::variable(R8, j);
    m[1][j] = Polynomial::variable(R8, 3 + j);
  }
  m[0][3] = p1;
  m[1][3] = p2;
  std::vector<Polynomial> gens = all_minors(m, 2);

  // rolling-factor cubics: a random form of scroll class (-2h + 3eta),
  // multiplied by t1^2, t1 t2, t2^2 and rewritten through the pairing
  // t_m b_i -> x_{3(m-1)+i}, a_k -> x_{5+k}, t_m c -> p_m
  RingPtr S = Ring::make(R8->p(),
                         {"t1", "t2", "a1", "a2", "b1", "b2", "b3", "c"});
  std::vector<Term> gts;
  auto push_mono = [&](std::initializer_list<std::pair<int, int>> exps) {
    Monomial m0;
    int deg = 0;
    for (auto [var, e] : exps) {
      m0.e[var] = static_cast<uint8_t>(m0.e[var] + e);
      deg += e;
    }
    m0.deg = static_cast<uint16_t>(m0.deg + deg);
    gts.push_back({m0, R8->field.random(rng)});
  };
  for (int i = 0; i < 3; ++i) push_mono({{4 + i, 1}, {7, 1}}); // b_i c
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        push_mono({{2 + k, 1}, {4 + i, 1}, {4 + j, 1}}); // a_k b_i b_j
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        for (int k = j; k < 3; ++k)
          push_mono({{t, 1}, {4 + i, 1}, {4 + j, 1}, {4 + k, 1}}); // t b b b
  Polynomial g = Polynomial::from_terms(S, S->order, std::move(gts));
  record(inst, "rolling form", print(g));

  std::vector<Polynomial> ps = {p1, p2};
  auto rewrite = [&](const Polynomial& G) {
    Polynomial acc = Polynomial::zero(R8);
    for (const auto& t : G.terms()) {
      std::vector<int> tlist, bclist;
      for (int k = 0; k < t.m[0]; ++k) tlist.push_back(0);
      for (int k = 0; k < t.m[1]; ++k) tlist.push_back(1);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < t.m[4 + i]; ++k) bclist.push_back(i);
      for (int k = 0; k < t.m[7]; ++k) bclist.push_back(3); // c last
      if (tlist.size() != bclist.size())
        throw std::logic_error("family 6: unbalanced scroll weights");
      Monomial xm;
      int cpair = -1;
      for (size_t k = 0; k < tlist.size(); ++k) {
        if (bclist[k] == 3)
          cpair = tlist[k];
        else
          xm = xm * Monomial::var(3 * tlist[k] + bclist[k]);
      }
      for (int k = 0; k < 2; ++k) // a_k -> x_{6+k}
        if (t.m[2 + k])
          xm = xm * Monomial::var(6 + k, t.m[2 + k]);
      Polynomial term = Polynomial::monomial(R8, xm, t.c);
      if (cpair >= 0) term = term * ps[cpair];
      acc = acc + term;
    }
    return acc;
  };
  for (int k = 0; k <= 2; ++k) {
    Polynomial t2 = Polynomial::variable(S, 0, 2 - k) *
                    Polynomial::variable(S, 1, k);
    gens.push_back(rewrite(g * t2));
  }
  inst.ideal = Ideal(R8, std::move(gens));
}

inline void build_family78(FamilyInstance& inst, const RingPtr& R8, Rng& rng,
                           const Budget& budget, int which) {
  Ideal F = which == 1 ? del_pezzo_f1(R8, rng) : del_pezzo_f2(R8);
  Ideal base(R8, {F.random_member(2, rng), F.random_member(2, rng),
                  F.random_member(3, rng)});
  record(inst, "base CI(2,2,3)", print_list(base.gens()));
  BilinkResult bl = bilink(F, base, 2, 3, rng, budget);
  record(inst, "first section", print(bl.h1));
  record(inst, "second section", print(bl.h2));
  inst.ideal = Ideal(R8, Ideal(R8, bl.result.gens()).minimal_generators());
}

inline void build_family910(FamilyInstance& inst, const RingPtr& R8, Rng& rng,
                            const Budget& budget, int which) {
  Ideal F;
  PolyMatrix block(4, std::vector<Polynomial>(4, Polynomial::zero(R8)));
  if (which == 1) {
    // restrict the 3x3-coordinate skew block to the same hyperplane that
    // cuts out F_1: entries z31, z21, z22 - z33; z11, z12; z13
    Polynomial ell;
    F = del_pezzo_f1(R8, rng, &ell);
    RingPtr Z = Ring::matrix3x3(R8->p());
    std::vector<Polynomial> images;
    for (int i = 0; i < 8; ++i) images.push_back(Polynomial::variable(R8, i));
    images.push_back(ell);
    auto z = [&](int i, int j) {
      return Polynomial::variable(Z, 3 * (i - 1) + (j - 1)).substitute(R8, images);
    };
    block[0][1] = z(3, 1);
    block[0][2] = z(2, 1);
    block[0][3] = z(2, 2) - z(3, 3);
    block[1][2] = z(1, 1);
    block[1][3] = z(1, 2);
    block[2][3] = z(1, 3);
  } else {
    // linear block with one zero entry whose Pfaffian is the long-diagonal
    // flattening quadric x0 x7 - x1 x6
    F = del_pezzo_f2(R8);
    block[0][1] = Polynomial::zero(R8);
    block[0][2] = Polynomial::variable(R8, 1); // pairs with x6
    block[0][3] = Polynomial::variable(R8, 0); // pairs with x7
    block[1][2] = Polynomial::variable(R8, 7);
    block[1][3] = Polynomial::variable(R8, 6);
    block[2][3] = random_form(R8, 1, rng);
    record(inst, "free block entry", print(block[2][3]));
  }
  Ideal V = pfaffian_13_ambient(F, block, rng);
  if (V.dimension(budget) != 4 || V.degree(budget) != 13)
    throw ImproperLink("pfaffian ambient is degenerate for this draw");
  record(inst, "pfaffian ambient", print_list(V.gens()));
  BilinkResult bl = bilink(F, V, 2, 3, rng, budget);
  record(inst, "first section", print(bl.h1));
  record(inst, "second section", print(bl.h2));
  inst.ideal = Ideal(R8, Ideal(R8, bl.result.gens()).minimal_generators());
}

inline void build_family11(FamilyInstance& inst, const RingPtr& R8, Rng& rng) {
  PolyMatrix M(4, std::vector<Polynomial>(4, Polynomial::zero(R8)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M[i][j] = random_form(R8, 1, rng);
  record(inst, "matrix first row", print_list(M[0]));
  inst.ideal = Ideal(R8, all_minors(M, 3));
}

} // namespace detail

inline FamilyInstance build_family(int id, uint64_t seed, uint32_t p,
                                   const Budget& budget = Budget::unlimited(),
                                   int retry_cap = 8) {
  const FamilySpec& spec = expected_family(id);
  if (p <= 3) throw std::invalid_argument("characteristic must exceed 3");
  RingPtr R8 = Ring::projective(p, 8);
  std::string last_failure;
  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    FamilyInstance inst;
    inst.id = id;
    inst.seed = seed;
    inst.characteristic = p;
    inst.attempts = attempt;
    // fresh deterministic stream per attempt
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
    try {
      switch (id) {
        case 1: detail::build_family1(inst, R8, rng); break;
        case 2: detail::build_family2(inst, R8, rng); break;
        case 3: detail::build_family3(inst, R8, rng); break;
        case 4: detail::build_family4(inst, R8, rng, budget); break;
        case 5: detail::build_family5(inst, R8, rng); break;
        case 6: detail::build_family6(inst, R8, rng); break;
        case 7: detail::build_family78(inst, R8, rng, budget, 1); break;
        case 8: detail::build_family78(inst, R8, rng, budget, 2); break;
        case 9: detail::build_family910(inst, R8, rng, budget, 1); break;
        case 10: detail::build_family910(inst, R8, rng, budget, 2); break;
        case 11: detail::build_family11(inst, R8, rng); break;
        default: throw std::invalid_argument("family id must be 1..11");
      }
      // degenerate-draw detection
      if (inst.ideal.dimension(budget) != 3 ||
          inst.ideal.degree(budget) != spec.expected_degree) {
        last_failure = "dimension " + std::to_string(inst.ideal.dimension()) +
                       ", degree " + std::to_string(inst.ideal.degree());
        continue;
      }
      return inst;
    } catch (const ImproperLink& e) {
      last_failure = e.what();
      continue;
    } catch (const std::domain_error& e) {
      last_failure = e.what();
      continue;
    }
  }
  throw std::runtime_error("family " + std::to_string(id) + " seed " +
                           std::to_string(seed) +
                           ": degenerate draws exhausted retries (" +
                           last_failure + ")");
}

} // namespace cy7
