// The degree-19 symbolic machinery around the 3x3 matrix of coordinates:
// cofactor quadrics, the adjugate identity behind the quadro-quadric
// Cremona transformation, the minor-Pfaffian comparison, and the nodal
// count of the degree-13 Pfaffian threefold section.
#pragma once

#include "cy7/smoothness.hpp"

namespace cy7 {

struct SegreData {
  RingPtr zring;                 // z11..z33
  PolyMatrix phi;                // the matrix of coordinates
  PolyMatrix minor_quadrics;     // unsigned minors: entry (i,j) deletes row i col j
  Polynomial det_phi;
  Polynomial pf1;                // (z31 z13 - z11 z33) + (z11 z22 - z12 z21)
  Ideal segre_ideal;             // the nine 2x2 minors
};

inline SegreData make_segre_data(uint32_t p) {
  SegreData d;
  d.zring = Ring::matrix3x3(p);
  auto z = [&](int i, int j) { return Polynomial::variable(d.zring, 3 * i + j); };
  d.phi.assign(3, std::vector<Polynomial>(3, Polynomial::zero(d.zring)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d.phi[i][j] = z(i, j);
  d.det_phi = determinant(d.phi);
  d.minor_quadrics.assign(3, std::vector<Polynomial>(3, Polynomial::zero(d.zring)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < 3; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < 3; ++c)
        if (c != j) cols.push_back(c);
      d.minor_quadrics[i][j] = determinant(submatrix(d.phi, rows, cols));
    }
  std::vector<Polynomial> minors;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) minors.push_back(d.minor_quadrics[i][j]);
  d.segre_ideal = Ideal(d.zring, std::move(minors));
  d.pf1 = z(2, 0) * z(0, 2) - z(0, 0) * z(2, 2) + z(0, 0) * z(1, 1) -
          z(0, 1) * z(1, 0);
  return d;
}

// adj(adj(Phi)) = det(Phi) * Phi as a matrix of polynomials
inline bool verify_adjugate_identity(uint32_t p) {
  SegreData d = make_segre_data(p);
  PolyMatrix a2 = adjugate(adjugate(d.phi));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a2[i][j] != d.det_phi * d.phi[i][j]) return false;
  return true;
}

struct PfaffianData {
  SegreData segre;
  std::array<std::array<fp_t, 9>, 4> coeffs; // A,B,C,D in the minor basis
  PolyMatrix m_upper;                        // 5x5 skew upper triangle
  std::vector<Polynomial> pfaffians;         // five 4x4 Pfaffians
  Ideal theta;                               // codim-3 fivefold in P^8
  std::array<Polynomial, 4> quadric_row;     // A, B, C, D
};

// Random A..D in the span of the nine minor quadrics; the linear block is
// fixed so that its Pfaffian is pf1.
inline PfaffianData make_pfaffian_data(uint32_t p, Rng& rng) {
  PfaffianData d{make_segre_data(p), {}, {}, {}, Ideal(), {}};
  const RingPtr& Z = d.segre.zring;
  auto z = [&](int i, int j) { return Polynomial::variable(Z, 3 * i + j); };
  for (int k = 0; k < 4; ++k) {
    Polynomial acc = Polynomial::zero(Z);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        fp_t c = Z->field.random(rng);
        d.coeffs[k][3 * i + j] = c;
        if (c) acc = acc + d.segre.minor_quadrics[i][j] * c;
      }
    d.quadric_row[k] = acc;
  }
  d.m_upper.assign(5, std::vector<Polynomial>(5, Polynomial::zero(Z)));
  for (int k = 0; k < 4; ++k) d.m_upper[0][k + 1] = d.quadric_row[k];
  d.m_upper[1][2] = z(2, 0);              // z31
  d.m_upper[1][3] = z(1, 0);              // z21
  d.m_upper[1][4] = z(1, 1) - z(2, 2);    // z22 - z33
  d.m_upper[2][3] = z(0, 0);              // z11
  d.m_upper[2][4] = z(0, 1);              // z12
  d.m_upper[3][4] = z(0, 2);              // z13
  d.pfaffians = submaximal_pfaffians(d.m_upper);
  d.theta = Ideal(Z, d.pfaffians);
  return d;
}

struct MinorPfaffianMatch {
  int column_triple[3];
  int pfaffian_index; // 0..4
  int sign;           // +1 or -1
};

struct MinorPfaffianResult {
  bool all_matched = false;
  std::vector<MinorPfaffianMatch> matches;
  int unmatched_minor = -1;
};

// The 3x3 minors of N (rows: two rows of minor quadrics, then A,B,C,D)
// agree with det(Phi) times a signed Pfaffian of M, modulo the quadric pf1.
// A brute-force search over the five Pfaffians and both signs finds the
// matching; divisibility by pf1 is exact polynomial division.
inline MinorPfaffianResult verify_minor_pfaffian_identity(const PfaffianData& d) {
  const RingPtr& Z = d.segre.zring;
  const auto& y = d.segre.minor_quadrics; // y[i][j], indices 0-based
  PolyMatrix N(3, std::vector<Polynomial>(4, Polynomial::zero(Z)));
  // rows in coordinates y12 y22 y32 y31 / y13 y23 y33 y21 / A B C D
  N[0][0] = y[0][1]; N[0][1] = y[1][1]; N[0][2] = y[2][1]; N[0][3] = y[2][0];
  N[1][0] = y[0][2]; N[1][1] = y[1][2]; N[1][2] = y[2][2]; N[1][3] = y[1][0];
  for (int k = 0; k < 4; ++k) {
    // A..D as linear forms in the y's, evaluated at y = minors: the same
    // coefficient vectors applied to the minor quadrics
    N[2][k] = d.quadric_row[k];
  }
  MinorPfaffianResult out;
  auto col_sets = subsets_of_size(4, 3);
  for (size_t t = 0; t < col_sets.size(); ++t) {
    Polynomial mu = determinant(submatrix(N, {0, 1, 2}, col_sets[t]));
    bool matched = false;
    for (int k = 0; k < 5 && !matched; ++k) {
      Polynomial pd = d.pfaffians[k] * d.segre.det_phi;
      for (int sgn = 0; sgn < 2 && !matched; ++sgn) {
        Polynomial diff = sgn ? mu + pd : mu - pd;
        if (diff.is_zero() || divides_exactly(d.segre.pf1, diff)) {
          MinorPfaffianMatch m;
          for (int q = 0; q < 3; ++q) m.column_triple[q] = col_sets[t][q];
          m.pfaffian_index = k;
          m.sign = sgn ? -1 : 1;
          out.matches.push_back(m);
          matched = true;
        }
      }
    }
    if (!matched) {
      out.unmatched_minor = static_cast<int>(t);
      return out;
    }
  }
  out.all_matched = true;
  return out;
}

struct NodalCountResult {
  int dim = -2;
  int64_t degree = 0;
  bool contained_in_s6 = false;
  SingularLocusReport report;
  int64_t y13_degree = 0;
  int y13_dim = 0;
};

// Generic codimension-2 linear section of the Pfaffian fivefold: the last
// two matrix coordinates become random linear forms in the remaining seven.
// Returns the section ideals of the threefold and of the sextic del Pezzo
// surface it contains.
inline std::pair<Ideal, Ideal> y13_section(const PfaffianData& d, Rng& rng,
                                           bool degenerate_control = false) {
  const RingPtr& Z = d.segre.zring;
  RingPtr R7 = Ring::make(Z->p(), {"z11", "z12", "z13", "z21", "z22", "z23",
                                   "z31"});
  std::vector<Polynomial> images;
  for (int i = 0; i < 7; ++i) images.push_back(Polynomial::variable(R7, i));
  if (degenerate_control) {
    // a section through a coordinate plane of the matrix space
    images.push_back(Polynomial::zero(R7));
    images.push_back(Polynomial::zero(R7));
  } else {
    images.push_back(detail::random_form(R7, 1, rng));
    images.push_back(detail::random_form(R7, 1, rng));
  }
  std::vector<Polynomial> ygens;
  for (const auto& f : d.pfaffians) ygens.push_back(f.substitute(R7, images));
  std::vector<Polynomial> sgens;
  for (const auto& g : d.segre.segre_ideal.gens())
    sgens.push_back(g.substitute(R7, images));
  return {Ideal(R7, std::move(ygens)), Ideal(R7, std::move(sgens))};
}

inline NodalCountResult nodal_count_y13(uint64_t seed, uint32_t p,
                                        const Budget& budget,
                                        bool degenerate_control = false) {
  Rng rng(seed);
  PfaffianData d = make_pfaffian_data(p, rng);
  auto [y13, s6] = y13_section(d, rng, degenerate_control);
  NodalCountResult out;
  out.y13_dim = y13.dimension(budget);
  out.y13_degree = y13.degree(budget);
  out.report = singular_locus(y13, 3, MinorStrategy::random_minor_batch,
                              rng.next(), budget, 0);
  out.dim = out.report.projective_dimension;
  out.degree = out.report.degree;
  if (out.dim == 0 && !out.report.exhausted_budget) {
    // every node on the surface: adding the surface equations keeps degree
    Ideal with_s6 = sum(out.report.singular_ideal, s6);
    Rng satrng = rng.fork();
    Ideal sat = saturate_irrelevant(with_s6, satrng, budget);
    const auto& h = sat.hilbert(budget);
    out.contained_in_s6 =
        (h.projective_dimension == 0 && h.degree == out.degree);
  }
  return out;
}

// Singular locus of the fivefold itself (expected: a surface of degree 28).
// Optional stretch computation; respect the budget and let the caller treat
// an exhausted budget as "unverified".
inline SingularLocusReport theta_singular_surface(uint64_t seed, uint32_t p,
                                                  const Budget& budget) {
  Rng rng(seed);
  PfaffianData d = make_pfaffian_data(p, rng);
  return singular_locus(d.theta, 3, MinorStrategy::random_minor_batch,
                        rng.next(), budget, 2);
}

} // namespace cy7
