// Hilbert series of homogeneous ideals via the lead-term monomial ideal:
// HS(R/I) = N(t)/(1-t)^n with integer numerator N. Projective dimension and
// degree are read off the numerator, so the two can never disagree.
#pragma once

#include <cstdint>
#include <vector>

#include "cy7/groebner.hpp"

namespace cy7 {

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("hilbert numerator overflow");
  return r;
}
inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("hilbert numerator overflow");
  return r;
}

// drop generators that are multiples of others
inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& g : out)
      if (g.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  gens.swap(out);
}

// N(t) of the monomial ideal, recursively: pivot on a frequent variable.
inline std::vector<int64_t> numerator_rec(std::vector<Monomial> gens) {
  minimalize_monomials(gens);
  if (gens.empty()) return {1};
  if (gens.front().deg == 0) return {0}; // unit ideal
  // coprime generators: N = prod (1 - t^deg)
  bool pairwise_coprime = true;
  for (size_t i = 0; i + 1 < gens.size() && pairwise_coprime; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    std::vector<int64_t> acc{1};
    for (const auto& g : gens) {
      std::vector<int64_t> next(acc.size() + g.deg, 0);
      for (size_t k = 0; k < acc.size(); ++k) {
        next[k] = checked_add(next[k], acc[k]);
        next[k + g.deg] = checked_sub(next[k + g.deg], acc[k]);
      }
      acc.swap(next);
    }
    return acc;
  }
  // pivot: variable occurring in the most generators
  int counts[kMaxVars] = {0};
  for (const auto& g : gens)
    for (int i = 0; i < kMaxVars; ++i)
      if (g.e[i]) ++counts[i];
  int pivot = 0;
  for (int i = 1; i < kMaxVars; ++i)
    if (counts[i] > counts[pivot]) pivot = i;

  // N(I) = N(I + (x)) + t * N(I : x)
  std::vector<Monomial> plus, colon;
  plus.push_back(Monomial::var(pivot));
  for (const auto& g : gens) {
    if (g.e[pivot] == 0) plus.push_back(g);
    Monomial q = g;
    if (q.e[pivot]) {
      q.e[pivot] -= 1;
      q.deg -= 1;
    }
    colon.push_back(q);
  }
  std::vector<int64_t> a = numerator_rec(std::move(plus));
  std::vector<int64_t> b = numerator_rec(std::move(colon));
  std::vector<int64_t> r(std::max(a.size(), b.size() + 1), 0);
  for (size_t k = 0; k < a.size(); ++k) r[k] = checked_add(r[k], a[k]);
  for (size_t k = 0; k < b.size(); ++k) r[k + 1] = checked_add(r[k + 1], b[k]);
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

} // namespace detail

// Hilbert numerator of R/I from the lead terms of a Groebner basis of I.
inline std::vector<int64_t> hilbert_numerator(std::vector<Monomial> lead_terms) {
  return detail::numerator_rec(std::move(lead_terms));
}

struct HilbertData {
  std::vector<int64_t> numerator;  // N(t), HS(R/I) = N/(1-t)^n
  int nvars = 0;
  int codim = 0;                   // multiplicity of (1-t) in N
  int projective_dimension = -1;   // dim of V(I) as projective scheme
  int64_t degree = 0;

  bool empty() const { return projective_dimension < 0; }
};

inline HilbertData hilbert_from_numerator(std::vector<int64_t> num, int nvars) {
  HilbertData h;
  h.numerator = num;
  h.nvars = nvars;
  bool zero = true;
  for (int64_t c : num)
    if (c) zero = false;
  if (zero) { // unit ideal: empty scheme
    h.codim = nvars;
    h.projective_dimension = -1;
    h.degree = 0;
    return h;
  }
  // divide out (1-t) while N(1) == 0
  std::vector<int64_t> q = std::move(num);
  int c = 0;
  for (;;) {
    int64_t at1 = 0;
    for (int64_t v : q) at1 = detail::checked_add(at1, v);
    if (at1 != 0) {
      h.degree = at1;
      break;
    }
    // synthetic division by (1-t): q(t) = (1-t) r(t)
    std::vector<int64_t> r(q.size() ? q.size() - 1 : 0, 0);
    int64_t carry = 0;
    for (size_t k = 0; k < r.size(); ++k) {
      r[k] = detail::checked_add(carry, q[k]);
      carry = r[k];
    }
    q.swap(r);
    ++c;
  }
  h.codim = c;
  h.projective_dimension = nvars - c - 1;
  return h;
}

inline HilbertData hilbert_of_leads(std::vector<Monomial> lead_terms, int nvars) {
  return hilbert_from_numerator(hilbert_numerator(std::move(lead_terms)), nvars);
}

inline int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    // products stay well inside int64 for the sizes used here
    r = r * (n - k + i) / i;
  }
  return r;
}

// dim_k (R/I)_m given the Hilbert numerator of R/I
inline int64_t hilbert_function_from_numerator(const std::vector<int64_t>& num,
                                               int nvars, int m) {
  int64_t v = 0;
  for (size_t k = 0; k < num.size(); ++k) {
    if (static_cast<int>(k) > m) break;
    v = detail::checked_add(
        v, num[k] * binomial(m - static_cast<int>(k) + nvars - 1, nvars - 1));
  }
  return v;
}

// Riemann-Roch prediction for h^0(mA) on a degree-d polarized Calabi-Yau
// threefold with 2 A^3 + A.c2 = 96: h^0(mA) = m^3 d / 6 + m (96 - 2d) / 12.
// Throws if the stated value is not an integer (inconsistent degree).
inline int64_t rr_expected_h0(int64_t d, int64_t m) {
  if (m < 1) throw std::invalid_argument("rr_expected_h0: m >= 1 required");
  int64_t num = 2 * m * m * m * d + m * (96 - 2 * d);
  if (num % 12 != 0)
    throw std::domain_error("rr_expected_h0: non-integral value, degree " +
                            std::to_string(d) + " inconsistent");
  return num / 12;
}

} // namespace cy7
