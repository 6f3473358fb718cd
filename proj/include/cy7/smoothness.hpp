// Probabilistic smoothness checks: Jacobian matrices, random batches of
// codim-size minors, saturated singular loci. A smooth verdict is always
// "smooth over F_p at this seed", nothing stronger.
#pragma once

#include "cy7/ideal_ops.hpp"
#include "cy7/polymatrix.hpp"

namespace cy7 {

inline PolyMatrix jacobian(const Ideal& I) {
  PolyMatrix J;
  for (const auto& g : I.gens()) {
    std::vector<Polynomial> row;
    for (int v = 0; v < I.nvars(); ++v) row.push_back(g.derivative(v));
    J.push_back(std::move(row));
  }
  return J;
}

enum class MinorStrategy { full_minors, random_minor_batch };

struct SingularLocusReport {
  MinorStrategy method = MinorStrategy::random_minor_batch;
  Ideal singular_ideal;         // saturated
  int projective_dimension = -2; // -1 means empty; -2 means not determined
  int64_t degree = 0;           // meaningful when the locus is 0-dimensional
  int minors_used = 0;
  int minors_available = 0;
  uint64_t seed = 0;
  bool exhausted_budget = false;
  bool exact = false;           // every available minor is accounted for
  double seconds = 0;
};

// Saturated ideal of I + (codim x codim minors of the Jacobian). With the
// batch strategy, randomly chosen minors are added (32 at a time, cap 512)
// until the dimension drops to `target_dim`; the report is exact when the
// remaining minors all reduce into the saturated ideal.
inline SingularLocusReport singular_locus(const Ideal& I, int codim,
                                          MinorStrategy strategy, uint64_t seed,
                                          const Budget& budget,
                                          int target_dim = -1) {
  auto t0 = std::chrono::steady_clock::now();
  SingularLocusReport rep;
  rep.method = strategy;
  rep.seed = seed;
  Rng rng(seed);

  PolyMatrix J = jacobian(I);
  const int nr = static_cast<int>(J.size());
  const int nc = I.nvars();
  auto row_sets = subsets_of_size(nr, codim);
  auto col_sets = subsets_of_size(nc, codim);
  std::vector<std::pair<int, int>> index;
  index.reserve(row_sets.size() * col_sets.size());
  for (int r = 0; r < static_cast<int>(row_sets.size()); ++r)
    for (int c = 0; c < static_cast<int>(col_sets.size()); ++c)
      index.push_back({r, c});
  rep.minors_available = static_cast<int>(index.size());

  int cap = static_cast<int>(index.size());
  if (strategy == MinorStrategy::random_minor_batch) {
    // deterministic Fisher-Yates
    for (size_t i = index.size(); i > 1; --i)
      std::swap(index[i - 1], index[rng.below(i)]);
    cap = std::min<int>(cap, 512);
  }

  auto minor_at = [&](int k) {
    return determinant(submatrix(J, row_sets[index[k].first],
                                 col_sets[index[k].second]));
  };

  std::vector<Polynomial> gens = I.gens();
  int used = 0;
  const int batch = strategy == MinorStrategy::full_minors
                        ? cap
                        : std::min(32, cap);
  int cur_dim = I.dimension(budget);
  try {
    for (;;) {
      int take = std::min(batch, cap - used);
      for (int k = 0; k < take; ++k) {
        Polynomial m = minor_at(used + k);
        if (!m.is_zero()) gens.push_back(m);
      }
      used += take;
      Ideal cand(I.ring(), gens);
      cur_dim = cand.dimension(budget);
      if (cur_dim > target_dim && used < cap) continue;
      rep.minors_used = used;
      if (cur_dim < 0) {
        // projectively empty; the saturation is the unit ideal. Emptiness
        // of a partial-minor locus implies emptiness of the full one
        // (more equations only shrink it).
        rep.singular_ideal =
            Ideal(I.ring(), {Polynomial::constant(I.ring(), 1)}, false);
        rep.projective_dimension = -1;
        rep.degree = 0;
        rep.exact = true;
        break;
      }
      Rng satrng = rng.fork();
      Ideal sat = saturate_irrelevant(cand, satrng, budget);
      rep.singular_ideal = sat;
      const auto& h = sat.hilbert(budget);
      rep.projective_dimension = h.projective_dimension;
      rep.degree = h.projective_dimension == 0 ? h.degree : 0;
      // exactness certificate: every minor not yet included reduces into
      // the saturated ideal
      bool all_in = true;
      for (int k = used; k < rep.minors_available && all_in; ++k) {
        if (budget.expired(0)) throw BudgetExceeded(0, 0);
        if (!sat.contains(minor_at(k), budget)) all_in = false;
      }
      rep.exact = all_in;
      if (rep.exact || used >= cap) break;
      // keep sampling: the partial locus is still too big
    }
  } catch (const BudgetExceeded&) {
    rep.exhausted_budget = true;
    rep.projective_dimension = cur_dim;
    rep.minors_used = used;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// convenience wrapper asking for emptiness
inline SingularLocusReport smoothness_check(const Ideal& I, int codim,
                                            uint64_t seed, const Budget& budget) {
  return singular_locus(I, codim, MinorStrategy::random_minor_batch, seed,
                        budget, -1);
}

} // namespace cy7
