// Buchberger's algorithm with the sugar selection strategy and the
// Gebauer-Moeller pair criteria, producing the unique reduced basis.
// Homogeneous inputs are processed degree by degree, so a run truncated at
// degree d is a valid basis for graded queries up to d. Deterministic:
// fixed tie-breaking everywhere, byte-identical results across runs.
#pragma once

#include <chrono>
#include <limits>
#include <optional>
#include <set>

#include "cy7/polynomial.hpp"

namespace cy7 {

struct Budget {
  uint64_t max_pairs = std::numeric_limits<uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  static Budget unlimited() { return Budget{}; }
  static Budget seconds(double s) {
    Budget b;
    b.max_seconds = s;
    return b;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
  bool expired(uint64_t pairs_done) const {
    return pairs_done > max_pairs || elapsed() > max_seconds;
  }
};

struct BudgetExceeded : std::runtime_error {
  uint64_t pairs_done;
  size_t queue_size;
  BudgetExceeded(uint64_t done, size_t queue)
      : std::runtime_error("computation budget exceeded after " +
                           std::to_string(done) + " S-pairs (" +
                           std::to_string(queue) + " pending)"),
        pairs_done(done), queue_size(queue) {}
};

// Geobucket accumulator for long reduction chains. Buckets are sorted term
// vectors with a consumed-prefix cursor; bucket i holds at most 16 * 4^i
// live terms.
class Geobucket {
public:
  Geobucket(const RingPtr& ring, MonomialOrder ord)
      : field_(&ring->field), ord_(ord) {}

  void add(std::vector<Term> ts) {
    if (ts.empty()) return;
    size_t idx = 0, cap = 16;
    while (ts.size() > cap) {
      cap *= 4;
      ++idx;
    }
    while (true) {
      if (idx >= buckets_.size()) buckets_.resize(idx + 1);
      Bucket& b = buckets_[idx];
      if (b.live() == 0) {
        b.terms = std::move(ts);
        b.at = 0;
        return;
      }
      ts = merge(b, std::move(ts));
      b.terms.clear();
      b.at = 0;
      if (ts.size() <= cap) {
        b.terms = std::move(ts);
        return;
      }
      cap *= 4;
      ++idx;
    }
  }

  // accumulate c * m * f, optionally skipping f's first terms
  void add_scaled(fp_t c, const Monomial& m, const std::vector<Term>& f,
                  size_t skip_first = 0) {
    if (c == 0) return;
    std::vector<Term> ts;
    ts.reserve(f.size() - skip_first);
    for (size_t i = skip_first; i < f.size(); ++i) {
      fp_t cc = field_->mul(c, f[i].c);
      if (cc) ts.push_back({f[i].m * m, cc});
    }
    add(std::move(ts));
  }

  // Extract the current lead term; combines duplicates, skips cancellations.
  std::optional<Term> pop_lead() {
    for (;;) {
      int best = -1;
      for (size_t b = 0; b < buckets_.size(); ++b) {
        if (buckets_[b].live() == 0) continue;
        if (best < 0 ||
            ord_.greater(buckets_[b].front().m, buckets_[best].front().m))
          best = static_cast<int>(b);
      }
      if (best < 0) return std::nullopt;
      Term t = buckets_[best].front();
      buckets_[best].at++;
      for (auto& b : buckets_) {
        if (b.live() == 0) continue;
        if (b.front().m == t.m) {
          t.c = field_->add(t.c, b.front().c);
          b.at++;
        }
      }
      if (t.c != 0) return t;
    }
  }

private:
  struct Bucket {
    std::vector<Term> terms;
    size_t at = 0;
    size_t live() const { return terms.size() - at; }
    const Term& front() const { return terms[at]; }
  };

  std::vector<Term> merge(const Bucket& a, std::vector<Term> b) {
    std::vector<Term> r;
    r.reserve(a.live() + b.size());
    size_t i = a.at, j = 0;
    while (i < a.terms.size() && j < b.size()) {
      int cmp = ord_.compare(a.terms[i].m, b[j].m);
      if (cmp > 0) {
        r.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        r.push_back(b[j++]);
      } else {
        fp_t c = field_->add(a.terms[i].c, b[j].c);
        if (c) r.push_back({a.terms[i].m, c});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms.size(); ++i) r.push_back(a.terms[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
  }

  const PrimeField* field_;
  MonomialOrder ord_;
  std::vector<Bucket> buckets_;
};

// Full reduction of f modulo a list of polynomials (not necessarily a
// Groebner basis). Divisor choice: first by index. The result has no term
// divisible by any lead monomial of `basis`.
inline Polynomial reduce(const Polynomial& f,
                         const std::vector<Polynomial>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const auto& F = f.ring()->field;
  MonomialOrder ord = f.order();
  Geobucket work(f.ring(), ord);
  work.add(f.terms());
  std::vector<Term> result;
  while (auto t = work.pop_lead()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lead_monomial().divides(t->m)) {
        fp_t c = F.neg(F.div(t->c, g.lead_coeff()));
        work.add_scaled(c, t->m / g.lead_monomial(), g.terms(), 1);
        reduced = true;
        break;
      }
    }
    if (!reduced) result.push_back(*t);
  }
  return Polynomial::from_terms(f.ring(), ord, std::move(result));
}

struct GroebnerBasis {
  std::vector<Polynomial> gens; // monic, auto-reduced, sorted by lead
  MonomialOrder order{};
  bool truncated = false;
  int truncation_degree = -1;
  uint64_t source_fingerprint = 0;

  bool empty() const { return gens.empty(); }
  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& g : gens) ms.push_back(g.lead_monomial());
    return ms;
  }
};

inline uint64_t fingerprint(const std::vector<Polynomial>& gens) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& g : gens) {
    mix(0x1234567);
    for (const auto& t : g.terms()) {
      mix(t.c);
      mix(MonomialHash{}(t.m));
    }
  }
  return h;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  Polynomial g = f.order() == gb.order ? f : f.with_order(gb.order);
  return reduce(g, gb.gens);
}

namespace detail {

struct SPair {
  int i, j;
  Monomial lcm;
  int sugar;
};

struct SPairLess {
  MonomialOrder ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
    if (int c = ord.compare(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

} // namespace detail

// Buchberger. `max_degree < 0` means no truncation; truncation is only
// meaningful for homogeneous input (sugar equals S-polynomial degree).
inline GroebnerBasis groebner(std::vector<Polynomial> gens, MonomialOrder ord,
                              const Budget& budget = Budget::unlimited(),
                              int max_degree = -1) {
  GroebnerBasis out;
  out.order = ord;
  out.source_fingerprint = fingerprint(gens);
  out.truncated = max_degree >= 0;
  out.truncation_degree = max_degree;

  RingPtr ring;
  std::vector<Polynomial> basis;
  std::vector<int> sugar;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    basis.push_back(g.with_order(ord).monic());
  }
  if (basis.empty()) return out;
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              if (int c = ord.compare(a.lead_monomial(), b.lead_monomial()))
                return c < 0;
              return a.size() < b.size();
            });
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) {
                            return a == b;
                          }),
              basis.end());
  for (const auto& g : basis) sugar.push_back(g.degree());

  std::set<detail::SPair, detail::SPairLess> queue{detail::SPairLess{ord}};

  auto pair_sugar = [&](int i, int j, const Monomial& l) {
    int si = sugar[i] + (l.deg - basis[i].lead_monomial().deg);
    int sj = sugar[j] + (l.deg - basis[j].lead_monomial().deg);
    return si > sj ? si : sj;
  };

  // Gebauer-Moeller pair update on arrival of element t
  auto update_pairs = [&](int t) {
    const Monomial& lt = basis[t].lead_monomial();
    std::vector<detail::SPair> fresh;
    for (int i = 0; i < t; ++i) {
      Monomial l = lcm(basis[i].lead_monomial(), lt);
      fresh.push_back({i, t, l, pair_sugar(i, t, l)});
    }
    // criterion M: drop (i,t) when some lcm(j,t) strictly divides lcm(i,t)
    std::vector<bool> drop(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a)
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
          drop[a] = true;
      }
    // criterion F: keep a single pair per lcm value
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = a + 1; b < fresh.size(); ++b)
        if (!drop[b] && fresh[b].lcm == fresh[a].lcm) drop[b] = true;
    }
    // product criterion
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a] && basis[fresh[a].i].lead_monomial().coprime(lt))
        drop[a] = true;
    // criterion B: retire old pairs whose lcm the new lead refines
    for (auto it = queue.begin(); it != queue.end();) {
      const auto& pr = *it;
      if (lt.divides(pr.lcm) &&
          lcm(basis[pr.i].lead_monomial(), lt) != pr.lcm &&
          lcm(basis[pr.j].lead_monomial(), lt) != pr.lcm)
        it = queue.erase(it);
      else
        ++it;
    }
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) queue.insert(fresh[a]);
  };

  for (size_t t = 1; t < basis.size(); ++t) update_pairs(static_cast<int>(t));

  const auto& F = ring->field;
  uint64_t done = 0;
  while (!queue.empty()) {
    if (budget.expired(done)) throw BudgetExceeded(done, queue.size());
    detail::SPair pr = *queue.begin();
    if (max_degree >= 0 && pr.sugar > max_degree) {
      // lowest pending degree is already above the cutoff
      break;
    }
    queue.erase(queue.begin());
    ++done;
    const Polynomial& fi = basis[pr.i];
    const Polynomial& fj = basis[pr.j];
    Polynomial s = fi.scaled_shift(1, pr.lcm / fi.lead_monomial())
                       .axpy(F.neg(1), pr.lcm / fj.lead_monomial(), fj);
    Polynomial r = reduce(s, basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    sugar.push_back(pr.sugar);
    update_pairs(static_cast<int>(basis.size()) - 1);
  }

  // reduced basis: minimalize lead terms, then tail-reduce
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool covered = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].lead_monomial();
      if (lj.divides(basis[i].lead_monomial()) &&
          (lj != basis[i].lead_monomial() || j < i)) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.less(a.lead_monomial(), b.lead_monomial());
            });
  std::vector<Polynomial> reduced(minimal.size(), Polynomial::zero(ring, ord));
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = reduce(minimal[i], others).monic();
  }
  out.gens = std::move(reduced);
  return out;
}

inline GroebnerBasis groebner(const std::vector<Polynomial>& gens,
                              const Budget& budget = Budget::unlimited()) {
  if (gens.empty()) return GroebnerBasis{};
  return groebner(gens, gens.front().ring()->order, budget);
}

} // namespace cy7
