// Homogeneous ideals with lazily cached Groebner bases and Hilbert data.
// Ideals are immutable values; the cache is attached to the shared guts and
// populated under a mutex, so copies are cheap and thread-safe.
#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "cy7/hilbert.hpp"
#include "cy7/rng.hpp"

namespace cy7 {

namespace detail {

// Row echelon accumulator over F_p with monomial-indexed columns.
class Echelon {
public:
  Echelon(const RingPtr& ring, MonomialOrder ord)
      : ring_(ring), ord_(ord) {}

  // Reduce f against the rows; returns the (non-normalized) remainder.
  Polynomial residue(Polynomial f) const {
    const auto& F = ring_->field;
    for (const auto& row : rows_) {
      if (f.is_zero()) break;
      // find row's pivot monomial inside f
      auto it = find_coeff(f, row.lead_monomial());
      if (it != 0) f = f.axpy(F.neg(it), Monomial::one(), row);
    }
    return f;
  }

  // Returns true when f was independent (and inserts its reduced form).
  bool insert(Polynomial f) {
    f = residue(std::move(f));
    if (f.is_zero()) return false;
    f = f.monic();
    // keep rows ordered by decreasing pivot for deterministic reduction
    auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), f,
        [&](const Polynomial& a, const Polynomial& b) {
          return ord_.greater(a.lead_monomial(), b.lead_monomial());
        });
    rows_.insert(pos, std::move(f));
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<Polynomial>& rows() const { return rows_; }

private:
  static fp_t find_coeff(const Polynomial& f, const Monomial& m) {
    for (const auto& t : f.terms())
      if (t.m == m) return t.c;
    return 0;
  }

  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Polynomial> rows_;
};

// dense random form of degree d (all monomial coefficients drawn)
inline Polynomial random_form(const RingPtr& R, int d, Rng& rng) {
  std::vector<Term> ts;
  for (const auto& m : monomials_of_degree(R->nvars(), d))
    ts.push_back({m, R->field.random(rng)});
  Polynomial f = Polynomial::from_terms(R, R->order, std::move(ts));
  if (f.is_zero()) return random_form(R, d, rng);
  return f;
}

} // namespace detail

class Ideal {
public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous = true)
      : impl_(std::make_shared<Impl>()) {
    impl_->ring = std::move(ring);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (require_homogeneous && !g.is_homogeneous())
        throw std::invalid_argument("ideal generators must be homogeneous");
      impl_->gens.push_back(g.with_order(impl_->ring->order));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  const RingPtr& ring() const { return impl_->ring; }
  const std::vector<Polynomial>& gens() const { return impl_->gens; }
  bool is_zero_ideal() const { return impl_->gens.empty(); }
  int nvars() const { return impl_->ring->nvars(); }

  // reduced Groebner basis in the ring's default order, cached
  const GroebnerBasis& gb(const Budget& budget = Budget::unlimited()) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (!impl_->full_gb)
      impl_->full_gb = groebner(impl_->gens, impl_->ring->order, budget);
    return *impl_->full_gb;
  }

  // Groebner basis valid for graded queries up to `deg` (full basis reused
  // when already present)
  GroebnerBasis truncated_gb(int deg, const Budget& budget = Budget::unlimited()) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (impl_->full_gb) return *impl_->full_gb;
    auto it = impl_->truncated.lower_bound(deg);
    if (it != impl_->truncated.end()) return it->second;
    GroebnerBasis g = groebner(impl_->gens, impl_->ring->order, budget, deg);
    impl_->truncated.emplace(deg, g);
    return g;
  }

  const HilbertData& hilbert(const Budget& budget = Budget::unlimited()) const {
    const GroebnerBasis& basis = gb(budget);
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (!impl_->hilbert)
      impl_->hilbert = hilbert_of_leads(basis.lead_monomials(), nvars());
    return *impl_->hilbert;
  }

  int dimension(const Budget& budget = Budget::unlimited()) const {
    return hilbert(budget).projective_dimension;
  }
  int64_t degree(const Budget& budget = Budget::unlimited()) const {
    return hilbert(budget).degree;
  }

  // dim_k of the degree-d piece of the ideal
  int64_t graded_piece_dim(int d, const Budget& budget = Budget::unlimited()) const {
    if (d < 0) return 0;
    if (impl_->gens.empty()) return 0;
    GroebnerBasis g = truncated_gb(d, budget);
    auto leads = g.lead_monomials();
    int64_t count = 0;
    for (const auto& m : monomials_of_degree(nvars(), d))
      for (const auto& l : leads)
        if (l.divides(m)) {
          ++count;
          break;
        }
    return count;
  }

  // dim_k (R/I)_m
  int64_t hilbert_function(int m, const Budget& budget = Budget::unlimited()) const {
    return binomial(m + nvars() - 1, nvars() - 1) - graded_piece_dim(m, budget);
  }

  // membership test; exact for homogeneous f via a degree-truncated basis
  bool contains(const Polynomial& f, const Budget& budget = Budget::unlimited()) const {
    if (f.is_zero()) return true;
    if (impl_->gens.empty()) return false;
    GroebnerBasis g = f.is_homogeneous() ? truncated_gb(f.degree(), budget)
                                         : gb(budget);
    return normal_form(f, g).is_zero();
  }

  bool contains(const Ideal& other, const Budget& budget = Budget::unlimited()) const {
    for (const auto& g : other.gens())
      if (!contains(g, budget)) return false;
    return true;
  }

  // graded equality, decided on reduced Groebner bases
  bool equals(const Ideal& other, const Budget& budget = Budget::unlimited()) const {
    const auto& a = gb(budget).gens;
    const auto& b = other.gb(budget).gens;
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  // echelon basis of the degree-d piece of the ideal
  std::vector<Polynomial> graded_piece_basis(int d, const Budget& budget = Budget::unlimited()) const {
    detail::Echelon ech(impl_->ring, impl_->ring->order);
    for (const auto& g : impl_->gens) {
      int dg = g.degree();
      if (dg > d) continue;
      for (const auto& m : monomials_of_degree(nvars(), d - dg))
        ech.insert(g.scaled_shift(1, m));
    }
    (void)budget;
    return ech.rows();
  }

  // uniformly random element of the degree-d piece (nonzero)
  Polynomial random_member(int d, Rng& rng, const Budget& budget = Budget::unlimited()) const {
    auto basis = graded_piece_basis(d, budget);
    if (basis.empty())
      throw std::domain_error("random_member: empty graded piece in degree " +
                              std::to_string(d));
    const auto& F = impl_->ring->field;
    for (int attempt = 0; attempt < 64; ++attempt) {
      Polynomial f = Polynomial::zero(impl_->ring, impl_->ring->order);
      for (const auto& b : basis) {
        fp_t c = F.random(rng);
        if (c) f = f.axpy(c, Monomial::one(), b);
      }
      if (!f.is_zero()) return f;
    }
    throw std::domain_error("random_member: could not draw a nonzero element");
  }

  // minimal homogeneous generating subset (graded Nakayama, degree by degree)
  std::vector<Polynomial> minimal_generators(const Budget& budget = Budget::unlimited()) const {
    std::vector<Polynomial> sorted = impl_->gens;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                       return a.degree() < b.degree();
                     });
    std::vector<Polynomial> picked;
    size_t i = 0;
    while (i < sorted.size()) {
      int d = sorted[i].degree();
      detail::Echelon ech(impl_->ring, impl_->ring->order);
      for (const auto& g : picked) {
        int dg = g.degree();
        if (dg >= d) continue;
        for (const auto& m : monomials_of_degree(nvars(), d - dg))
          ech.insert(g.scaled_shift(1, m));
      }
      for (; i < sorted.size() && sorted[i].degree() == d; ++i)
        if (ech.insert(sorted[i])) picked.push_back(sorted[i]);
    }
    (void)budget;
    return picked;
  }

  // generator degree histogram of the minimal generators: degree -> count
  std::map<int, int> generator_profile(const Budget& budget = Budget::unlimited()) const {
    std::map<int, int> prof;
    for (const auto& g : minimal_generators(budget)) ++prof[g.degree()];
    return prof;
  }

  uint64_t fingerprint() const { return cy7::fingerprint(impl_->gens); }

private:
  struct Impl {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mutex;
    mutable std::optional<GroebnerBasis> full_gb;
    mutable std::map<int, GroebnerBasis> truncated;
    mutable std::optional<HilbertData> hilbert;
  };
  std::shared_ptr<Impl> impl_ = std::make_shared<Impl>();
};

// I + J in a shared ring
inline Ideal sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal sum(const Ideal& a, const Polynomial& f) {
  std::vector<Polynomial> gens = a.gens();
  gens.push_back(f);
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

} // namespace cy7
