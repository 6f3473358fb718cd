// Sparse multivariate polynomials over F_p. Terms are kept strictly
// decreasing in the polynomial's monomial order with no zero coefficients,
// so equal polynomials have identical term lists.
#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cy7/ring.hpp"

namespace cy7 {

struct Term {
  Monomial m;
  fp_t c = 0;
};

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(RingPtr ring, MonomialOrder ord)
      : ring_(std::move(ring)), ord_(ord) {}
  explicit Polynomial(RingPtr ring)
      : ring_(std::move(ring)), ord_(ring_->order) {}

  // terms need not be sorted or combined; normalizes
  static Polynomial from_terms(RingPtr ring, MonomialOrder ord,
                               std::vector<Term> terms) {
    Polynomial f(std::move(ring), ord);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.m, b.m);
    });
    const auto& F = f.ring_->field;
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().m == t.m) {
        f.terms_.back().c = F.add(f.terms_.back().c, t.c);
        if (f.terms_.back().c == 0) f.terms_.pop_back();
      } else if (t.c != 0) {
        f.terms_.push_back(t);
      }
    }
    return f;
  }

  static Polynomial zero(RingPtr ring, MonomialOrder ord) {
    return Polynomial(std::move(ring), ord);
  }
  static Polynomial zero(RingPtr ring) {
    MonomialOrder o = ring->order;
    return Polynomial(std::move(ring), o);
  }
  static Polynomial constant(RingPtr ring, long long v) {
    Polynomial f(ring);
    fp_t c = ring->field.from_int(v);
    if (c) f.terms_.push_back({Monomial::one(), c});
    return f;
  }
  static Polynomial variable(RingPtr ring, int i, int k = 1) {
    Polynomial f(ring);
    f.terms_.push_back({Monomial::var(i, k), 1});
    return f;
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, fp_t c = 1) {
    Polynomial f(ring);
    if (c) f.terms_.push_back({m, c});
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Term& lead() const {
    if (terms_.empty()) throw std::domain_error("lead of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().m; }
  fp_t lead_coeff() const { return lead().c; }

  int degree() const { // total degree; -1 for 0
    int d = -1;
    for (const auto& t : terms_)
      if (t.m.deg > d) d = t.m.deg;
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().m.deg;
    for (const auto& t : terms_)
      if (t.m.deg != d) return false;
    return true;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(*this);
    const auto& F = ring_->field;
    for (auto& t : r.terms_) t.c = F.neg(t.c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return axpy(1, Monomial::one(), o); }
  Polynomial operator-(const Polynomial& o) const {
    return axpy(ring_->field.neg(1), Monomial::one(), o);
  }

  // this + c * m * o, the merge primitive everything else reduces to
  Polynomial axpy(fp_t c, const Monomial& m, const Polynomial& o) const {
    check_compatible(o);
    const auto& F = ring_->field;
    Polynomial r(ring_, ord_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      Monomial mj = o.terms_[j].m * m;
      int cmp = ord_.compare(terms_[i].m, mj);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        fp_t cc = F.mul(c, o.terms_[j].c);
        if (cc) r.terms_.push_back({mj, cc});
        ++j;
      } else {
        fp_t cc = F.add(terms_[i].c, F.mul(c, o.terms_[j].c));
        if (cc) r.terms_.push_back({mj, cc});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      fp_t cc = F.mul(c, o.terms_[j].c);
      if (cc) r.terms_.push_back({o.terms_[j].m * m, cc});
    }
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    const auto& F = ring_->field;
    if (is_zero() || o.is_zero()) return zero(ring_, ord_);
    if (o.size() == 1)
      return scaled_shift(o.terms_[0].c, o.terms_[0].m);
    if (size() == 1)
      return o.scaled_shift(terms_[0].c, terms_[0].m);
    std::unordered_map<Monomial, fp_t, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Monomial m = a.m * b.m;
        fp_t& slot = acc[m];
        slot = F.add(slot, F.mul(a.c, b.c));
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, cc] : acc)
      if (cc) ts.push_back({m, cc});
    return from_terms(ring_, ord_, std::move(ts));
  }

  Polynomial operator*(fp_t c) const { return scaled_shift(c, Monomial::one()); }

  // c * m * this
  Polynomial scaled_shift(fp_t c, const Monomial& m) const {
    const auto& F = ring_->field;
    Polynomial r(ring_, ord_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      fp_t cc = F.mul(t.c, c);
      if (cc) r.terms_.push_back({t.m * m, cc});
    }
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled_shift(ring_->field.inv(lead_coeff()), Monomial::one());
  }

  Polynomial derivative(int var) const {
    const auto& F = ring_->field;
    Polynomial r(ring_, ord_);
    for (const auto& t : terms_) {
      int e = t.m[var];
      if (e == 0) continue;
      fp_t c = F.mul(t.c, F.from_int(e));
      if (!c) continue;
      Monomial m = t.m;
      m.e[var] -= 1;
      m.deg -= 1;
      r.terms_.push_back({m, c});
    }
    // term order is preserved by d/dx within the supported orders only
    // when degrees stay aligned; re-sort to be safe
    std::vector<Term> ts(r.terms_.begin(), r.terms_.end());
    return from_terms(ring_, ord_, std::move(ts));
  }

  // Ring homomorphism determined by images of the variables. The images
  // live in `target`; every variable must be assigned.
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
      throw std::invalid_argument("substitute: one image per variable required");
    MonomialOrder tord = target->order;
    Polynomial acc = Polynomial::zero(target, tord);
    for (const auto& t : terms_) {
      Polynomial term = Polynomial::monomial(target, Monomial::one(), t.c);
      for (int i = 0; i < ring_->nvars(); ++i)
        for (int k = 0; k < t.m[i]; ++k) term = term * images[i];
      acc = acc + term;
    }
    return acc;
  }

  // Cheap renaming homomorphism: variable i of this ring maps to variable
  // var_map[i] of the target ring.
  Polynomial rename(const RingPtr& target, const std::vector<int>& var_map) const {
    Polynomial r(target);
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (!t.m[i]) continue;
        m.e[var_map[i]] = static_cast<uint8_t>(m.e[var_map[i]] + t.m[i]);
      }
      m.deg = t.m.deg;
      ts.push_back({m, t.c});
    }
    return from_terms(target, target->order, std::move(ts));
  }

  Polynomial with_order(MonomialOrder ord) const {
    if (ord == ord_) return *this;
    std::vector<Term> ts = terms_;
    return from_terms(ring_, ord, std::move(ts));
  }

  void check_compatible(const Polynomial& o) const {
    if (ring_.get() != o.ring_.get() && !ring_->same_as(*o.ring_))
      throw std::invalid_argument("polynomial ring mismatch");
    if (ord_ != o.ord_)
      throw std::invalid_argument("polynomial order mismatch");
  }

private:
  RingPtr ring_;
  MonomialOrder ord_{};
  std::vector<Term> terms_;
};

inline Polynomial operator*(fp_t c, const Polynomial& f) { return f * c; }

// Exact division by a single polynomial; throws if not divisible.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& F = f.ring()->field;
  const auto& ord = f.order();
  Polynomial rem = f;
  Polynomial quot(f.ring(), ord);
  fp_t glc_inv = F.inv(g.lead_coeff());
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!g.lead_monomial().divides(lt.m))
      throw std::domain_error("exact_divide: not divisible");
    Monomial qm = lt.m / g.lead_monomial();
    fp_t qc = F.mul(lt.c, glc_inv);
    qterms.push_back({qm, qc});
    rem = rem.axpy(F.neg(qc), qm, g);
  }
  return Polynomial::from_terms(f.ring(), ord, std::move(qterms));
}

// True iff g divides f exactly (single-divisor remainder is zero).
inline bool divides_exactly(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  const auto& F = f.ring()->field;
  Polynomial rem = f;
  fp_t glc_inv = F.inv(g.lead_coeff());
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!g.lead_monomial().divides(lt.m)) return false;
    rem = rem.axpy(F.neg(F.mul(lt.c, glc_inv)), lt.m / g.lead_monomial(), g);
  }
  return true;
}

} // namespace cy7
