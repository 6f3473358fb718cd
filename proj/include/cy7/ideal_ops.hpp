// Ideal-level algebra: intersection (one auxiliary variable), colon,
// elimination, saturation. These are the raw tools linkage is built from.
#pragma once

#include "cy7/ideal.hpp"

namespace cy7 {

// I cap J via the auxiliary-variable construction: eliminate t from
// t*I + (1-t)*J.
inline Ideal intersect(const Ideal& a, const Ideal& b,
                       const Budget& budget = Budget::unlimited()) {
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
  const RingPtr& R = a.ring();
  const int n = R->nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("intersect: out of variables");
  RingPtr Rt = Ring::prepend_var(R, "t#", MonomialOrder::elim(1));
  std::vector<int> up(n), down(n + 1, -1);
  for (int i = 0; i < n; ++i) up[i] = i + 1, down[i + 1] = i;

  Polynomial t = Polynomial::variable(Rt, 0);
  Polynomial one_minus_t = Polynomial::constant(Rt, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) gens.push_back(t * f.rename(Rt, up));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.rename(Rt, up));

  GroebnerBasis gb = groebner(gens, Rt->order, budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens)
    if (g.lead_monomial()[0] == 0) out.push_back(g.rename(R, down));
  return Ideal(R, std::move(out));
}

namespace detail {
inline std::vector<int> identity_map(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}
} // namespace detail

// I : (g) = (I cap (g)) / g
inline Ideal colon(const Ideal& a, const Polynomial& g,
                   const Budget& budget = Budget::unlimited()) {
  if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  Ideal principal(a.ring(), {g}, false);
  Ideal inter = intersect(a, principal, budget);
  std::vector<Polynomial> out;
  for (const auto& f : inter.gens()) out.push_back(exact_divide(f, g));
  return Ideal(a.ring(), std::move(out));
}

// I : J over a minimal generating set of J (the colon only depends on the
// ideal, and small low-degree generators keep the intersections cheap)
inline Ideal colon(const Ideal& a, const Ideal& b,
                   const Budget& budget = Budget::unlimited()) {
  if (b.is_zero_ideal())
    throw std::invalid_argument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : b.minimal_generators(budget)) {
    Ideal c = colon(a, g, budget);
    if (!acc) {
      acc = c;
    } else {
      // cheap exit: colon is the intersection of the per-generator colons
      acc = intersect(*acc, c, budget);
    }
  }
  return *acc;
}

// I cap F_p[x_k..x_{n-1}] (drop the first k variables), returned inside
// the original ring.
inline Ideal eliminate(const Ideal& a, int k,
                       const Budget& budget = Budget::unlimited()) {
  const RingPtr& R = a.ring();
  GroebnerBasis gb = groebner(a.gens(), MonomialOrder::elim(k), budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    bool pure = true;
    for (int i = 0; i < k && pure; ++i)
      if (g.lead_monomial()[i]) pure = false;
    if (pure) out.push_back(g.with_order(R->order));
  }
  bool homog = true;
  for (const auto& g : out)
    if (!g.is_homogeneous()) homog = false;
  return Ideal(R, std::move(out), homog);
}

// I : J^infinity by iterated colon with stabilization detected by graded
// equality. The exponent cap is an error, not a silent truncation.
inline Ideal saturate(const Ideal& a, const Ideal& b,
                      const Budget& budget = Budget::unlimited(),
                      int max_exponent = 20) {
  Ideal cur = a;
  for (int e = 0; e < max_exponent; ++e) {
    Ideal next = colon(cur, b, budget);
    if (next.equals(cur, budget)) return cur;
    cur = next;
  }
  throw std::runtime_error("saturate: no stabilization within exponent cap");
}

// Saturation with respect to the last variable, for homogeneous ideals in
// grevlex: divide every reduced-basis element by the largest power of the
// last variable dividing it. Single pass gives a basis of I : x_last^inf.
inline Ideal saturate_last_variable(const Ideal& a,
                                    const Budget& budget = Budget::unlimited()) {
  const RingPtr& R = a.ring();
  if (!(R->order == MonomialOrder::grevlex()))
    throw std::invalid_argument("saturate_last_variable requires grevlex");
  const int last = R->nvars() - 1;
  Ideal cur = a;
  for (;;) {
    const GroebnerBasis& gb = cur.gb(budget);
    bool changed = false;
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens) {
      int k = g.lead_monomial()[last];
      // in grevlex a power of the last variable dividing the lead divides
      // every term of a homogeneous polynomial
      if (k > 0) {
        out.push_back(exact_divide(
            g, Polynomial::variable(R, last, k)));
        changed = true;
      } else {
        out.push_back(g);
      }
    }
    cur = Ideal(R, std::move(out));
    if (!changed) return cur;
  }
}

// I : m^infinity for the irrelevant maximal ideal m, via a random linear
// change of coordinates and last-variable saturation. Exact when the random
// form avoids the associated primes other than m; callers cross-check the
// result (degree / Hilbert-function stabilization).
inline Ideal saturate_irrelevant(const Ideal& a, Rng& rng,
                                 const Budget& budget = Budget::unlimited()) {
  const RingPtr& R = a.ring();
  const auto& F = R->field;
  const int n = R->nvars();
  std::vector<fp_t> c(n - 1);
  for (auto& ci : c) ci = F.random(rng);

  auto shear = [&](bool inverse) {
    std::vector<Polynomial> images;
    for (int i = 0; i < n - 1; ++i) images.push_back(Polynomial::variable(R, i));
    Polynomial lastimg = Polynomial::variable(R, n - 1);
    for (int i = 0; i < n - 1; ++i) {
      fp_t ci = inverse ? c[i] : F.neg(c[i]);
      if (ci) lastimg = lastimg.axpy(ci, Monomial::one(), Polynomial::variable(R, i));
    }
    images.push_back(lastimg);
    return images;
  };

  auto fwd = shear(false);
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(g.substitute(R, fwd));
  Ideal moved = saturate_last_variable(Ideal(R, std::move(gens)), budget);
  auto back = shear(true);
  std::vector<Polynomial> out;
  for (const auto& g : moved.gens()) out.push_back(g.substitute(R, back));
  return Ideal(R, std::move(out));
}

} // namespace cy7
