// Gorenstein linkage: link a subvariety through an ambient complete
// intersection (or a hypersurface section of an arithmetically Gorenstein
// ambient) by an ideal quotient, and chain two links. Every accepted step
// verifies degree additivity and the double-link involution.
#pragma once

#include "cy7/ideal_ops.hpp"

namespace cy7 {

struct ImproperLink : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LinkStep {
  Ideal ambient, input, residual;
  int64_t ambient_degree = 0, input_degree = 0, residual_degree = 0;
};

// residual of `sub` inside `ambient`; throws ImproperLink unless degree
// additivity and the involution hold
inline LinkStep link(const Ideal& ambient, const Ideal& sub,
                     const Budget& budget = Budget::unlimited()) {
  LinkStep step;
  step.ambient = ambient;
  step.input = sub;
  if (!sub.contains(ambient, budget))
    throw ImproperLink("link: ambient ideal is not contained in the subvariety ideal");

  const auto& ha = ambient.hilbert(budget);
  const auto& hs = sub.hilbert(budget);
  if (ha.codim != hs.codim)
    throw ImproperLink("link: ambient and subvariety codimension differ");

  step.residual = colon(ambient, sub, budget);
  const auto& hr = step.residual.hilbert(budget);
  step.ambient_degree = ha.degree;
  step.input_degree = hs.degree;
  step.residual_degree = hr.degree;

  if (hr.codim != ha.codim)
    throw ImproperLink("link: residual has wrong codimension");
  if (ha.degree != hs.degree + hr.degree)
    throw ImproperLink("link: degree additivity fails (" +
                       std::to_string(ha.degree) + " != " +
                       std::to_string(hs.degree) + " + " +
                       std::to_string(hr.degree) + ")");
  Ideal back = colon(ambient, step.residual, budget);
  if (!back.equals(sub, budget))
    throw ImproperLink("link: double-link involution fails");
  return step;
}

struct BilinkResult {
  Ideal result;
  LinkStep first, second;
  Polynomial h1, h2;
  int attempts = 1;
};

// Two links inside hypersurface sections of one ambient `base`: first a
// degree-h1 section through `sub`, then a degree-h2 section through the
// intermediate residual. The second hypersurface is re-checked not to
// contain `sub`.
inline BilinkResult bilink(const Ideal& sub, const Ideal& base, int h1_degree,
                           int h2_degree, Rng& rng,
                           const Budget& budget = Budget::unlimited(),
                           int retries = 8) {
  std::string last_error = "no attempt made";
  for (int attempt = 1; attempt <= retries; ++attempt) {
    try {
      BilinkResult out;
      out.attempts = attempt;

      // degree-h1 hypersurface through sub, not a section of base
      Polynomial h1 = sub.random_member(h1_degree, rng, budget);
      for (int tries = 0; base.contains(h1, budget) && tries < 16; ++tries)
        h1 = sub.random_member(h1_degree, rng, budget);
      if (base.contains(h1, budget))
        throw ImproperLink("bilink: no first hypersurface outside the base");
      out.h1 = h1;

      Ideal ambient1 = sum(base, h1);
      out.first = link(ambient1, sub, budget);
      const Ideal& mid = out.first.residual;

      // degree-h2 hypersurface through the residual, avoiding both the base
      // section and the original subvariety
      Polynomial h2 = mid.random_member(h2_degree, rng, budget);
      bool ok = false;
      for (int tries = 0; tries < 16 && !ok; ++tries) {
        ok = !base.contains(h2, budget) && !sub.contains(h2, budget);
        if (!ok) h2 = mid.random_member(h2_degree, rng, budget);
      }
      if (!ok)
        throw ImproperLink(
            "bilink: no second hypersurface avoiding the input subvariety");
      out.h2 = h2;

      Ideal ambient2 = sum(base, h2);
      out.second = link(ambient2, mid, budget);
      out.result = out.second.residual;
      return out;
    } catch (const ImproperLink& e) {
      last_error = e.what();
    }
  }
  throw ImproperLink("bilink: retries exhausted; last failure: " + last_error);
}

} // namespace cy7
