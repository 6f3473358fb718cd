// Ring descriptor: a polynomial ring F_p[vars] with a default monomial
// order. Rings are immutable and shared by pointer; two rings are
// interchangeable iff structurally equal.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cy7/field.hpp"
#include "cy7/monomial.hpp"

namespace cy7 {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
  PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  Ring(uint32_t p, std::vector<std::string> names,
       MonomialOrder ord = MonomialOrder::grevlex())
      : field(p), vars(std::move(names)), order(ord) {
    if (static_cast<int>(vars.size()) > kMaxVars)
      throw std::invalid_argument("too many variables for this build");
  }

  int nvars() const { return static_cast<int>(vars.size()); }
  uint32_t p() const { return field.p(); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }

  bool same_as(const Ring& o) const {
    return p() == o.p() && vars == o.vars && order == o.order;
  }

  static RingPtr make(uint32_t p, std::vector<std::string> names,
                      MonomialOrder ord = MonomialOrder::grevlex()) {
    return std::make_shared<Ring>(p, std::move(names), ord);
  }

  // F_p[x0..x{n-1}], the standard coordinate ring of P^{n-1}
  static RingPtr projective(uint32_t p, int n,
                            MonomialOrder ord = MonomialOrder::grevlex()) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return make(p, std::move(names), ord);
  }

  // F_p[z11..z33], coordinates of the space of 3x3 matrices
  static RingPtr matrix3x3(uint32_t p, const std::string& letter = "z",
                           MonomialOrder ord = MonomialOrder::grevlex()) {
    std::vector<std::string> names;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        names.push_back(letter + std::to_string(i) + std::to_string(j));
    return make(p, std::move(names), ord);
  }

  // same variables, different order
  static RingPtr reorder(const RingPtr& r, MonomialOrder ord) {
    return make(r->p(), r->vars, ord);
  }

  // prepend an auxiliary variable (for intersections / elimination)
  static RingPtr prepend_var(const RingPtr& r, const std::string& name,
                             MonomialOrder ord) {
    std::vector<std::string> names;
    names.push_back(name);
    names.insert(names.end(), r->vars.begin(), r->vars.end());
    return make(r->p(), std::move(names), ord);
  }
};

} // namespace cy7
