// Prime-field arithmetic. Elements are residues stored as uint32_t in
// [0, p); the modulus lives in the ring descriptor, not in each element.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "cy7/rng.hpp"

namespace cy7 {

using fp_t = uint32_t;

class PrimeField {
public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  }

  uint32_t p() const { return p_; }

  fp_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<fp_t>(r);
  }

  fp_t add(fp_t a, fp_t b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<fp_t>(s);
  }
  fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
  fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
  fp_t mul(fp_t a, fp_t b) const {
    return static_cast<fp_t>(static_cast<uint64_t>(a) * b % p_);
  }

  fp_t pow(fp_t a, uint64_t e) const {
    fp_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  fp_t inv(fp_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }

  fp_t random(Rng& rng) const { return static_cast<fp_t>(rng.below(p_)); }
  fp_t random_nonzero(Rng& rng) const {
    return static_cast<fp_t>(1 + rng.below(p_ - 1));
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  uint32_t p_;
};

} // namespace cy7
