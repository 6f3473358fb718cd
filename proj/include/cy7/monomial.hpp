// Monomials with fixed small-integer exponents and the three monomial
// orders used by the library: grevlex, lex and a block elimination order.
// Exponents are uint8_t; total degrees in these computations stay far
// below the 255 cap, and every product checks for overflow anyway.
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cy7 {

constexpr int kMaxVars = 16;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, int k = 1) {
    Monomial m;
    m.e[i] = static_cast<uint8_t>(k);
    m.deg = static_cast<uint16_t>(k);
    return m;
  }

  bool is_one() const { return deg == 0; }

  int operator[](int i) const { return e[i]; }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && e == o.e;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    unsigned d = static_cast<unsigned>(deg) + o.deg;
    if (d > 255) throw std::overflow_error("monomial degree overflow");
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<uint8_t>(e[i] + o.e[i]);
    r.deg = static_cast<uint16_t>(d);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient this / o; caller guarantees divisibility
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = static_cast<uint16_t>(d);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = static_cast<uint16_t>(d);
  return r;
}

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    uint64_t lo, hi;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    h = (h ^ lo) * 0x100000001b3ULL;
    h = (h ^ hi) * 0x100000001b3ULL;
    return static_cast<size_t>(h);
  }
};

// ---------------------------------------------------------------------------

enum class OrderKind : uint8_t { grevlex, lex, elim };

// A total order refining divisibility. elim(k) eliminates the first k
// variables: any monomial involving them sorts above any monomial that
// does not, with grevlex inside each block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  uint8_t block = 0; // first `block` variables, for elim

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elim(int k) {
    return {OrderKind::elim, static_cast<uint8_t>(k)};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  // negative if a < b, 0 if equal, positive if a > b
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::grevlex:
        return cmp_grevlex(a, b, 0, kMaxVars, a.deg, b.deg);
      case OrderKind::lex:
        for (int i = 0; i < kMaxVars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::elim: {
        int da = 0, db = 0;
        for (int i = 0; i < block; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        if (int c = cmp_grevlex(a, b, 0, block, da, db)) return c;
        return cmp_grevlex(a, b, block, kMaxVars, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

private:
  static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi,
                         int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

// All monomials of total degree d in n variables, in a fixed deterministic
// order (decreasing lexicographic).
inline void monomials_of_degree(int n, int d, std::vector<Monomial>& out) {
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == n - 1) {
      m.e[i] = static_cast<uint8_t>(rem);
      m.deg = static_cast<uint16_t>(d);
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      m.e[i] = static_cast<uint8_t>(k);
      rec(i + 1, rem - k);
    }
    m.e[i] = 0;
  };
  if (d < 0) return;
  rec(0, d);
}

inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  monomials_of_degree(n, d, out);
  return out;
}

} // namespace cy7
