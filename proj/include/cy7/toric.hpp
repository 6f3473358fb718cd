// Exact-rational intersection theory on the two-parameter toric ambients.
// The Chow classes live in Q[h,eta]/(h^2) truncated at the ambient
// dimension, with declared top-degree evaluation pairs. Everything is
// exact; integrality is asserted at the very end, never rounded.
//
// Evaluation pairs per ambient:
//   product ambient (P^1 x P^3, dim 4):   h.eta^3 = 1,   eta^4 = 0
//   six-fold scroll (dim 6), declared:    h.eta^5 = 1/2, eta^6 = 7/4
//   five-fold cone scroll (dim 5):        h.eta^4 = 1,   eta^5 = 3
// The five-fold values are forced by the Stanley-Reisner relations: the
// irrelevant ideal (t1,t2) gives h^2 = 0 and (a1,a2,b1,b2,b3) gives
// eta^2 (eta - h)^3 = 0, which with h^2 = 0 reads eta^5 = 3 h.eta^4; the
// fibre P^4 normalizes h.eta^4 = 1.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include <stdexcept>

namespace cy7 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// a_d eta^d + b_d h eta^{d-1} per total degree d
struct ChowClass {
  int dim = 0; // ambient dimension (truncation bound)
  std::vector<Rational> a, b;

  explicit ChowClass(int ambient_dim)
      : dim(ambient_dim), a(ambient_dim + 1, 0), b(ambient_dim + 1, 0) {}

  static ChowClass one(int dim) {
    ChowClass c(dim);
    c.a[0] = 1;
    return c;
  }
  // divisor u * h + v * eta
  static ChowClass divisor(int dim, const Rational& u, const Rational& v) {
    ChowClass c(dim);
    c.a[1] = v;
    c.b[1] = u;
    return c;
  }

  bool is_zero() const {
    for (int d = 0; d <= dim; ++d)
      if (a[d] != 0 || b[d] != 0) return false;
    return true;
  }

  ChowClass operator+(const ChowClass& o) const {
    ChowClass r(dim);
    for (int d = 0; d <= dim; ++d) {
      r.a[d] = a[d] + o.a[d];
      r.b[d] = b[d] + o.b[d];
    }
    return r;
  }
  ChowClass operator-(const ChowClass& o) const {
    ChowClass r(dim);
    for (int d = 0; d <= dim; ++d) {
      r.a[d] = a[d] - o.a[d];
      r.b[d] = b[d] - o.b[d];
    }
    return r;
  }
  ChowClass operator-() const {
    ChowClass r(dim);
    for (int d = 0; d <= dim; ++d) {
      r.a[d] = -a[d];
      r.b[d] = -b[d];
    }
    return r;
  }

  // h^2 = 0: (a eta^i + b h eta^{i-1})(c eta^j + d h eta^{j-1})
  //        = ac eta^{i+j} + (ad + bc) h eta^{i+j-1}
  ChowClass operator*(const ChowClass& o) const {
    ChowClass r(dim);
    for (int i = 0; i <= dim; ++i)
      for (int j = 0; i + j <= dim; ++j) {
        r.a[i + j] += a[i] * o.a[j];
        r.b[i + j] += a[i] * o.b[j] + b[i] * o.a[j];
      }
    return r;
  }

  ChowClass component(int d) const {
    ChowClass r(dim);
    r.a[d] = a[d];
    r.b[d] = b[d];
    return r;
  }
};

struct ToricAmbient {
  std::string name;
  int dim = 0;
  std::vector<ChowClass> coordinate_classes;
  Rational eval_eta;    // value of eta^dim
  Rational eval_h_eta;  // value of h eta^{dim-1}
  ChowClass hyperplane; // polarization class of the embedding

  ToricAmbient(std::string n, int d) : name(std::move(n)), dim(d), hyperplane(d) {}

  // top-degree evaluation; classes of lower degree pair to zero
  Rational evaluate(const ChowClass& c) const {
    return c.a[dim] * eval_eta + c.b[dim] * eval_h_eta;
  }

  static ToricAmbient product_p1_p3() {
    ToricAmbient t("P1xP3", 4);
    for (int i = 0; i < 2; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(4, 1, 0));
    for (int i = 0; i < 4; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(4, 0, 1));
    t.eval_eta = 0;
    t.eval_h_eta = 1;
    t.hyperplane = ChowClass::divisor(4, 1, 1);
    return t;
  }

  // weight matrix rows (h; eta): t1 t2 | a1 a2 | b1 b2 b3 | c
  //                               1  1 |  0  0 | -1 -1 -1 | -1
  //                               0  0 |  1  1 |  1  1  1 |  2
  static ToricAmbient scroll_sixfold() {
    ToricAmbient t("F-scroll", 6);
    for (int i = 0; i < 2; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(6, 1, 0));
    for (int i = 0; i < 2; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(6, 0, 1));
    for (int i = 0; i < 3; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(6, -1, 1));
    t.coordinate_classes.push_back(ChowClass::divisor(6, -1, 2));
    t.eval_eta = Rational(7, 4);
    t.eval_h_eta = Rational(1, 2);
    t.hyperplane = ChowClass::divisor(6, 0, 1);
    return t;
  }

  // t1 t2 | a1 a2 | b1 b2 b3  with h-weights (1,1,0,0,-1,-1,-1)
  static ToricAmbient scroll_fivefold() {
    ToricAmbient t("C-scroll", 5);
    for (int i = 0; i < 2; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(5, 1, 0));
    for (int i = 0; i < 2; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(5, 0, 1));
    for (int i = 0; i < 3; ++i)
      t.coordinate_classes.push_back(ChowClass::divisor(5, -1, 1));
    t.eval_eta = 3;
    t.eval_h_eta = 1;
    t.hyperplane = ChowClass::divisor(5, 0, 1);
    return t;
  }
};

// truncated series in t with ChowClass coefficients
struct ChernSeries {
  std::vector<ChowClass> c; // index = power of t

  explicit ChernSeries(int dim) : c(dim + 1, ChowClass(dim)) {}

  ChernSeries mul(const ChernSeries& o) const {
    int dim = static_cast<int>(c.size()) - 1;
    ChernSeries r(dim);
    for (int i = 0; i <= dim; ++i)
      for (int j = 0; i + j <= dim; ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    return r;
  }

  static ChernSeries line_bundle(const ChowClass& d) {
    int dim = d.dim;
    ChernSeries s(dim);
    s.c[0] = ChowClass::one(dim);
    s.c[1] = d;
    return s;
  }

  // geometric series (1 + D t)^{-1} = sum (-D t)^k
  static ChernSeries line_bundle_inverse(const ChowClass& d) {
    int dim = d.dim;
    ChernSeries s(dim);
    ChowClass pow = ChowClass::one(dim);
    for (int k = 0; k <= dim; ++k) {
      s.c[k] = (k % 2 == 0) ? pow : -pow;
      if (k < dim) pow = pow * d;
    }
    return s;
  }
};

inline ChernSeries tangent_chern(const ToricAmbient& amb) {
  ChernSeries s(amb.dim);
  s.c[0] = ChowClass::one(amb.dim);
  for (const auto& d : amb.coordinate_classes)
    s = s.mul(ChernSeries::line_bundle(d));
  return s;
}

struct CiChernResult {
  int64_t degree = 0;
  int64_t euler = 0;
  int64_t c2_dot_A = 0;
};

inline int64_t require_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1)
    throw std::domain_error(std::string(what) +
                            ": non-integral value (wrong evaluation pairs?)");
  BigInt n = numerator(q);
  return static_cast<int64_t>(n);
}

// Chern data of a complete intersection X of the given divisor classes:
// c_t(T_X) = c_t(T_amb) * prod (1 + C_i t)^{-1} truncated at t^3, with
// euler = [t^3 coefficient] . [X], degree = A^3 . [X], c2.A = [t^2] . A . [X].
inline CiChernResult ci_chern_and_euler(const ToricAmbient& amb,
                                        const std::vector<ChowClass>& classes) {
  if (amb.dim - static_cast<int>(classes.size()) != 3)
    throw std::invalid_argument("ci_chern_and_euler: X must be a threefold");
  ChernSeries cx = tangent_chern(amb);
  ChowClass xclass = ChowClass::one(amb.dim);
  for (const auto& C : classes) {
    cx = cx.mul(ChernSeries::line_bundle_inverse(C));
    xclass = xclass * C;
  }
  const ChowClass& A = amb.hyperplane;
  CiChernResult r;
  r.euler = require_integer(amb.evaluate(cx.c[3] * xclass), "euler");
  r.degree = require_integer(amb.evaluate(A * A * A * xclass), "degree");
  r.c2_dot_A = require_integer(amb.evaluate(cx.c[2] * A * xclass), "c2.A");
  return r;
}

// e(X) = 2 (h11 - h12) for a Calabi-Yau threefold
inline int64_t hodge_from_euler(int64_t euler, int64_t h11) {
  if (euler % 2 != 0) throw std::domain_error("hodge_from_euler: odd euler number");
  return h11 - euler / 2;
}

inline bool c2_consistency(int64_t degree, int64_t c2_dot_A) {
  return 2 * degree + c2_dot_A == 96;
}

// rank <= 1 degeneracy class of a 2 x 3 matrix with rows of the given
// divisor classes (Giambelli-Thom-Porteous: c1^2 - c2 of the virtual
// bundle, which for trivial source is r1^2 + r1 r2 + r2^2 here).
inline ChowClass porteous_rank1_class(const ChowClass& r1, const ChowClass& r2) {
  return r1 * r1 + r1 * r2 + r2 * r2;
}

} // namespace cy7
