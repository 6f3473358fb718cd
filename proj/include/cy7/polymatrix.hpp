// Small dense matrices of polynomials: determinants, minors, Pfaffians,
// adjugates. Sizes stay tiny (at most 5x5), so subset-recursion is plenty.
#pragma once

#include "cy7/polynomial.hpp"

namespace cy7 {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline Polynomial determinant(const PolyMatrix& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  RingPtr R = m[0][0].ring();
  MonomialOrder ord = m[0][0].order();
  // dp over column subsets: minors of the top rows
  std::vector<Polynomial> cur(1, Polynomial::constant(R, 1));
  std::vector<std::vector<int>> subsets{{}};
  for (size_t row = 0; row < n; ++row) {
    std::vector<std::vector<int>> nsubsets;
    std::vector<Polynomial> nxt;
    // enumerate subsets of size row+1 deterministically
    std::vector<int> idx(row + 1);
    std::function<void(size_t, int)> rec = [&](size_t pos, int start) {
      if (pos == row + 1) {
        // expand along the last row of the submatrix
        Polynomial acc = Polynomial::zero(R, ord);
        for (size_t k = 0; k <= row; ++k) {
          // previous subset: idx minus idx[k]
          std::vector<int> sub;
          for (size_t q = 0; q <= row; ++q)
            if (q != k) sub.push_back(idx[q]);
          // locate sub among subsets (ordered enumeration matches)
          size_t lo = 0;
          for (; lo < subsets.size(); ++lo)
            if (subsets[lo] == sub) break;
          const Polynomial& minor = cur[lo];
          if (minor.is_zero() || m[row][idx[k]].is_zero()) continue;
          Polynomial term = minor * m[row][idx[k]];
          acc = ((row + k) % 2 == 0) ? acc + term : acc - term;
        }
        nsubsets.push_back(idx);
        nxt.push_back(acc);
        return;
      }
      for (int c = start; c < static_cast<int>(n); ++c) {
        idx[pos] = c;
        rec(pos + 1, c + 1);
      }
    };
    rec(0, 0);
    subsets = std::move(nsubsets);
    cur = std::move(nxt);
  }
  return cur[0];
}

inline PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  PolyMatrix s(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c : cols) s[i].push_back(m[rows[i]][c]);
  return s;
}

// all k-subsets of {0..n-1} in lexicographic order
inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      out.push_back(idx);
      return;
    }
    for (int c = start; c < n; ++c) {
      idx[pos] = c;
      rec(pos + 1, c + 1);
    }
  };
  rec(0, 0);
  return out;
}

// every k x k minor, rows-major deterministic order
inline std::vector<Polynomial> all_minors(const PolyMatrix& m, int k) {
  std::vector<Polynomial> out;
  int nr = static_cast<int>(m.size());
  int nc = static_cast<int>(m[0].size());
  for (const auto& rows : subsets_of_size(nr, k))
    for (const auto& cols : subsets_of_size(nc, k))
      out.push_back(determinant(submatrix(m, rows, cols)));
  return out;
}

// adjugate (transpose of the signed cofactor matrix) of a square matrix
inline PolyMatrix adjugate(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  RingPtr R = m[0][0].ring();
  PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial::zero(R)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      Polynomial cof = determinant(submatrix(m, rows, cols));
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = cof; // transpose
    }
  return adj;
}

// Pfaffian of a skew-symmetric matrix given by its strict upper triangle;
// recursion over the first row with alternating signs.
inline Polynomial pfaffian_upper(const PolyMatrix& a,
                                 const std::vector<int>& rows) {
  RingPtr R;
  for (const auto& row : a)
    for (const auto& e : row)
      if (e.ring()) {
        R = e.ring();
        break;
      }
  std::function<Polynomial(std::vector<int>)> rec =
      [&](std::vector<int> rs) -> Polynomial {
    if (rs.empty()) return Polynomial::constant(R, 1);
    Polynomial acc = Polynomial::zero(R);
    int i = rs[0];
    for (size_t k = 1; k < rs.size(); ++k) {
      int j = rs[k];
      std::vector<int> rest;
      for (size_t q = 1; q < rs.size(); ++q)
        if (q != k) rest.push_back(rs[q]);
      const Polynomial& aij = i < j ? a[i][j] : a[j][i];
      if (aij.is_zero()) continue;
      Polynomial term = aij * rec(rest);
      acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rows);
}

// the 2u x 2u Pfaffians of a (2u+1) x (2u+1) skew matrix: delete row/col k
inline std::vector<Polynomial> submaximal_pfaffians(const PolyMatrix& upper) {
  const int n = static_cast<int>(upper.size());
  std::vector<Polynomial> out;
  for (int k = 0; k < n; ++k) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != k) rows.push_back(r);
    out.push_back(pfaffian_upper(upper, rows));
  }
  return out;
}

} // namespace cy7
