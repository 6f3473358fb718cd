// Graded free resolutions by iterated Schreyer syzygies on module Groebner
// bases, with position-over-term induced orders. The raw resolution is
// generally non-minimal; minimize() Gauss-eliminates the degree-0 entries.
// predict_link_betti is the twist-bookkeeping mapping cone used by the
// linkage chains.
#pragma once

#include <iomanip>
#include <map>
#include <sstream>

#include "cy7/ideal.hpp"

namespace cy7 {

// ---------------------------------------------------------------------- //
// Betti tables

struct BettiTable {
  std::map<std::pair<int, int>, int64_t> entries; // (i, j) -> rank of O(-j)
  int length = 0;
  bool minimal = false;

  int64_t get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, int64_t v) {
    if (v == 0) return;
    entries[{i, j}] += v;
    if (entries[{i, j}] == 0) entries.erase({i, j});
    if (i > length) length = i;
  }
  int64_t rank_of_module(int i) const {
    int64_t r = 0;
    for (const auto& [ij, b] : entries)
      if (ij.first == i) r += b;
    return r;
  }
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  // entrywise comparison: every entry of *this at most the entry of o
  bool dominated_by(const BettiTable& o) const {
    for (const auto& [ij, b] : entries)
      if (b > o.get(ij.first, ij.second)) return false;
    return true;
  }

  // alternating sum over i of b_{i,j} t^j: equals the Hilbert numerator of
  // the resolved quotient when the complex is a resolution
  std::vector<int64_t> euler_numerator() const {
    int maxj = 0;
    for (const auto& [ij, b] : entries) maxj = std::max(maxj, ij.second);
    std::vector<int64_t> num(maxj + 1, 0);
    for (const auto& [ij, b] : entries) {
      int64_t s = (ij.first % 2 == 0) ? b : -b;
      num[ij.second] += s;
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return num;
  }
};

// Macaulay2-style diagram: rows j - i, columns i.
inline std::string pretty(const BettiTable& t) {
  int maxi = t.length, minrow = 0, maxrow = 0;
  for (const auto& [ij, b] : t.entries) {
    minrow = std::min(minrow, ij.second - ij.first);
    maxrow = std::max(maxrow, ij.second - ij.first);
  }
  std::ostringstream out;
  out << "       ";
  for (int i = 0; i <= maxi; ++i) out << std::setw(6) << i;
  out << "\n";
  for (int row = minrow; row <= maxrow; ++row) {
    out << std::setw(6) << row << ":";
    for (int i = 0; i <= maxi; ++i) {
      int64_t b = t.get(i, row + i);
      if (b)
        out << std::setw(6) << b;
      else
        out << std::setw(6) << ".";
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------- //
// Resolution data

// Map F_t -> F_{t-1}; column c is the image of the c-th basis vector of
// F_t in the basis of F_{t-1}. Entry (r,c) is homogeneous of degree
// col_twists[c] - row_twists[r] (or zero).
struct ResolutionStep {
  std::vector<int> row_twists, col_twists;
  std::vector<std::vector<Polynomial>> mat; // [row][col]

  int rows() const { return static_cast<int>(row_twists.size()); }
  int cols() const { return static_cast<int>(col_twists.size()); }
};

struct FreeResolution {
  RingPtr ring;
  std::vector<ResolutionStep> steps; // steps[0]: F_1 -> F_0 = R
  bool minimal = false;

  int length() const { return static_cast<int>(steps.size()); }

  BettiTable betti() const {
    BettiTable t;
    t.add(0, 0, 1);
    for (size_t s = 0; s < steps.size(); ++s)
      for (int tw : steps[s].col_twists) t.add(static_cast<int>(s) + 1, tw, 1);
    t.minimal = minimal;
    return t;
  }

  // consecutive products vanish (resolution invariant)
  bool products_vanish() const {
    for (size_t s = 0; s + 1 < steps.size(); ++s) {
      const auto& A = steps[s];
      const auto& B = steps[s + 1];
      for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) {
          Polynomial acc = Polynomial::zero(ring);
          for (int k = 0; k < A.cols(); ++k) {
            if (A.mat[i][k].is_zero() || B.mat[k][j].is_zero()) continue;
            acc = acc + A.mat[i][k] * B.mat[k][j];
          }
          if (!acc.is_zero()) return false;
        }
    }
    return true;
  }
};

// ---------------------------------------------------------------------- //
// Schreyer machinery

namespace detail {

struct ModTerm {
  Monomial m;
  int comp;
  fp_t c;
};

// Basis bookkeeping of one free module in the Schreyer tower.
struct Frame {
  std::vector<Monomial> wmono;          // accumulated ring monomial weight
  std::vector<std::vector<int>> chain;  // component chain, bottom level first
  std::vector<int> twist;
  int size() const { return static_cast<int>(wmono.size()); }
};

// Schreyer order: weighted ring order first, then the component chains
// bottom-up, higher index larger.
struct ModCmp {
  const Frame* frame;
  MonomialOrder ord;

  int compare(const ModTerm& a, const ModTerm& b) const {
    const Monomial& wa = frame->wmono[a.comp];
    const Monomial& wb = frame->wmono[b.comp];
    int da = a.m.deg + wa.deg, db = b.m.deg + wb.deg;
    if (da != db) return da > db ? 1 : -1;
    // grevlex on the products, computed in place
    for (int i = kMaxVars - 1; i >= 0; --i) {
      int ea = a.m.e[i] + wa.e[i], eb = b.m.e[i] + wb.e[i];
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    if (a.comp == b.comp) return 0;
    const auto& ca = frame->chain[a.comp];
    const auto& cb = frame->chain[b.comp];
    for (size_t k = 0; k < ca.size(); ++k)
      if (ca[k] != cb[k]) return ca[k] > cb[k] ? 1 : -1;
    return a.comp > b.comp ? 1 : -1;
  }
  bool greater(const ModTerm& a, const ModTerm& b) const {
    return compare(a, b) > 0;
  }
};

using ModVec = std::vector<ModTerm>; // strictly decreasing under ModCmp

inline ModVec modvec_normalize(std::vector<ModTerm> ts, const ModCmp& cmp,
                               const PrimeField& F) {
  std::sort(ts.begin(), ts.end(),
            [&](const ModTerm& a, const ModTerm& b) { return cmp.greater(a, b); });
  ModVec out;
  for (auto& t : ts) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return out;
}

// w += c * m * v (merge)
inline ModVec modvec_axpy(const ModVec& w, fp_t c, const Monomial& m,
                          const ModVec& v, const ModCmp& cmp,
                          const PrimeField& F, size_t skip_first = 0) {
  ModVec r;
  r.reserve(w.size() + v.size());
  size_t i = 0, j = skip_first;
  while (i < w.size() && j < v.size()) {
    ModTerm vt{v[j].m * m, v[j].comp, F.mul(c, v[j].c)};
    int cv = cmp.compare(w[i], vt);
    if (cv > 0) {
      r.push_back(w[i++]);
    } else if (cv < 0) {
      if (vt.c) r.push_back(vt);
      ++j;
    } else {
      fp_t cc = F.add(w[i].c, vt.c);
      if (cc) r.push_back({w[i].m, w[i].comp, cc});
      ++i;
      ++j;
    }
  }
  for (; i < w.size(); ++i) r.push_back(w[i]);
  for (; j < v.size(); ++j) {
    ModTerm vt{v[j].m * m, v[j].comp, F.mul(c, v[j].c)};
    if (vt.c) r.push_back(vt);
  }
  return r;
}

// minimal generators of the monomial colon (m_0..m_{k-1}) : m_k restricted
// to indices with matching component
inline std::vector<Monomial> colon_mingens(const std::vector<Monomial>& earlier,
                                           const Monomial& target) {
  std::vector<Monomial> quot;
  quot.reserve(earlier.size());
  for (const auto& e : earlier) quot.push_back(lcm(e, target) / target);
  minimalize_monomials(quot);
  // deterministic order
  std::sort(quot.begin(), quot.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return MonomialOrder::grevlex().less(a, b);
  });
  return quot;
}

} // namespace detail

// ---------------------------------------------------------------------- //
// free_resolution: Schreyer resolution of R/I from a reduced basis of I

inline FreeResolution free_resolution(const Ideal& I,
                                      const Budget& budget = Budget::unlimited()) {
  using namespace detail;
  FreeResolution res;
  res.ring = I.ring();
  const RingPtr& R = I.ring();
  const PrimeField& F = R->field;
  const MonomialOrder ord = R->order;
  const GroebnerBasis& gb = I.gb(budget);
  const auto& G = gb.gens;
  if (G.empty()) return res;

  // F_1 and the generator row
  Frame frame1;
  for (const auto& g : G) {
    frame1.wmono.push_back(g.lead_monomial());
    frame1.chain.push_back({});
    frame1.twist.push_back(g.degree());
  }
  ResolutionStep step1;
  step1.row_twists = {0};
  step1.col_twists = frame1.twist;
  step1.mat.resize(1);
  for (const auto& g : G) step1.mat[0].push_back(g);
  res.steps.push_back(std::move(step1));

  // level-1 syzygies: for each j, divide u * g_j with first divisor of
  // index < j; the recorded quotients give sigma = u e_j - sum h_k e_k
  ModCmp cmp1{&frame1, ord};
  std::vector<ModVec> sigmas;
  {
    std::vector<Monomial> leads;
    for (const auto& g : G) leads.push_back(g.lead_monomial());
    for (size_t j = 0; j < G.size(); ++j) {
      std::vector<Monomial> earlier(leads.begin(), leads.begin() + j);
      for (const auto& u : colon_mingens(earlier, leads[j])) {
        if (budget.expired(0)) throw BudgetExceeded(0, sigmas.size());
        // divide u*g_j by G, first step restricted
        std::vector<ModTerm> syz{{u, static_cast<int>(j), 1}};
        Geobucket work(R, ord);
        work.add(G[j].scaled_shift(1, u).terms());
        bool first = true;
        while (auto t = work.pop_lead()) {
          int pick = -1;
          size_t bound = first ? j : G.size();
          for (size_t k = 0; k < bound; ++k)
            if (G[k].lead_monomial().divides(t->m)) {
              pick = static_cast<int>(k);
              break;
            }
          if (pick < 0)
            throw std::logic_error("schreyer: irreducible lead in syzygy division");
          fp_t q = F.div(t->c, G[pick].lead_coeff());
          syz.push_back({t->m / G[pick].lead_monomial(), pick, F.neg(q)});
          work.add_scaled(F.neg(q), t->m / G[pick].lead_monomial(),
                          G[pick].terms(), 1);
          first = false;
        }
        sigmas.push_back(modvec_normalize(std::move(syz), cmp1, F));
      }
    }
  }

  // deterministic basis order for the next level
  auto sort_sigmas = [&](std::vector<ModVec>& ss, const ModCmp& cmp) {
    std::sort(ss.begin(), ss.end(), [&](const ModVec& a, const ModVec& b) {
      if (a.front().comp != b.front().comp)
        return a.front().comp < b.front().comp;
      if (int c = cmp.ord.compare(a.front().m, b.front().m)) return c < 0;
      return false;
    });
  };
  sort_sigmas(sigmas, cmp1);

  // iterate levels
  const Frame* prev_frame_ptr;
  std::vector<Frame> frames;
  frames.reserve(kMaxVars + 2);
  frames.push_back(std::move(frame1));
  prev_frame_ptr = &frames.back();

  while (!sigmas.empty()) {
    const Frame& prev = *prev_frame_ptr;
    ModCmp pcmp{&prev, ord};

    // matrix of this step
    ResolutionStep step;
    step.row_twists = prev.twist;
    Frame frame;
    for (const auto& s : sigmas) {
      const ModTerm& lt = s.front();
      frame.wmono.push_back(lt.m * prev.wmono[lt.comp]);
      std::vector<int> ch = prev.chain[lt.comp];
      ch.push_back(lt.comp);
      frame.chain.push_back(std::move(ch));
      frame.twist.push_back(lt.m.deg + prev.twist[lt.comp]);
    }
    step.col_twists = frame.twist;
    step.mat.assign(prev.size(), std::vector<Polynomial>(
                                     sigmas.size(), Polynomial::zero(R, ord)));
    for (size_t c = 0; c < sigmas.size(); ++c) {
      std::map<int, std::vector<Term>> per_row;
      for (const auto& t : sigmas[c]) per_row[t.comp].push_back({t.m, t.c});
      for (auto& [r, ts] : per_row)
        step.mat[r][c] = Polynomial::from_terms(R, ord, std::move(ts));
    }
    res.steps.push_back(std::move(step));
    if (static_cast<int>(res.steps.size()) > R->nvars() + 1)
      throw std::logic_error("schreyer: resolution exceeds the syzygy bound");

    // syzygies of sigmas
    std::vector<ModVec> next;
    for (size_t m = 0; m < sigmas.size(); ++m) {
      if (budget.expired(0)) throw BudgetExceeded(0, next.size());
      std::vector<Monomial> earlier;
      for (size_t k = 0; k < m; ++k)
        if (sigmas[k].front().comp == sigmas[m].front().comp)
          earlier.push_back(sigmas[k].front().m);
      ModCmp fcmp{&frame, ord};
      for (const auto& u : colon_mingens(earlier, sigmas[m].front().m)) {
        std::vector<ModTerm> syz{{u, static_cast<int>(m), 1}};
        ModVec work;
        for (const auto& t : sigmas[m])
          work.push_back({t.m * u, t.comp, t.c});
        bool first = true;
        while (!work.empty()) {
          const ModTerm lt = work.front();
          int pick = -1;
          size_t bound = first ? m : sigmas.size();
          for (size_t k = 0; k < bound; ++k) {
            const ModTerm& kl = sigmas[k].front();
            if (kl.comp == lt.comp && kl.m.divides(lt.m)) {
              pick = static_cast<int>(k);
              break;
            }
          }
          if (pick < 0)
            throw std::logic_error("schreyer: irreducible lead in module division");
          fp_t q = F.div(lt.c, sigmas[pick].front().c);
          Monomial qm = lt.m / sigmas[pick].front().m;
          syz.push_back({qm, pick, F.neg(q)});
          work = modvec_axpy(work, F.neg(q), qm, sigmas[pick], pcmp, F, 0);
          first = false;
        }
        next.push_back(modvec_normalize(std::move(syz), fcmp, F));
      }
    }
    frames.push_back(std::move(frame));
    prev_frame_ptr = &frames.back();
    ModCmp ncmp{prev_frame_ptr, ord};
    sort_sigmas(next, ncmp);
    sigmas = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------------- //
// minimization: Gauss-eliminate unit (degree-0) entries in place

inline void minimize(FreeResolution& res) {
  const PrimeField& F = res.ring->field;
  auto is_unit = [&](const ResolutionStep& s, int r, int c) {
    return s.row_twists[r] == s.col_twists[c] && !s.mat[r][c].is_zero();
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t < res.steps.size(); ++t) {
      ResolutionStep& M = res.steps[t];
      // find a pivot
      int pr = -1, pc = -1;
      for (int r = 0; r < M.rows() && pr < 0; ++r)
        for (int c = 0; c < M.cols(); ++c)
          if (is_unit(M, r, c)) {
            pr = r;
            pc = c;
            break;
          }
      if (pr < 0) continue;
      changed = true;
      fp_t u = M.mat[pr][pc].lead_coeff();

      // row updates on the next step: row_pc += (lambda_j / u) * row_j
      if (t + 1 < res.steps.size()) {
        ResolutionStep& N = res.steps[t + 1];
        for (int j = 0; j < M.cols(); ++j) {
          if (j == pc || M.mat[pr][j].is_zero()) continue;
          Polynomial lam = M.mat[pr][j] * F.inv(u);
          for (int x = 0; x < N.cols(); ++x) {
            if (N.mat[j][x].is_zero()) continue;
            N.mat[pc][x] = N.mat[pc][x] + lam * N.mat[j][x];
          }
        }
      }
      // Schur complement update on M
      for (int i = 0; i < M.rows(); ++i) {
        if (i == pr || M.mat[i][pc].is_zero()) continue;
        Polynomial mu = M.mat[i][pc] * F.inv(u);
        for (int j = 0; j < M.cols(); ++j) {
          if (j == pc || M.mat[pr][j].is_zero()) continue;
          M.mat[i][j] = M.mat[i][j] - mu * M.mat[pr][j];
        }
      }
      // drop row pr / col pc of M, col pr of previous, row pc of next
      auto drop_col = [](ResolutionStep& s, int c) {
        s.col_twists.erase(s.col_twists.begin() + c);
        for (auto& row : s.mat) row.erase(row.begin() + c);
      };
      auto drop_row = [](ResolutionStep& s, int r) {
        s.row_twists.erase(s.row_twists.begin() + r);
        s.mat.erase(s.mat.begin() + r);
      };
      if (t == 0)
        throw std::logic_error("minimize: unit entry in the generator row");
      drop_col(res.steps[t - 1], pr);
      drop_row(M, pr);
      drop_col(M, pc);
      if (t + 1 < res.steps.size()) drop_row(res.steps[t + 1], pc);
    }
    // drop empty trailing steps
    while (!res.steps.empty() && res.steps.back().cols() == 0)
      res.steps.pop_back();
  }
  res.minimal = true;
}

inline BettiTable minimal_betti(const Ideal& I,
                                const Budget& budget = Budget::unlimited()) {
  FreeResolution r = free_resolution(I, budget);
  minimize(r);
  return r.betti();
}

// ---------------------------------------------------------------------- //
// mapping-cone Betti prediction for linkage (pure twist bookkeeping)

struct TwistMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Koszul Betti table of a complete intersection with the given degrees
inline BettiTable koszul_table(const std::vector<int>& degrees) {
  BettiTable t;
  int c = static_cast<int>(degrees.size());
  for (int mask = 0; mask < (1 << c); ++mask) {
    int i = 0, j = 0;
    for (int k = 0; k < c; ++k)
      if (mask & (1 << k)) {
        ++i;
        j += degrees[k];
      }
    t.add(i, j, 1);
  }
  t.minimal = true;
  return t;
}

// Betti table of the residual's quotient ring under linkage through a
// complete intersection of the given degrees: dualize `sub`, twist by the
// total, splice with the dualized Koszul table. Input and output tables
// resolve quotient rings (entry (0,0) = 1).
inline BettiTable predict_link_betti(const BettiTable& sub,
                                     const std::vector<int>& ci_degrees,
                                     int total_twist) {
  int s = 0;
  for (int d : ci_degrees) s += d;
  if (s != total_twist)
    throw TwistMismatch("predict_link_betti: total twist " +
                        std::to_string(total_twist) +
                        " does not match the degree sum " + std::to_string(s));
  const int c = static_cast<int>(ci_degrees.size());
  if (sub.length > c)
    throw TwistMismatch("predict_link_betti: subvariety table longer than codim");
  BettiTable K = koszul_table(ci_degrees);
  BettiTable out;
  out.add(0, 0, 1);
  for (int i = 1; i <= c; ++i) {
    // Koszul part K*_{c-i}(-s), dropped at i = c (it cancels F*_0)
    if (i < c)
      for (const auto& [ij, b] : K.entries)
        if (ij.first == c - i) out.add(i, s - ij.second, b);
    // dual of the subvariety resolution, F*_{c-i+1}(-s)
    for (const auto& [ij, b] : sub.entries)
      if (ij.first == c - i + 1) out.add(i, s - ij.second, b);
  }
  out.minimal = false;
  return out;
}

// ---------------------------------------------------------------------- //
// Gorenstein / Calabi-Yau certification from a minimal table

struct CertifyResult {
  bool is_aG = false;
  int socle_twist = -1;
  bool is_CY_twist = false;
};

// codimension-4 threefold criterion: length 4, rank-1 last module; the
// Calabi-Yau twist asks for socle O(-8) and the b_{i,j} = b_{4-i,8-j}
// symmetry
inline CertifyResult certify_aG_CY(const BettiTable& t) {
  CertifyResult r;
  if (t.get(0, 0) != 1 || t.length != 4) return r;
  int64_t last = t.rank_of_module(4);
  if (last != 1) return r;
  r.is_aG = true;
  for (const auto& [ij, b] : t.entries)
    if (ij.first == 4) r.socle_twist = ij.second;
  if (r.socle_twist == 8) {
    bool sym = true;
    for (const auto& [ij, b] : t.entries)
      if (b != t.get(4 - ij.first, 8 - ij.second)) sym = false;
    r.is_CY_twist = sym;
  }
  return r;
}

// general socle check used for the Pfaffian ambients (codim 3)
inline bool is_aG_of_codim(const BettiTable& t, int codim) {
  return t.get(0, 0) == 1 && t.length == codim && t.rank_of_module(codim) == 1;
}

} // namespace cy7
