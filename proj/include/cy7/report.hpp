// The verification pipeline: run the per-family checks against the
// expected-invariant record and produce a reproducible report.
#pragma once

#include <future>

#include "cy7/cremona.hpp"
#include "cy7/json_io.hpp"
#include "cy7/toric.hpp"

namespace cy7 {

inline const char* kToolVersion = "cy7 0.1.0";

enum class CheckStatus { pass, fail, skipped, unverified };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::unverified: return "unverified";
  }
  return "?";
}

struct CheckResult {
  CheckStatus status = CheckStatus::skipped;
  std::string details;
  double seconds = 0;
};

struct VerificationReport {
  int family = 0;
  uint64_t seed = 0;
  uint32_t characteristic = 0;
  std::string version = kToolVersion;
  // fixed check order for stable output
  std::vector<std::pair<std::string, CheckResult>> checks;

  CheckResult* find(const std::string& name) {
    for (auto& [k, v] : checks)
      if (k == name) return &v;
    return nullptr;
  }
  bool any(CheckStatus s) const {
    for (const auto& [k, v] : checks)
      if (v.status == s) return true;
    return false;
  }
  // pass iff every non-skipped check passes
  bool overall() const {
    for (const auto& [k, v] : checks)
      if (v.status == CheckStatus::fail || v.status == CheckStatus::unverified)
        return false;
    return true;
  }
  // 0 pass, 1 fail, 3 budget/unverified
  int exit_code() const {
    if (any(CheckStatus::fail)) return 1;
    if (any(CheckStatus::unverified)) return 3;
    return 0;
  }
};

inline json report_to_json(const VerificationReport& r) {
  json j;
  j["family"] = r.family;
  j["seed"] = r.seed;
  j["char"] = r.characteristic;
  j["version"] = r.version;
  json checks;
  for (const auto& [name, res] : r.checks) {
    json c;
    c["status"] = status_name(res.status);
    c["details"] = res.details;
    c["seconds"] = res.seconds;
    checks[name] = c;
  }
  j["checks"] = checks;
  j["overall"] = r.overall() ? "pass" : "fail";
  return j;
}

namespace detail {

template <typename Fn>
CheckResult timed_check(const Budget& budget, Fn&& fn) {
  CheckResult r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const BudgetExceeded& e) {
    r.status = CheckStatus::unverified;
    r.details = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.details = e.what();
  }
  (void)budget;
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

} // namespace detail

// toric Hodge data is available for the two hypersurface/CI-in-toric
// families only
inline bool hodge_supported(int family) { return family == 1 || family == 6; }

struct HodgeResult {
  int64_t euler = 0, degree = 0, c2A = 0, h12 = 0;
  int h11 = 0;
  bool consistent = false;
};

inline HodgeResult toric_hodge(int family) {
  HodgeResult h;
  if (family == 1) {
    auto amb = ToricAmbient::product_p1_p3();
    auto r = ci_chern_and_euler(amb, {ChowClass::divisor(4, 2, 4)});
    h.euler = r.euler;
    h.degree = r.degree;
    h.c2A = r.c2_dot_A;
  } else if (family == 6) {
    auto amb = ToricAmbient::scroll_sixfold();
    auto r = ci_chern_and_euler(amb, {ChowClass::divisor(6, 0, 2),
                                      ChowClass::divisor(6, 0, 2),
                                      ChowClass::divisor(6, -2, 3)});
    h.euler = r.euler;
    h.degree = r.degree;
    h.c2A = r.c2_dot_A;
  } else {
    throw std::invalid_argument("toric hodge data only for families 1 and 6");
  }
  h.h11 = expected_family(family).expected_h11;
  h.h12 = hodge_from_euler(h.euler, h.h11);
  h.consistent = c2_consistency(h.degree, h.c2A);
  return h;
}

// Available checks: dimension, degree, hilbert_rr, betti, aG_symmetry,
// cy_twist, smoothness, hodge.
inline std::vector<std::string> default_checks() {
  return {"dimension", "degree", "hilbert_rr", "betti",
          "aG_symmetry", "cy_twist", "smoothness", "hodge"};
}

inline VerificationReport run_verification(const FamilyInstance& fi,
                                           std::vector<std::string> which = {},
                                           double budget_seconds = 600,
                                           int workers = 1) {
  if (which.empty()) which = default_checks();
  const FamilySpec& spec = expected_family(fi.id);
  VerificationReport rep;
  rep.family = fi.id;
  rep.seed = fi.seed;
  rep.characteristic = fi.characteristic;

  auto wanted = [&](const std::string& name) {
    return std::find(which.begin(), which.end(), name) != which.end();
  };

  const Ideal& I = fi.ideal;

  auto check_dimension = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    int d = I.dimension(b);
    r.status = d == 3 ? CheckStatus::pass : CheckStatus::fail;
    r.details = "projective dimension " + std::to_string(d);
  };
  auto check_degree = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    int64_t d = I.degree(b);
    r.status = d == spec.expected_degree ? CheckStatus::pass : CheckStatus::fail;
    r.details = "degree " + std::to_string(d) + ", expected " +
                std::to_string(spec.expected_degree);
  };
  auto check_hilbert_rr = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    r.status = CheckStatus::pass;
    for (int m = 1; m <= 4; ++m) {
      int64_t hf = I.hilbert_function(m, b);
      int64_t want = rr_expected_h0(spec.expected_degree, m);
      if (m > 1) r.details += ", ";
      r.details += "h^0(" + std::to_string(m) + "A) = " + std::to_string(hf);
      if (hf != want) {
        r.status = CheckStatus::fail;
        r.details += " (expected " + std::to_string(want) + ")";
      }
    }
  };

  // the three resolution-based checks share one minimal table
  std::optional<BettiTable> table;
  auto betti_table = [&](const Budget& b) -> const BettiTable& {
    if (!table) table = minimal_betti(I, b);
    return *table;
  };
  auto check_betti = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    const BettiTable& t = betti_table(b);
    // resolution sanity: Euler characteristic against the Hilbert numerator
    if (t.euler_numerator() != I.hilbert(b).numerator) {
      r.status = CheckStatus::fail;
      r.details = "resolution Euler characteristic mismatch";
      return;
    }
    if (spec.expected_betti) {
      bool eq = t == *spec.expected_betti;
      r.status = eq ? CheckStatus::pass : CheckStatus::fail;
      r.details = eq ? "matches the reference table exactly"
                     : "differs from the reference table";
    } else {
      r.status = CheckStatus::pass;
      r.details = "no reference table; resolution consistent";
    }
    r.details += "; length " + std::to_string(t.length);
  };
  auto check_aG = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    auto cert = certify_aG_CY(betti_table(b));
    r.status = cert.is_aG ? CheckStatus::pass : CheckStatus::fail;
    r.details = cert.is_aG ? "length 4, rank-1 socle, symmetric"
                           : "not arithmetically Gorenstein";
  };
  auto check_cy = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    auto cert = certify_aG_CY(betti_table(b));
    r.status = (cert.is_aG && cert.socle_twist == 8 && cert.is_CY_twist)
                   ? CheckStatus::pass
                   : CheckStatus::fail;
    r.details = "socle twist " + std::to_string(cert.socle_twist);
  };
  auto check_smoothness = [&](CheckResult& r) {
    Budget b = Budget::seconds(budget_seconds);
    auto sl = smoothness_check(I, 4, fi.seed * 2 + 1, b);
    if (sl.exhausted_budget) {
      r.status = CheckStatus::unverified;
      r.details = "budget exhausted after " + std::to_string(sl.minors_used) +
                  " minors; dimension reached " +
                  std::to_string(sl.projective_dimension);
      return;
    }
    r.status = sl.projective_dimension == -1 ? CheckStatus::pass
                                             : CheckStatus::fail;
    r.details = sl.projective_dimension == -1
                    ? "empty singular locus over F_p at this seed (" +
                          std::to_string(sl.minors_used) + " minors)"
                    : "singular locus of dimension " +
                          std::to_string(sl.projective_dimension);
  };
  auto check_hodge = [&](CheckResult& r) {
    if (!hodge_supported(fi.id)) {
      r.status = CheckStatus::skipped;
      r.details = "toric ambient data available for families 1 and 6 only";
      return;
    }
    HodgeResult h = toric_hodge(fi.id);
    bool ok = h.degree == spec.expected_degree &&
              h.h12 == spec.expected_h12 && h.consistent;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.details = "euler " + std::to_string(h.euler) + ", h12 " +
                std::to_string(h.h12) + ", c2.A " + std::to_string(h.c2A);
  };

  // independent long checks may run concurrently
  std::future<CheckResult> fut_smooth;
  bool smooth_async = wanted("smoothness") && workers > 1;
  Budget outer = Budget::seconds(budget_seconds);
  if (smooth_async)
    fut_smooth = std::async(std::launch::async, [&] {
      return detail::timed_check(outer, check_smoothness);
    });

  for (const auto& name : which) {
    CheckResult res;
    if (name == "dimension") res = detail::timed_check(outer, check_dimension);
    else if (name == "degree") res = detail::timed_check(outer, check_degree);
    else if (name == "hilbert_rr") res = detail::timed_check(outer, check_hilbert_rr);
    else if (name == "betti") res = detail::timed_check(outer, check_betti);
    else if (name == "aG_symmetry") res = detail::timed_check(outer, check_aG);
    else if (name == "cy_twist") res = detail::timed_check(outer, check_cy);
    else if (name == "smoothness") {
      if (smooth_async) continue; // collected below
      res = detail::timed_check(outer, check_smoothness);
    } else if (name == "hodge") res = detail::timed_check(outer, check_hodge);
    else {
      res.status = CheckStatus::fail;
      res.details = "unknown check name";
    }
    rep.checks.emplace_back(name, std::move(res));
  }
  if (smooth_async) rep.checks.emplace_back("smoothness", fut_smooth.get());
  return rep;
}

} // namespace cy7
