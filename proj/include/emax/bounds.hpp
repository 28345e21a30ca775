#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "emax/error.hpp"
#include "emax/log2_linear.hpp"
#include "emax/rational.hpp"

namespace emax {

enum class SurfaceKind { nonorientable, orientable };

inline const char* to_string(SurfaceKind k) {
  return k == SurfaceKind::nonorientable ? "nonorientable" : "orientable";
}

/// N<g> or S<g/2>.
inline std::string surface_name(int g, SurfaceKind k) {
  return k == SurfaceKind::nonorientable ? "N" + std::to_string(g) : "S" + std::to_string(g / 2);
}

/// 2g + 3s - 4.
inline long f_lower(int g, int s) {
  if (g < 0 || s < 2) throw InputError("f_lower needs g >= 0 and s >= 2");
  return 2L * g + 3L * s - 4;
}

inline int f_exact_s2(int g) {
  if (g < 0) throw InputError("f_exact_s2 needs g >= 0");
  return g == 0 ? 3 : 2 * g + 2;
}

/// First branch of the recurrence: 2c/(c-6) (g-2).
inline Rational heavy_branch(int g, int c) { return Rational(2 * c, c - 6) * (g - 2); }

inline Rational recurrence_step(int g, int c, const Rational& f_prev) {
  if (c < 7) throw InputError("recurrence_step needs c >= 7, got " + std::to_string(c));
  return std::max(heavy_branch(g, c), Rational(2 * c - 3 + f_prev));
}

struct Schedule {
  int g = 0;
  std::vector<int> c;       // c[s - 3] for s = 3..s_max
  std::vector<Rational> f;  // f[s - 2] for s = 2..s_max

  int s_max() const { return static_cast<int>(f.size()) + 1; }
  int c_at(int s) const { return c.at(s - 3); }
  const Rational& f_at(int s) const { return f.at(s - 2); }
};

/// Minimising c at each level, ties to the smaller c. The heavy branch falls
/// and the light branch rises in c, so the scan stops at their crossing.
inline Schedule optimal_schedule(int g, int s_max, const Rational& f2) {
  if (g < 1 || s_max < 2) throw InputError("optimal_schedule needs g >= 1 and s_max >= 2");
  Schedule out;
  out.g = g;
  out.f.push_back(f2);
  const int c_cap = 6 + 14 * std::max(1, g);
  for (int s = 3; s <= s_max; ++s) {
    const Rational& prev = out.f.back();
    std::optional<Rational> best;
    int best_c = 7;
    for (int c = 7; c <= c_cap; ++c) {
      const Rational heavy = heavy_branch(g, c);
      const Rational light = 2 * c - 3 + prev;
      const Rational value = std::max(heavy, light);
      if (!best || value < *best) {
        best = value;
        best_c = c;
      }
      if (heavy <= light) break;
    }
    out.c.push_back(best_c);
    out.f.push_back(*best);
  }
  return out;
}

inline Schedule optimal_schedule(int g, int s_max) { return optimal_schedule(g, s_max, f_exact_s2(g)); }

/// (2c-3)(s-2) + max{2c/(c-6)(g-2), 2c-3}.
inline Rational f_closed_form(int g, int s, int c) {
  if (c < 7 || s < 1) throw InputError("f_closed_form needs c >= 7 and s >= 1");
  return Rational((2 * c - 3) * (s - 2)) + std::max(heavy_branch(g, c), Rational(2 * c - 3));
}

inline int impurity_factor(SurfaceKind k) { return k == SurfaceKind::nonorientable ? 5 : 4; }

inline void check_surface(int g, SurfaceKind k) {
  if (g < 1) throw InputError("g must be at least 1");
  if (k == SurfaceKind::orientable && g % 2 != 0) throw InputError("orientable surfaces have even Euler genus");
}

struct BoundsTableRow {
  int g = 0;
  SurfaceKind surface = SurfaceKind::nonorientable;
  std::vector<int> c_schedule;  // c_3..c_{g+1}
  std::vector<Rational> f_values;  // f'(2)..f'(g+1)
  bool f_integral = true;          // every f' value is an integer
  long impurity = 0;
  long edge_bound_offset = 0;      // X in |E| >= 3n - X
};

/// Impurity uses floor(f'(g+1)): f_g(g+1) is an integer bounded by f'.
inline BoundsTableRow bounds_row(int g, SurfaceKind k, const Rational& f2) {
  check_surface(g, k);
  Schedule s = optimal_schedule(g, g + 1, f2);
  BoundsTableRow row;
  row.g = g;
  row.surface = k;
  row.c_schedule = std::move(s.c);
  row.f_values = std::move(s.f);
  row.f_integral = std::all_of(row.f_values.begin(), row.f_values.end(), [](const Rational& x) { return is_integer(x); });
  row.impurity = impurity_factor(k) * floor(row.f_values.back()).convert_to<long>() - 1;
  row.edge_bound_offset = row.impurity - 3L * (g - 2);
  return row;
}

inline BoundsTableRow bounds_row(int g, SurfaceKind k) { return bounds_row(g, k, f_exact_s2(g)); }

inline long impurity_bound(int g, SurfaceKind k) { return bounds_row(g, k).impurity; }

/// Rows for g in [g_min, g_max]; orientable tables take the even g only.
inline std::vector<BoundsTableRow> generate_table(SurfaceKind k, int g_min, int g_max) {
  if (g_min < 1 || g_max < g_min) throw InputError("invalid genus range");
  std::vector<BoundsTableRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    if (k == SurfaceKind::orientable && g % 2 != 0) continue;
    rows.push_back(bounds_row(g, k));
  }
  return rows;
}

inline std::string join_schedule(const std::vector<int>& c, char sep) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(c[i]);
  return out;
}

inline void write_table_csv(std::ostream& out, const std::vector<BoundsTableRow>& rows) {
  out << "g,surface,schedule,impurity,edge_bound_offset\n";
  for (const auto& r : rows) {
    out << r.g << ',' << surface_name(r.g, r.surface) << ',' << join_schedule(r.c_schedule, ';') << ','
        << r.impurity << ',' << r.edge_bound_offset << '\n';
  }
}

// ---------------------------------------------------------------------------
// Analytic schedule

/// 12 / ((j-7)(j-6)(2j-3)), the j-th series term (j >= 8).
inline Rational alpha_term(int j) { return Rational(12, (j - 7) * (j - 6) * (2 * j - 3)); }

/// alpha_7 = 48332/114345 + (16/33) ln 2.
inline Log2Linear alpha7() { return {Rational(48332, 114345), Rational(16, 33)}; }

/// lambda = 25 - 11 alpha_7.
inline Log2Linear lambda_constant() { return Log2Linear(25) - Rational(11) * alpha7(); }

inline Log2Linear alpha(int i) {
  if (i < 7) throw InputError("alpha_i needs i >= 7");
  Log2Linear a = alpha7();
  for (int j = 8; j <= i; ++j) a.a -= alpha_term(j);
  return a;
}

/// Least r >= 0 with r^2 >= 3(g-2)/2.
inline long ceil_sqrt_three_halves(int g) {
  const long t = 3L * (g - 2);
  long r = 0;
  while (2 * r * r < t) ++r;
  return r;
}

struct AnalyticContext {
  int g = 0;
  int precision_bits = 256;
  Log2Linear lambda;
  int k = 7;
  int top = 7;                          // largest index with a beta value
  std::map<int, Log2Linear> alpha;      // i in [7, k]
  std::map<int, long> beta;             // i in [7, top]
  std::map<int, Log2Linear> gamma;      // i in [7, k]
  std::map<int, long> ell;              // i in [7, top]
  std::map<int, Log2Linear> E;          // i with ell_i > 0
  std::map<int, int> c_of_s;            // analytic c_s for s in [2, g+1]
  long k_bound = 0;                     // ceil(sqrt(3/2 (g-2))) + 7

  bool beta_k_is_two() const { return beta.at(k) == 2; }
  bool k_within_bound() const { return k <= k_bound; }
  bool e7_within_bound() const {
    auto it = E.find(7);
    return it == E.end() || less_equal(it->second, Log2Linear(2 * k - 3), precision_bits, "E_7 <= 2k-3");
  }
  const Log2Linear& E_at(int i) const {
    static const Log2Linear zero;
    auto it = E.find(i);
    return it == E.end() ? zero : it->second;
  }
};

inline AnalyticContext analytic_context(int g, int precision_bits = default_precision_bits()) {
  if (g < 2) throw InputError("analytic_context needs g >= 2");
  AnalyticContext ctx;
  ctx.g = g;
  ctx.precision_bits = precision_bits;
  ctx.lambda = lambda_constant();
  ctx.k_bound = ceil_sqrt_three_halves(g) + 7;
  const Rational x = g - 2;

  Log2Linear a = alpha7();
  for (int i = 7;; ++i) {
    if (i > 7) a.a -= alpha_term(i);
    ctx.alpha[i] = a;
    const Log2Linear ax = x * a;
    ctx.beta[i] = ceil(ax, precision_bits, "ceil(alpha_i (g-2)) for i=" + std::to_string(i)).convert_to<long>();
    ctx.gamma[i] = Log2Linear(Rational(ctx.beta[i])) - ax;
    if (less_equal(ax, Log2Linear(2), precision_bits, "alpha_i (g-2) <= 2 for i=" + std::to_string(i))) {
      ctx.k = i;
      break;
    }
  }
  // Between k and 2g+2 the lists are empty, so beta stays at 2; beta_{2g+2} = 1.
  ctx.top = std::max(ctx.k, 2 * g + 2);
  for (int i = ctx.k + 1; i < 2 * g + 2; ++i) ctx.beta[i] = 2;
  if (2 * g + 2 > ctx.k) ctx.beta[2 * g + 2] = 1;

  ctx.ell[7] = g + 1 - ctx.beta[7];
  for (int i = 8; i <= ctx.top; ++i) ctx.ell[i] = ctx.beta[i - 1] - ctx.beta[i];

  // c_s: L_i = [beta_i + 1, beta_{i-1}] (L_7 ends at g+1), larger i wins on overlap.
  for (int i = 7; i <= ctx.top; ++i) {
    const long lo = std::max<long>(ctx.beta[i] + 1, 2);
    const long hi = i == 7 ? g + 1 : ctx.beta[i - 1];
    for (long s = lo; s <= std::min<long>(hi, g + 1); ++s) ctx.c_of_s[static_cast<int>(s)] = i;
  }

  ctx.E[ctx.k] = Log2Linear();
  if (2 * g + 2 > ctx.k) ctx.E[2 * g + 2] = Log2Linear();
  for (int i = ctx.k - 1; i >= 7; --i) {
    if (ctx.ell[i] <= 0) continue;
    int next = i + 1;
    while (ctx.ell[next] <= 0) ++next;
    Log2Linear sum;
    for (int j = i + 1; j < next; ++j) sum += Rational(2) * ctx.gamma[j];
    sum += Rational(2 * i - 1) * ctx.gamma[i];
    sum -= Rational(2 * next - 3) * ctx.gamma.at(next);
    sum += ctx.E_at(next);
    ctx.E[i] = sign(sum, precision_bits, "E_" + std::to_string(i)) > 0 ? sum : Log2Linear();
  }
  return ctx;
}

/// lambda (g-2) + 2 ceil(sqrt(3/2 (g-2))) + 33.
inline Log2Linear analytic_upper_bound(int g) {
  if (g < 2) throw InputError("analytic_upper_bound needs g >= 2");
  return Rational(g - 2) * lambda_constant() + Log2Linear(Rational(2 * ceil_sqrt_three_halves(g) + 33));
}

struct Claim1Failure {
  int s = 0;
  Rational f;
  Log2Linear rhs;
};

struct Claim1Report {
  int g = 0;
  std::vector<Rational> f;  // f'(2..g+1) under the analytic schedule
  std::vector<Claim1Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Recomputes f' with c_s = i for s in L_i and checks
/// f'(beta_i + z) <= 2i/(i-6) (g-2) + (z-1)(2i-3) + E_i for every s.
inline Claim1Report claim1_consistency(const AnalyticContext& ctx) {
  const int g = ctx.g;
  Claim1Report rep;
  rep.g = g;
  rep.f.push_back(2 * g + 2);
  for (int s = 3; s <= g + 1; ++s) rep.f.push_back(recurrence_step(g, ctx.c_of_s.at(s), rep.f.back()));
  for (int s = 2; s <= g + 1; ++s) {
    const int i = ctx.c_of_s.at(s);
    const long z = s - ctx.beta.at(i);
    const Rational first = i == 2 * g + 2 ? Rational(2 * g + 2) : heavy_branch(g, i);
    const Log2Linear rhs = Log2Linear(first + Rational(z - 1) * (2 * i - 3)) + ctx.E_at(i);
    const Rational& f = rep.f[s - 2];
    if (!less_equal(Log2Linear(f), rhs, ctx.precision_bits, "claim 1 at s=" + std::to_string(s))) {
      rep.failures.push_back({s, f, rhs});
    }
  }
  return rep;
}

inline Claim1Report claim1_consistency(int g) { return claim1_consistency(analytic_context(g)); }

// ---------------------------------------------------------------------------
// Theorem verification

enum class Theorem { nonorientable84, orientable67 };

struct TheoremSpec {
  int factor;      // 5 or 4
  int per_genus;   // 84 or 67
  int direct_max;  // 299 or 670
};

inline TheoremSpec theorem_spec(Theorem t) {
  return t == Theorem::nonorientable84 ? TheoremSpec{5, 84, 299} : TheoremSpec{4, 67, 670};
}

struct TheoremReport {
  Theorem theorem = Theorem::nonorientable84;
  int g_max = 0;
  std::vector<int> violations;
  Rational min_direct_slack;  // per_genus*g - (factor f'(g+1) - 1), minimum over the direct range
  int min_direct_slack_g = 0;
  Log2Linear min_analytic_slack;
  int min_analytic_slack_g = 0;
  bool passed() const { return violations.empty(); }
};

namespace detail {

struct GenusCheck {
  bool ok = true;
  bool analytic = false;
  Rational direct_slack;
  Log2Linear analytic_slack;
};

inline GenusCheck check_genus(const TheoremSpec& t, int g, int bits) {
  GenusCheck r;
  if (g <= t.direct_max) {
    const Rational f = optimal_schedule(g, g + 1).f.back();
    r.direct_slack = Rational(t.per_genus * g) - (t.factor * f - 1);
    r.ok = r.direct_slack >= 0;
  } else {
    r.analytic = true;
    r.analytic_slack = Log2Linear(t.per_genus * g + 1) - Rational(t.factor) * analytic_upper_bound(g);
    r.ok = sign(r.analytic_slack, bits, "theorem check at g=" + std::to_string(g)) >= 0;
  }
  return r;
}

}  // namespace detail

/// Direct calculation for g up to the theorem's threshold, the analytic bound
/// above it up to g_max. `jobs` threads split the genus range; results are
/// aggregated in genus order.
inline TheoremReport verify_theorem(Theorem which, int g_max = 2000, int jobs = 1,
                                    int bits = default_precision_bits()) {
  if (g_max < 1) throw InputError("g_max must be at least 1");
  if (jobs < 1) throw InputError("jobs must be at least 1");
  const TheoremSpec spec = theorem_spec(which);
  std::vector<detail::GenusCheck> checks(g_max + 1);
  auto work = [&](int offset) {
    for (int g = 1 + offset; g <= g_max; g += jobs) checks[g] = detail::check_genus(spec, g, bits);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  TheoremReport rep;
  rep.theorem = which;
  rep.g_max = g_max;
  bool have_direct = false, have_analytic = false;
  for (int g = 1; g <= g_max; ++g) {
    const auto& c = checks[g];
    if (!c.ok) rep.violations.push_back(g);
    if (!c.analytic && (!have_direct || c.direct_slack < rep.min_direct_slack)) {
      rep.min_direct_slack = c.direct_slack;
      rep.min_direct_slack_g = g;
      have_direct = true;
    }
    if (c.analytic && (!have_analytic || sign(c.analytic_slack - rep.min_analytic_slack, bits) < 0)) {
      rep.min_analytic_slack = c.analytic_slack;
      rep.min_analytic_slack_g = g;
      have_analytic = true;
    }
  }
  return rep;
}

}  // namespace emax
