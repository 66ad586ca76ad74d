#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/compactify.hpp"
#include "hk/errors.hpp"
#include "hk/gallery.hpp"
#include "hk/hk_function.hpp"
#include "hk/norm_search.hpp"
#include "hk/parallel.hpp"
#include "hk/scalar.hpp"
#include "hk/sequence.hpp"
#include "hk/trend.hpp"

namespace hk {

// Open dyadic subintervals of a bounded base, all depths up to max_depth:
// 1 + 2 + ... + 2^max_depth probes. Step-function mean gaps show up exactly
// against this grid.
template <class S>
std::vector<Interval<S>> dyadic_probes(const Interval<S>& base, int max_depth = 4) {
  std::vector<Interval<S>> probes;
  const S lo = base.lo;
  const S span = base.hi - base.lo;
  for (int d = 0; d <= max_depth; ++d) {
    const long q = 1L << d;
    for (long i = 0; i < q; ++i) {
      S a = lo + span * scalar::from_ratio<S>(i, q);
      S b = lo + span * scalar::from_ratio<S>(i + 1, q);
      probes.push_back(Interval<S>::open(std::move(a), std::move(b)));
    }
  }
  return probes;
}

template <class S>
struct EpsTrend {
  S eps{};
  TrendSeries<S> series;
};

template <class S>
struct ProbeTrend {
  Interval<S> probe;
  TrendSeries<S> series;
};

// n -> lambda{x in I : |g_n(x) - g(x)| > eps}, one series per eps.
template <class S>
std::vector<EpsTrend<S>> in_measure_trend(const FunctionSequence<S>& seq, const StepFn<S>& g,
                                          const std::vector<S>& eps_grid, const Interval<S>& I,
                                          int N, const Schedule& sch,
                                          Exec how = Exec::parallel) {
  std::vector<EpsTrend<S>> out;
  out.reserve(eps_grid.size());
  for (const S& eps : eps_grid) {
    TrendSeries<S> t = make_trend<S>(
        N, [&](int n) { return measure_exceedance(seq.generate(n) - g, eps, I); }, sch, how);
    out.push_back({eps, std::move(t)});
  }
  return out;
}

// n -> integral of |g_n - g| over I.
template <class S>
TrendSeries<S> l1_trend(const FunctionSequence<S>& seq, const StepFn<S>& g, const Interval<S>& I,
                        int N, const Schedule& sch, Exec how = Exec::parallel) {
  return make_trend<S>(N, [&](int n) { return l1_norm(seq.generate(n) - g, I); }, sch, how);
}

// n -> |integral of g_n over probe - integral of g over probe|, per probe.
template <class S>
std::vector<ProbeTrend<S>> interval_mean_trend(const FunctionSequence<S>& seq, const StepFn<S>& g,
                                               const std::vector<Interval<S>>& probes, int N,
                                               const Schedule& sch, Exec how = Exec::parallel) {
  std::vector<ProbeTrend<S>> out;
  out.reserve(probes.size());
  for (const Interval<S>& probe : probes) {
    const S ref = hk_integral(g, probe);
    TrendSeries<S> t = make_trend<S>(
        N, [&](int n) { return scalar::abs_of(hk_integral(seq.generate(n), probe) - ref); },
        sch, how);
    out.push_back({probe, std::move(t)});
  }
  return out;
}

// n -> |integral of f*g_n - integral of f*g| over the whole base.
template <class S>
TrendSeries<S> pairing_trend(const HKFn<S>& f, const FunctionSequence<S>& seq, const StepFn<S>& g,
                             int N, const Schedule& sch, Exec how = Exec::parallel) {
  const S ref = hk_integral(multiply_step(f, g));
  return make_trend<S>(
      N, [&](int n) { return scalar::abs_of(hk_integral(multiply_step(f, seq.generate(n))) - ref); },
      sch, how);
}

// n -> Alexiewicz norm of f*(g_n - g).
template <class S>
TrendSeries<S> alexiewicz_product_trend(const HKFn<S>& f, const FunctionSequence<S>& seq,
                                        const StepFn<S>& g, int N, const Schedule& sch,
                                        Exec how = Exec::parallel,
                                        const SearchOptions& sopt = {}) {
  return make_trend<S>(
      N, [&](int n) { return alexiewicz_norm(multiply_step(f, seq.generate(n) - g), sopt); },
      sch, how);
}

// n -> | norm(f*g_n) - norm(f*g) |.
template <class S>
TrendSeries<S> product_norm_trend(const HKFn<S>& f, const FunctionSequence<S>& seq,
                                  const StepFn<S>& g, int N, const Schedule& sch,
                                  Exec how = Exec::parallel, const SearchOptions& sopt = {}) {
  const S ref = alexiewicz_norm(multiply_step(f, g), sopt);
  return make_trend<S>(
      N,
      [&](int n) {
        return scalar::abs_of(alexiewicz_norm(multiply_step(f, seq.generate(n)), sopt) - ref);
      },
      sch, how);
}

// norm(f*(g_n - g)) >= | norm(f*g_n) - norm(f*g) | for every n <= N.
// Exact in rational mode; the float side gets a small relative slack to
// absorb independent extremum searches.
template <class S>
bool reverse_triangle_check(const HKFn<S>& f, const FunctionSequence<S>& seq, const StepFn<S>& g,
                            int N, Exec how = Exec::parallel) {
  const S ref = alexiewicz_norm(multiply_step(f, g));
  std::vector<char> ok = indexed_map<char>(
      N,
      [&](int i) {
        const StepFn<S> gn = seq.generate(i + 1);
        const S lhs = alexiewicz_norm(multiply_step(f, gn - g));
        const S rhs = scalar::abs_of(alexiewicz_norm(multiply_step(f, gn)) - ref);
        if constexpr (std::is_same_v<S, double>)
          return char(lhs + 1e-9 * (1.0 + std::abs(rhs)) >= rhs);
        else
          return char(!(lhs < rhs));
      },
      how);
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

// |integral of f*h| <= norm(f) * variation(h) for an h that vanishes at the
// left endpoint. Callers pass the normalized multiplier.
template <class S>
bool holder_check(const HKFn<S>& f, const StepFn<S>& h_normalized) {
  const S lhs = scalar::abs_of(hk_integral(multiply_step(f, h_normalized)));
  const S rhs = alexiewicz_norm(f) * total_variation(h_normalized);
  if constexpr (std::is_same_v<S, double>)
    return lhs <= rhs + 1e-9 * (1.0 + std::abs(rhs));
  else
    return !(rhs < lhs);
}

// Observed suprema of the normalized members plus the three hypothesis
// trends. variation_sup and supnorm_sup are the finite-horizon stand-ins for
// the uniform bound M.
template <class S>
struct ConditionReport {
  int N = 0;
  S variation_sup{};
  S supnorm_sup{};
  std::vector<EpsTrend<S>> in_measure;
  TrendSeries<S> l1;
  std::vector<ProbeTrend<S>> interval_means;
};

template <class S>
ConditionReport<S> uniform_bv_report(const FunctionSequence<S>& seq, int N,
                                     Exec how = Exec::parallel) {
  if (N < 1) throw Error("horizon must be at least 1");
  ConditionReport<S> r;
  r.N = N;
  std::vector<S> vars = indexed_map<S>(
      N,
      [&](int i) {
        return total_variation(nbv_normalize(seq.generate(i + 1)).normalized, seq.domain);
      },
      how);
  std::vector<S> sups = indexed_map<S>(
      N,
      [&](int i) { return sup_norm(nbv_normalize(seq.generate(i + 1)).normalized, seq.domain); },
      how);
  for (const S& v : vars) r.variation_sup = std::max(r.variation_sup, v);
  for (const S& v : sups) r.supnorm_sup = std::max(r.supnorm_sup, v);
  return r;
}

template <class S>
ConditionReport<S> condition_report(const FunctionSequence<S>& seq, const StepFn<S>& g,
                                    const std::vector<S>& eps_grid, int probe_depth, int N,
                                    const Schedule& sch, Exec how = Exec::parallel) {
  ConditionReport<S> r = uniform_bv_report(seq, N, how);
  const Interval<S> I = seq.limit.base();
  r.in_measure = in_measure_trend(seq, g, eps_grid, I, N, sch, how);
  r.l1 = l1_trend(seq, g, I, N, sch, how);
  r.interval_means = interval_mean_trend(seq, g, dyadic_probes(I, probe_depth), N, sch, how);
  return r;
}

enum class TheoremId { T1, T2, T3, T4, T5 };

inline const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::T1:
      return "T1";
    case TheoremId::T2:
      return "T2";
    case TheoremId::T3:
      return "T3";
    case TheoremId::T4:
      return "T4";
    default:
      return "T5";
  }
}

inline TheoremId parse_theorem(const std::string& s) {
  if (s == "T1" || s == "t1") return TheoremId::T1;
  if (s == "T2" || s == "t2") return TheoremId::T2;
  if (s == "T3" || s == "t3") return TheoremId::T3;
  if (s == "T4" || s == "t4") return TheoremId::T4;
  if (s == "T5" || s == "t5") return TheoremId::T5;
  throw ParseError("unknown theorem id: " + s);
}

// A trend with its values frozen to strings in the arithmetic mode that
// produced them, so reports and CSV files serialize exactly.
struct TrendReport {
  std::string name;
  std::string mode;  // "rational" | "float"
  std::vector<std::pair<int, std::string>> points;
  Verdict verdict = Verdict::Inconclusive;
  double achieved = 0.0;
};

template <class S>
TrendReport report_of(std::string name, const TrendSeries<S>& t) {
  TrendReport r;
  r.name = std::move(name);
  r.mode = std::is_same_v<S, Rat> ? "rational" : "float";
  r.points.reserve(t.points.size());
  for (const auto& [n, v] : t.points) r.points.emplace_back(n, scalar::str(v));
  r.verdict = t.verdict;
  r.achieved = t.achieved;
  return r;
}

struct ConditionEntry {
  std::string id;  // "interval_means" | "in_measure" | "uniform_bv" | "certificate"
  bool holds = false;
  bool diverged = false;  // some trend on this line came back Diverges
  std::string detail;
  std::vector<TrendReport> trends;
};

struct ConclusionEntry {
  std::string family_id;
  std::string kind;  // "pairing" | "alexiewicz_product" | "product_norm"
  Verdict verdict = Verdict::Inconclusive;
  TrendReport trend;
};

struct Anomaly {
  int n = 0;
  std::string f;
  std::string detail;
};

struct TheoremVerdict {
  std::string theorem;
  std::vector<ConditionEntry> conditions;
  std::vector<ConclusionEntry> conclusions;
  std::vector<Anomaly> anomalies;
  bool ok() const { return anomalies.empty(); }
};

namespace detail {

template <class T>
TrendSeries<T> conclusion_series(const std::string& kind, const HKFn<T>& f,
                                 const FunctionSequence<T>& seq, const StepFn<T>& g, int N,
                                 const Schedule& sch, Exec how) {
  if (kind == "pairing") return pairing_trend(f, seq, g, N, sch, how);
  if (kind == "alexiewicz_product") return alexiewicz_product_trend(f, seq, g, N, sch, how);
  return product_norm_trend(f, seq, g, N, sch, how);
}

}  // namespace detail

// Evaluate one theorem's hypothesis lines and its conclusion block(s) per
// family member at horizon N, then cross-check the two directions:
// conditions all holding forces every conclusion to Converges, and a fully
// converging conclusion block alongside a diverging condition line is
// finite-horizon evidence against necessity. Either mismatch is recorded as
// an anomaly.
//
// Step members run in the caller's arithmetic; antiderivative-backed members
// always run in float, against the float image of the sequence. The T5
// certificate is a declared pointwise limit or an in-measure hypothesis that
// itself converges at every eps.
template <class S>
TheoremVerdict verify_theorem(TheoremId id, const FunctionSequence<S>& seq, const StepFn<S>& g,
                              const std::vector<gallery::FamilyMember>& family, int N,
                              const Schedule& sch, const std::vector<S>& eps_grid,
                              int probe_depth = 4, Exec how = Exec::parallel) {
  if (family.empty()) throw EmptyFamily("no multipliers to test");
  if (N < 1) throw Error("horizon must be at least 1");

  TheoremVerdict out;
  out.theorem = theorem_name(id);

  const FunctionSequence<double> fseq = to_float(seq);
  const StepFn<double> fg = to_float(g);
  Schedule float_sch = sch;
  float_sch.exact_zero = false;

  const Interval<S> I = seq.limit.base();

  auto in_measure_entry = [&]() {
    ConditionEntry c;
    c.id = "in_measure";
    c.holds = true;
    auto trends = in_measure_trend(seq, g, eps_grid, I, N, sch, how);
    for (auto& [eps, t] : trends) {
      c.holds = c.holds && t.verdict == Verdict::Converges;
      c.diverged = c.diverged || t.verdict == Verdict::Diverges;
      c.trends.push_back(report_of("in_measure eps=" + scalar::str(eps), t));
    }
    c.detail = c.holds ? "exceedance tends to 0 at every eps"
                       : "exceedance fails to vanish at some eps";
    return c;
  };

  auto interval_means_entry = [&]() {
    ConditionEntry c;
    c.id = "interval_means";
    c.holds = true;
    auto trends = interval_mean_trend(seq, g, dyadic_probes(I, probe_depth), N, sch, how);
    for (auto& [probe, t] : trends) {
      c.holds = c.holds && t.verdict == Verdict::Converges;
      c.diverged = c.diverged || t.verdict == Verdict::Diverges;
      c.trends.push_back(report_of("interval_mean probe=" + probe.str(), t));
    }
    c.detail = c.holds ? "means converge on every dyadic probe"
                       : "means fail on some dyadic probe";
    return c;
  };

  auto uniform_bv_entry = [&]() {
    ConditionEntry c;
    c.id = "uniform_bv";
    ConditionReport<S> r = uniform_bv_report(seq, N, how);
    c.holds = true;  // the observed bound is finite at any horizon
    c.detail = "normalized members have V <= " + scalar::str(r.variation_sup) +
               " and sup <= " + scalar::str(r.supnorm_sup);
    return c;
  };

  auto conclude = [&](const gallery::FamilyMember& m, const std::string& kind) {
    ConclusionEntry e;
    e.family_id = m.id;
    e.kind = kind;
    bool exact_arm = false;
    if constexpr (std::is_same_v<S, Rat>) exact_arm = m.exact.has_value();
    if (exact_arm) {
      if constexpr (std::is_same_v<S, Rat>) {
        TrendSeries<Rat> t =
            detail::conclusion_series<Rat>(kind, HKFn<Rat>(*m.exact), seq, g, N, sch, how);
        e.verdict = t.verdict;
        e.trend = report_of(kind + " f=" + m.id, t);
      }
    } else {
      TrendSeries<double> t =
          detail::conclusion_series<double>(kind, m.flt, fseq, fg, N, float_sch, how);
      e.verdict = t.verdict;
      e.trend = report_of(kind + " f=" + m.id, t);
    }
    return e;
  };

  auto conclude_all = [&](const std::string& kind) {
    for (const auto& m : family) out.conclusions.push_back(conclude(m, kind));
  };

  switch (id) {
    case TheoremId::T1:
      out.conditions.push_back(interval_means_entry());
      out.conditions.push_back(uniform_bv_entry());
      conclude_all("pairing");
      break;
    case TheoremId::T2:
      out.conditions.push_back(in_measure_entry());
      out.conditions.push_back(uniform_bv_entry());
      conclude_all("pairing");
      break;
    case TheoremId::T3:
      out.conditions.push_back(in_measure_entry());
      out.conditions.push_back(uniform_bv_entry());
      conclude_all("alexiewicz_product");
      break;
    case TheoremId::T4:
      conclude_all("pairing");
      conclude_all("alexiewicz_product");
      break;
    case TheoremId::T5: {
      ConditionEntry cert;
      cert.id = "certificate";
      if (seq.ae_limit_declared) {
        cert.holds = true;
        cert.detail = "generator declares its pointwise limit";
      } else {
        ConditionEntry im = in_measure_entry();
        cert.holds = im.holds;
        cert.detail = im.holds ? "in-measure hypothesis converges at every eps"
                               : "no declared limit and no in-measure convergence";
        cert.trends = std::move(im.trends);
      }
      if (!cert.holds)
        throw MissingCertificate("needs convergence in measure or a declared pointwise limit");
      out.conditions.push_back(std::move(cert));
      conclude_all("product_norm");
      conclude_all("alexiewicz_product");
      break;
    }
  }

  const bool all_conditions_hold =
      std::all_of(out.conditions.begin(), out.conditions.end(),
                  [](const ConditionEntry& c) { return c.holds; });
  const bool any_condition_diverged =
      std::any_of(out.conditions.begin(), out.conditions.end(),
                  [](const ConditionEntry& c) { return c.diverged; });
  auto block_all = [&](const std::string& kind) {
    return std::all_of(out.conclusions.begin(), out.conclusions.end(),
                       [&](const ConclusionEntry& e) {
                         return e.kind != kind || e.verdict == Verdict::Converges;
                       });
  };
  auto block_any_diverges = [&](const std::string& kind) {
    return std::any_of(out.conclusions.begin(), out.conclusions.end(),
                       [&](const ConclusionEntry& e) {
                         return e.kind == kind && e.verdict == Verdict::Diverges;
                       });
  };

  if (id == TheoremId::T1 || id == TheoremId::T2 || id == TheoremId::T3) {
    if (all_conditions_hold) {
      for (const auto& e : out.conclusions)
        if (e.verdict != Verdict::Converges)
          out.anomalies.push_back(
              {N, e.family_id,
               "conditions hold but " + e.kind + " is " + verdict_name(e.verdict)});
    }
    const bool all_converge =
        std::all_of(out.conclusions.begin(), out.conclusions.end(),
                    [](const ConclusionEntry& e) { return e.verdict == Verdict::Converges; });
    if (all_converge && any_condition_diverged)
      out.anomalies.push_back(
          {N, "", "every conclusion converges while a condition line diverges"});
  } else {
    const std::string left = id == TheoremId::T4 ? "pairing" : "product_norm";
    const std::string right = "alexiewicz_product";
    if (block_all(left) && block_any_diverges(right))
      out.anomalies.push_back(
          {N, "", left + " block converges while " + right + " diverges"});
    if (block_all(right) && block_any_diverges(left))
      out.anomalies.push_back(
          {N, "", right + " block converges while " + left + " diverges"});
    if (id == TheoremId::T5 && all_conditions_hold) {
      // with a certificate the two blocks must rise and fall together
      if (block_all(left) != block_all(right))
        out.anomalies.push_back({N, "", "certified run but the two norm blocks disagree"});
    }
  }

  return out;
}

// Upper bound on |integral of f over (n, +inf)| times a variation bound:
// the tail control used alongside unbounded-domain sequences.
inline TrendSeries<double> tail_bound_series(const AntiderivFn& f_ray, double variation_bound,
                                             int N, const Schedule& sch,
                                             Exec how = Exec::parallel) {
  const HKFn<double> f{f_ray};
  return make_trend<double>(
      N,
      [&](int n) {
        HKFn<double> tail =
            HKFn<double>::restrict(f, Interval<double>::ray_up(double(n), true));
        return alexiewicz_norm(tail) * variation_bound;
      },
      sch, how);
}

}  // namespace hk
